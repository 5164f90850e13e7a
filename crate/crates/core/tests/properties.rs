mod common;

use std::collections::HashSet;

use gsft::alphabet::{Alphabet, Subgroup, Tuple};
use gsft::blocks::{PeriodicConfig, Word};
use gsft::chains::intersect_chain;
use gsft::periodic::periodic_points;
use gsft::shiftspace::GroupSFT;
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn alphabet_at(i: usize) -> Alphabet {
    let all = small_alphabets();
    all[i % all.len()].clone()
}

fn random_subgroup(a: &Alphabet, len: usize, r: &mut impl Rng) -> Subgroup {
    let n = r.gen_range(0..=3);
    let gens: Vec<Tuple> = (0..n).map(|_| random_tuple(a, len, r)).collect();
    Subgroup::generated(a, len, &gens).unwrap()
}

fn as_set(h: &Subgroup) -> HashSet<Tuple> {
    h.elements(4096).unwrap().into_iter().collect()
}

/// Largest `k <= want` with `|A|^k <= 4096`.
fn fitting_len(a: &Alphabet, want: usize) -> usize {
    (1..=want).rev().find(|&k| a.order().pow(k as u32) <= 4096).unwrap_or(1)
}

fn config(a: &Alphabet, w: Tuple) -> PeriodicConfig {
    PeriodicConfig::repeat(Word::new(a, w).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intersection_is_a_meet(seed in any::<u64>(), ai in 0usize..14) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let k = fitting_len(&a, r.gen_range(1..=3));
        let h = random_subgroup(&a, k, &mut r);
        let g = random_subgroup(&a, k, &mut r);
        let hg = h.intersect(&g).unwrap();
        prop_assert_eq!(&hg, &g.intersect(&h).unwrap());
        prop_assert_eq!(&h.intersect(&h).unwrap(), &h);
        let (sh, sg) = (as_set(&h), as_set(&g));
        let brute: HashSet<Tuple> = sh.intersection(&sg).cloned().collect();
        prop_assert_eq!(as_set(&hg), brute);
    }

    #[test]
    fn canonical_form_decides_equality(seed in any::<u64>(), ai in 0usize..14) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let k = fitting_len(&a, 2);
        let gens: Vec<Tuple> = (0..3).map(|_| random_tuple(&a, k, &mut r)).collect();
        let h = Subgroup::generated(&a, k, &gens).unwrap();
        let mut shuffled = gens.clone();
        shuffled.reverse();
        shuffled.push(a.mul_tuple(&gens[0], &gens[1]));
        let same = Subgroup::generated(&a, k, &shuffled).unwrap();
        prop_assert_eq!(h.canonical_bytes(), same.canonical_bytes());
        let other = random_subgroup(&a, k, &mut r);
        let equal_sets = closure(&a, k, &gens) == closure(&a, k, &other.generators());
        prop_assert_eq!(equal_sets, h.canonical_bytes() == other.canonical_bytes());
        prop_assert_eq!(equal_sets, h == other);
    }

    #[test]
    fn projection_undoes_lift(seed in any::<u64>(), ai in 0usize..14) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let h = random_subgroup(&a, 2, &mut r);
        let total = 5;
        let first = r.gen_range(0..total - 1);
        let second = r.gen_range(first + 1..total);
        let lifted = h.cylinder_lift(total, &[first, second]).unwrap();
        prop_assert_eq!(&lifted.project(&[first, second]).unwrap(), &h);
        prop_assert_eq!(&lifted.project(&[first]).unwrap(), &h.project(&[0]).unwrap());
    }

    #[test]
    fn image_and_preimage_form_a_galois_connection(seed in any::<u64>(), ai in 0usize..4) {
        let mut r = rng(seed);
        let a = ca_alphabets()[ai].clone();
        let tau = random_ca(&a, &mut r);
        let k = r.gen_range(1..=2);
        let phi = tau.block_map(k).unwrap();
        let n = k + tau.memory() - 1;
        let h = random_subgroup(&a, n, &mut r);
        let kk = random_subgroup(&a, k, &mut r);
        prop_assert!(h.is_subgroup_of(&phi.preimage(&phi.image(&h).unwrap()).unwrap()));
        let full_image = phi.image(&Subgroup::full(&a, n)).unwrap();
        let back = phi.image(&phi.preimage(&kk).unwrap()).unwrap();
        prop_assert_eq!(back, kk.intersect(&full_image).unwrap());
    }

    #[test]
    fn words_form_a_group(seed in any::<u64>(), ai in 0usize..14, len in 1usize..6) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let w = |r: &mut rand_chacha::ChaCha8Rng| Word::new(&a, random_tuple(&a, len, r)).unwrap();
        let (x, y, z) = (w(&mut r), w(&mut r), w(&mut r));
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        let e = Word::identity(&a, len);
        prop_assert_eq!(&x.mul(&e).unwrap(), &x);
        prop_assert_eq!(&e.mul(&x).unwrap(), &x);
        prop_assert!(x.mul(&x.inv()).unwrap().is_identity());
        prop_assert!(x.inv().mul(&x).unwrap().is_identity());
    }

    #[test]
    fn wrapped_windows_occur_in_the_unrolling(seed in any::<u64>(), p in 1usize..6, k in 1usize..8) {
        let mut r = rng(seed);
        let a = Alphabet::gf(3).unwrap();
        let c = config(&a, random_tuple(&a, p, &mut r));
        let unrolled = c.unroll(k + p).subwords(k).unwrap();
        for w in c.wrap_subwords(k) {
            prop_assert!(unrolled.contains(&w));
        }
    }

    #[test]
    fn block_restrictions_are_compatible(seed in any::<u64>(), ai in 0usize..14) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let s = random_sft(&a, r.gen_range(1..=3), &mut r);
        let id = config(&a, vec![a.identity()]);
        prop_assert!(s.member_periodic(&id).unwrap());
        for k in 1..=4 {
            let next = s.blocks(k + 1).unwrap();
            let here = s.blocks(k).unwrap();
            prop_assert_eq!(&next.project_range(0, k).unwrap(), &here);
            prop_assert_eq!(&next.project_range(1, k + 1).unwrap(), &here);
        }
    }

    #[test]
    fn essentialize_and_widen_preserve_the_shift(seed in any::<u64>(), ai in 0usize..14) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let m = r.gen_range(1..=3);
        let s = random_sft(&a, m, &mut r);
        let (e, steps) = s.essentialize_counted();
        prop_assert!(steps <= a.chain_length_bound(m));
        prop_assert!(s.equals(&e).unwrap());
        let again = e.essentialize();
        prop_assert_eq!(again.pattern(), e.pattern());
        for m2 in m..=m + 4 {
            prop_assert!(s.widen(m2).unwrap().equals(&s).unwrap());
        }
    }

    #[test]
    fn periodic_points_match_definition(seed in any::<u64>(), ai in 0usize..14) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        prop_assume!(a.order() <= 8);
        let s = random_sft(&a, r.gen_range(1..=3), &mut r);
        let pattern = pattern_set(&s);
        for p in (1..=6).filter(|&p| a.order().pow(p as u32) <= 4096) {
            let points = periodic_points(&s, p).unwrap();
            prop_assert!(points.contains(&a.identity_tuple(p)));
            for w in all_words(&a, p) {
                let by_definition = periodic_ok(&pattern, s.window(), &w);
                prop_assert_eq!(by_definition, s.member_periodic(&config(&a, w.clone())).unwrap());
                prop_assert_eq!(by_definition, points.contains(&w));
            }
        }
    }

    #[test]
    fn periodic_points_unroll_into_multiples(seed in any::<u64>(), ai in 0usize..14, p in 1usize..4, d in 2usize..4) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let s = random_sft(&a, r.gen_range(1..=2), &mut r);
        let small = periodic_points(&s, p).unwrap();
        let big = periodic_points(&s, d * p).unwrap();
        for g in small.generators() {
            let unrolled: Tuple = (0..d * p).map(|i| g[i % p]).collect();
            prop_assert!(big.contains(&unrolled));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn image_blocks_are_images_of_blocks(seed in any::<u64>(), ai in 0usize..4) {
        let mut r = rng(seed);
        let a = ca_alphabets()[ai].clone();
        let tau = random_ca(&a, &mut r);
        let s = random_sft(&a, 2, &mut r);
        let img = tau.image_sft(&s).unwrap();
        let m = tau.memory();
        for k in 1..=6 {
            let direct = tau.block_map(k).unwrap().image(&s.blocks(k + m - 1).unwrap()).unwrap();
            prop_assert_eq!(img.blocks(k).unwrap(), direct);
        }
    }

    #[test]
    fn composition_is_coherent(seed in any::<u64>(), ai in 0usize..4, len in 5usize..9) {
        let mut r = rng(seed);
        let a = ca_alphabets()[ai].clone();
        let t1 = random_ca(&a, &mut r);
        let t2 = random_ca(&a, &mut r);
        let both = t2.compose(&t1).unwrap();
        let w = Word::new(&a, random_tuple(&a, len, &mut r)).unwrap();
        prop_assert_eq!(both.apply_word(&w).unwrap(), t2.apply_word(&t1.apply_word(&w).unwrap()).unwrap());
        let c = config(&a, random_tuple(&a, 3, &mut r));
        prop_assert_eq!(both.apply_periodic(&c).unwrap(), t2.apply_periodic(&t1.apply_periodic(&c).unwrap()).unwrap());
    }

    #[test]
    fn limit_sets_are_fixed_and_descend_boundedly(seed in any::<u64>(), ai in 0usize..4) {
        let mut r = rng(seed);
        let a = ca_alphabets()[ai].clone();
        let tau = random_ca(&a, &mut r);
        let l = tau.limit_set(&GroupSFT::full(&a), 16, 64).unwrap();
        let width = l.chain.iter().map(GroupSFT::window).max().unwrap();
        prop_assert!(l.stability_index <= a.chain_length_bound(width));
        prop_assert!(tau.image_sft(&l.omega).unwrap().equals(&l.omega).unwrap());
        for pair in l.chain.windows(2) {
            prop_assert!(pair[0].contains(&pair[1]).unwrap());
        }
    }

    #[test]
    fn preimages_are_sound_on_periodic_points(seed in any::<u64>(), ai in 0usize..4) {
        let mut r = rng(seed);
        let a = ca_alphabets()[ai].clone();
        let tau = random_ca(&a, &mut r);
        let s2 = random_sft(&a, r.gen_range(1..=2), &mut r);
        let pre = tau.preimage_sft(&s2).unwrap();
        for _ in 0..32 {
            let c = config(&a, random_tuple(&a, r.gen_range(1..=5), &mut r));
            prop_assert_eq!(pre.member_periodic(&c).unwrap(), s2.member_periodic(&tau.apply_periodic(&c).unwrap()).unwrap());
        }
    }

    #[test]
    fn running_intersections_descend(seed in any::<u64>(), ai in 0usize..14) {
        let mut r = rng(seed);
        let a = alphabet_at(ai);
        let shifts: Vec<GroupSFT> = (0..4).map(|_| random_sft(&a, r.gen_range(1..=2), &mut r)).collect();
        let (last, report) = intersect_chain(&shifts).unwrap();
        let mut direct = shifts[0].clone();
        for s in &shifts[1..] {
            direct = direct.intersect(s).unwrap();
        }
        prop_assert!(last.equals(&direct).unwrap());
        prop_assert!(report.strict_descents <= report.bound);
        for s in &shifts {
            prop_assert!(s.contains(&last).unwrap());
        }
    }
}
