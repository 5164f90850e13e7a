//! Seeded corpora and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use gsft::alphabet::{Alphabet, Elem, Homomorphism, Tuple};
use gsft::ca::GroupCA;
use gsft::shiftspace::GroupSFT;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Alphabets of order at most 12.
pub fn small_alphabets() -> Vec<Alphabet> {
    vec![
        Alphabet::gf(2).unwrap(),
        Alphabet::gf(3).unwrap(),
        Alphabet::gf(5).unwrap(),
        Alphabet::gf(7).unwrap(),
        Alphabet::gf(11).unwrap(),
        Alphabet::vector_space(2, 2).unwrap(),
        Alphabet::vector_space(2, 3).unwrap(),
        Alphabet::vector_space(3, 2).unwrap(),
        Alphabet::cyclic(4).unwrap(),
        Alphabet::cyclic(6).unwrap(),
        Alphabet::cyclic_product(vec![2, 4]).unwrap(),
        Alphabet::symmetric(3).unwrap(),
        // dihedral of order 8
        Alphabet::permutation(4, vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]]).unwrap(),
        // alternating of order 12
        Alphabet::permutation(4, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap(),
    ]
}

/// Alphabets of the CA corpus.
pub fn ca_alphabets() -> Vec<Alphabet> {
    vec![
        Alphabet::gf(2).unwrap(),
        Alphabet::gf(3).unwrap(),
        Alphabet::vector_space(2, 2).unwrap(),
        Alphabet::symmetric(3).unwrap(),
    ]
}

pub fn random_elem(a: &Alphabet, r: &mut impl Rng) -> Elem {
    if r.gen_bool(0.25) {
        a.identity()
    } else {
        r.gen_range(0..a.order() as Elem)
    }
}

pub fn random_tuple(a: &Alphabet, len: usize, r: &mut impl Rng) -> Tuple {
    (0..len).map(|_| random_elem(a, r)).collect()
}

pub fn random_sft(a: &Alphabet, window: usize, r: &mut impl Rng) -> GroupSFT {
    let n = r.gen_range(1..=3);
    let gens: Vec<Tuple> = (0..n).map(|_| random_tuple(a, window, r)).collect();
    GroupSFT::from_generators(a, window, &gens).unwrap()
}

/// 100 shifts over [`small_alphabets`] with windows up to 3.
pub fn sft_corpus(seed: u64, count: usize) -> Vec<GroupSFT> {
    let mut r = rng(seed);
    let alphabets = small_alphabets();
    (0..count)
        .map(|_| {
            let a = alphabets.choose(&mut r).unwrap();
            let m = r.gen_range(1..=3);
            random_sft(a, m, &mut r)
        })
        .collect()
}

/// A random group CA `a -> a` with memory up to 3.
pub fn random_ca(a: &Alphabet, r: &mut impl Rng) -> GroupCA {
    let m = r.gen_range(1..=3);
    if let Some((p, dim)) = a.vector_space_params() {
        let rows = (0..dim).map(|_| (0..m * dim).map(|_| r.gen_range(0..p)).collect()).collect();
        return GroupCA::new(Homomorphism::from_matrix(a, m, a, 1, rows).unwrap()).unwrap();
    }
    // S_3: one coordinate through a conjugation, or all through sign maps into one ⟨t⟩
    let gens: Vec<Elem> = a.generators().to_vec();
    let unit = |i: usize, g: Elem| {
        let mut t = a.identity_tuple(m);
        t[i] = g;
        t
    };
    let domain: Vec<Tuple> = (0..m).flat_map(|i| gens.iter().map(move |&g| unit(i, g))).collect();
    let sign = |x: Elem| {
        let p = a.permutation_of(x).unwrap();
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        inversions % 2
    };
    let images: Vec<Tuple> = if r.gen_bool(0.5) {
        let i = r.gen_range(0..m);
        let c = r.gen_range(0..a.order() as Elem);
        let ci = a.inv(c);
        (0..m)
            .flat_map(|j| {
                gens.iter()
                    .map(move |&g| if j == i { vec![a.mul(a.mul(c, g), ci)] } else { vec![a.identity()] })
            })
            .collect::<Vec<_>>()
    } else {
        let transpositions: Vec<Elem> = a.elements().filter(|&x| x != a.identity() && a.mul(x, x) == a.identity()).collect();
        let t = *transpositions.choose(r).unwrap();
        let used: Vec<bool> = (0..m).map(|_| r.gen_bool(0.7)).collect();
        (0..m)
            .flat_map(|j| {
                let used = used[j];
                gens.iter().map(move |&g| vec![if used && sign(g) == 1 { t } else { a.identity() }])
            })
            .collect()
    };
    GroupCA::new(Homomorphism::from_generator_images(a, m, a, 1, &domain, &images).unwrap()).unwrap()
}

/// `(τ, S)` pairs: each CA with the full shift and with a window-2 shift.
pub fn ca_corpus(seed: u64, count: usize) -> Vec<(GroupCA, GroupSFT)> {
    let mut r = rng(seed);
    let alphabets = ca_alphabets();
    (0..count)
        .map(|i| {
            let a = &alphabets[i % alphabets.len()];
            let tau = random_ca(a, &mut r);
            let s = if i % 2 == 0 { GroupSFT::full(a) } else { random_sft(a, 2, &mut r) };
            (tau, s)
        })
        .collect()
}

/// Subgroup of `A^len` generated by `gens`, by breadth-first closure.
pub fn closure(a: &Alphabet, len: usize, gens: &[Tuple]) -> HashSet<Tuple> {
    let mut seen = HashSet::new();
    let start = a.identity_tuple(len);
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = a.mul_tuple(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Allowed patterns of `s`, recomputed from its generators.
pub fn pattern_set(s: &GroupSFT) -> HashSet<Tuple> {
    closure(s.alphabet(), s.window(), &s.pattern().generators())
}

/// Whether `w^∞` satisfies every window of `pattern` (window length `m`).
pub fn periodic_ok(pattern: &HashSet<Tuple>, m: usize, w: &[Elem]) -> bool {
    let p = w.len();
    let mut window = vec![0; m];
    (0..p).all(|i| {
        for (j, x) in window.iter_mut().enumerate() {
            *x = w[(i + j) % p];
        }
        pattern.contains(&window)
    })
}

/// All words of length `len`, in lexicographic order of element indices.
pub fn all_words(a: &Alphabet, len: usize) -> impl Iterator<Item = Tuple> {
    let q = a.order();
    let total = q.pow(len as u32);
    (0..total).map(move |mut n| {
        (0..len)
            .map(|_| {
                let x = (n % q) as Elem;
                n /= q;
                x
            })
            .collect()
    })
}

/// Period-`p` words of the shift with allowed patterns `pattern`, by depth-first search.
pub fn periodic_words(a: &Alphabet, pattern: &HashSet<Tuple>, m: usize, p: usize, mut visit: impl FnMut(&[Elem]) -> bool) {
    fn go(
        a: &Alphabet,
        pattern: &HashSet<Tuple>,
        m: usize,
        p: usize,
        w: &mut Vec<Elem>,
        visit: &mut dyn FnMut(&[Elem]) -> bool,
    ) -> bool {
        if w.len() == p {
            return if periodic_ok(pattern, m, w) { visit(w) } else { true };
        }
        for x in a.elements() {
            w.push(x);
            let n = w.len();
            let ok = n < m || pattern.contains(&w[n - m..]);
            if ok && !go(a, pattern, m, p, w, visit) {
                w.pop();
                return false;
            }
            w.pop();
        }
        true
    }
    let mut w = Vec::with_capacity(p);
    go(a, pattern, m, p, &mut w, &mut visit);
}

/// Length-`k` windows of periodic points with period at most `max_period`.
/// Stops early once `stop_at` distinct windows are found.
pub fn brute_windows(s: &GroupSFT, k: usize, max_period: usize, stop_at: usize) -> BTreeSet<Tuple> {
    let a = s.alphabet();
    let pattern = pattern_set(s);
    let mut found = BTreeSet::new();
    for p in 1..=max_period {
        periodic_words(a, &pattern, s.window(), p, |w| {
            for i in 0..p {
                found.insert((0..k).map(|j| w[(i + j) % p]).collect());
            }
            found.len() < stop_at
        });
        if found.len() >= stop_at {
            break;
        }
    }
    found
}
