//! Named alphabets, shifts and automata used throughout the examples.

use crate::alphabet::{Alphabet, Elem, Homomorphism};
use crate::ca::GroupCA;
use crate::error::Result;
use crate::shiftspace::GroupSFT;

/// `GF(p)`; panics unless `p` is a prime below the table cap.
pub fn gf(p: u32) -> Alphabet {
    Alphabet::gf(p).expect("prime field")
}

pub fn gf2_2() -> Alphabet {
    Alphabet::vector_space(2, 2).expect("GF(2)^2")
}

pub fn s3() -> Alphabet {
    Alphabet::symmetric(3).expect("S_3")
}

/// `(a, b)` in `GF(2)^2`.
pub fn pair(a: u32, b: u32) -> Elem {
    gf2_2().from_residues(&[a, b]).expect("residues mod 2")
}

pub fn full(a: &Alphabet) -> GroupSFT {
    GroupSFT::full(a)
}

/// Constant configurations over `GF(p)`.
pub fn constants(p: u32) -> GroupSFT {
    GroupSFT::from_generators(&gf(p), 2, &[vec![1, 1]]).expect("window 2")
}

/// `x_(n+1) = 0` only: the pattern `{(0,0), (1,0)}`, whose only point is zero.
pub fn zero_trap() -> GroupSFT {
    GroupSFT::from_generators(&gf(2), 2, &[vec![1, 0]]).expect("window 2")
}

/// `x_(n+1) = a x_n` over `GF(p)`.
pub fn orbit(p: u32, a: u32) -> GroupSFT {
    GroupSFT::from_generators(&gf(p), 2, &[vec![1, a % p]]).expect("window 2")
}

/// Configurations over `GF(2)^2` whose second coordinate vanishes.
pub fn second_zero() -> GroupSFT {
    GroupSFT::from_generators(&gf2_2(), 1, &[vec![pair(1, 0)]]).expect("window 1")
}

/// `GF(2)^2` with `a_(n+1) = b_n`.
pub fn delay() -> GroupSFT {
    GroupSFT::from_generators(
        &gf2_2(),
        2,
        &[vec![pair(1, 0), 0], vec![pair(0, 1), pair(1, 0)], vec![0, pair(0, 1)]],
    )
    .expect("window 2")
}

/// `GF(2)^2` with `(a, b)_(n+1) = (b, a)_n`; not irreducible.
pub fn swap() -> GroupSFT {
    GroupSFT::from_generators(&gf2_2(), 2, &[vec![pair(1, 0), pair(0, 1)], vec![pair(0, 1), pair(1, 0)]])
        .expect("window 2")
}

/// The period-`k` shift `x_n = x_(n+k)` over `a`.
pub fn shift_equality(a: &Alphabet, k: usize) -> Result<GroupSFT> {
    let gens: Vec<Vec<Elem>> = (0..k)
        .flat_map(|i| {
            a.generators().iter().map(move |&g| {
                let mut t = a.identity_tuple(k + 1);
                t[i] = g;
                if i == 0 {
                    t[k] = g;
                }
                t
            })
        })
        .collect();
    GroupSFT::from_generators(a, k + 1, &gens)
}

/// `y_n = x_n + x_(n+1)` over `GF(2)`.
pub fn tau_sum() -> GroupCA {
    GroupCA::new(Homomorphism::from_matrix(&gf(2), 2, &gf(2), 1, vec![vec![1, 1]]).expect("matrix"))
        .expect("memory 2")
}

/// `(a, b)_n ↦ (a_n + a_(n+1), 0)` over `GF(2)^2`.
pub fn tau_drop() -> GroupCA {
    let v = gf2_2();
    GroupCA::new(Homomorphism::from_matrix(&v, 2, &v, 1, vec![vec![1, 0, 1, 0], vec![0, 0, 0, 0]]).expect("matrix"))
        .expect("memory 2")
}

/// `y_n = (12)^(sgn x_n + sgn x_(n+1))` on `S_3`.
pub fn tau_sign() -> GroupCA {
    let s3 = s3();
    let t = s3.element_of_permutation(&[1, 0, 2]).expect("transposition");
    let c = s3.element_of_permutation(&[1, 2, 0]).expect("3-cycle");
    let rule = Homomorphism::from_generator_images(
        &s3,
        2,
        &s3,
        1,
        &[vec![t, 0], vec![c, 0], vec![0, t], vec![0, c]],
        &[vec![t], vec![0], vec![t], vec![0]],
    )
    .expect("sign map");
    GroupCA::new(rule).expect("memory 2")
}

/// `τ^n`, with `τ^0` the identity.
pub fn power(tau: &GroupCA, n: usize) -> GroupCA {
    let mut acc = GroupCA::identity(tau.domain());
    for _ in 0..n {
        acc = tau.compose(&acc).expect("endomorphism");
    }
    acc
}
