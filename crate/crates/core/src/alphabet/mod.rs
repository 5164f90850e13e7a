//! Admissible alphabets: finite groups and finite-dimensional GF(p) vector spaces.
//!
//! Every alphabet enumerates its elements as indices `0..order`. Finite groups are
//! given by a Cayley table, a product of cyclic groups, or a permutation group;
//! vector spaces `GF(p)^n` index a residue vector `(r_0, .., r_{n-1})` as
//! `sum r_i p^i`. Powers `A^d` index a tuple `(a_0, .., a_{d-1})` as
//! `sum a_i |A|^i`, so a tuple over `A` and the grouped element of `A^d` carry the
//! same digits.

mod chain;
pub(crate) mod gfp;
mod hom;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub use hom::Homomorphism;
pub use subgroup::{Completer, Subgroup, DEFAULT_ENUMERATION_CAP};

/// Index of an alphabet element.
pub type Elem = u32;

/// A tuple of alphabet elements, i.e. a point of `A^k`.
pub type Tuple = Vec<Elem>;

/// Largest Cayley table accepted from user input (associativity is checked exhaustively).
pub const MAX_TABLE_ORDER: usize = 256;

/// Largest permutation group materialized as an alphabet.
pub const MAX_PERMUTATION_ORDER: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlphabetKind {
    Table {
        mul: Vec<Vec<Elem>>,
        inverse: Vec<Elem>,
        identity: Elem,
    },
    CyclicProduct {
        orders: Vec<u32>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    VectorSpace {
        p: u32,
        dim: usize,
    },
    /// The direct power `base^exponent`, produced by block recoding.
    Power {
        base: Alphabet,
        exponent: usize,
    },
}

enum Ops {
    Table {
        n: usize,
        mul: Vec<Elem>,
        inv: Vec<Elem>,
        identity: Elem,
    },
    Radix {
        radices: Vec<u32>,
    },
    Power {
        base: Alphabet,
        d: usize,
    },
}

impl Ops {
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Ops::Table { n, mul, .. } => mul[a as usize * n + b as usize],
            Ops::Radix { radices } => {
                let (mut a, mut b) = (a, b);
                let mut out = 0u64;
                let mut scale = 1u64;
                for &r in radices {
                    let s = ((a % r) as u64 + (b % r) as u64) % r as u64;
                    out += s * scale;
                    scale *= r as u64;
                    a /= r;
                    b /= r;
                }
                out as Elem
            }
            Ops::Power { base, d } => {
                let q = base.order() as u32;
                let (mut a, mut b) = (a, b);
                let mut out = 0u64;
                let mut scale = 1u64;
                for _ in 0..*d {
                    out += base.mul(a % q, b % q) as u64 * scale;
                    scale *= q as u64;
                    a /= q;
                    b /= q;
                }
                out as Elem
            }
        }
    }

    fn inv(&self, a: Elem) -> Elem {
        match self {
            Ops::Table { inv, .. } => inv[a as usize],
            Ops::Radix { radices } => {
                let mut a = a;
                let mut out = 0u64;
                let mut scale = 1u64;
                for &r in radices {
                    let s = (r - a % r) % r;
                    out += s as u64 * scale;
                    scale *= r as u64;
                    a /= r;
                }
                out as Elem
            }
            Ops::Power { base, d } => {
                let q = base.order() as u32;
                let mut a = a;
                let mut out = 0u64;
                let mut scale = 1u64;
                for _ in 0..*d {
                    out += base.inv(a % q) as u64 * scale;
                    scale *= q as u64;
                    a /= q;
                }
                out as Elem
            }
        }
    }

    fn generating_set(&self) -> Vec<Elem> {
        match self {
            Ops::Radix { radices } => {
                let mut scale = 1u64;
                radices
                    .iter()
                    .map(|&r| {
                        let g = scale as Elem;
                        scale *= r as u64;
                        g
                    })
                    .collect()
            }
            Ops::Power { base, d } => {
                let q = base.order();
                let mut out = Vec::new();
                let mut scale = 1u64;
                for _ in 0..*d {
                    for &g in base.generators() {
                        out.push((g as u64 * scale) as Elem);
                    }
                    scale *= q;
                }
                out
            }
            Ops::Table { n, identity, .. } => {
                let n = *n;
                let mut gens = Vec::new();
                let mut inside = vec![false; n];
                inside[*identity as usize] = true;
                let mut members = vec![*identity];
                for a in 0..n as Elem {
                    if inside[a as usize] {
                        continue;
                    }
                    gens.push(a);
                    // re-close under right multiplication by all generators
                    let mut queue: VecDeque<Elem> = members.iter().copied().collect();
                    while let Some(x) = queue.pop_front() {
                        for &g in &gens {
                            let y = self.mul(x, g);
                            if !inside[y as usize] {
                                inside[y as usize] = true;
                                members.push(y);
                                queue.push_back(y);
                            }
                        }
                    }
                }
                gens
            }
        }
    }
}

struct Inner {
    kind: AlphabetKind,
    order: u64,
    ops: Ops,
    generators: Vec<Elem>,
    permutations: Option<Vec<Vec<usize>>>,
}

/// A finite group alphabet. Cheap to clone.
#[derive(Clone)]
pub struct Alphabet(Arc<Inner>);

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl Eq for Alphabet {}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.kind.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.describe())
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_order(radices: impl IntoIterator<Item = u64>) -> Option<u64> {
    let mut order = 1u64;
    for r in radices {
        order = order.checked_mul(r)?;
    }
    (order <= u32::MAX as u64).then_some(order)
}

impl Alphabet {
    fn from_parts(kind: AlphabetKind, order: u64, ops: Ops, permutations: Option<Vec<Vec<usize>>>) -> Self {
        let generators = ops.generating_set();
        Alphabet(Arc::new(Inner {
            kind,
            order,
            ops,
            generators,
            permutations,
        }))
    }

    /// A group given by its Cayley table. `inverse` is computed when absent.
    pub fn table(mul: Vec<Vec<Elem>>, identity: Elem, inverse: Option<Vec<Elem>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidAlphabet("multiplication table is empty".into()));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::cap(
                "Cayley table order",
                MAX_TABLE_ORDER as u64,
                "present large groups as permutation groups or cyclic products",
            ));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAlphabet(format!("row {i} has length {}, expected {n}", row.len())));
            }
            if let Some(bad) = row.iter().find(|&&x| x as usize >= n) {
                return Err(Error::InvalidAlphabet(format!("row {i} contains out-of-range entry {bad}")));
            }
        }
        let id = identity as usize;
        if id >= n {
            return Err(Error::InvalidAlphabet(format!("identity index {identity} out of range")));
        }
        for a in 0..n {
            if mul[id][a] as usize != a || mul[a][id] as usize != a {
                return Err(Error::InvalidAlphabet(format!("{identity} is not a two-sided identity (fails at {a})")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a][b] as usize;
                for c in 0..n {
                    if mul[ab][c] != mul[a][mul[b][c] as usize] {
                        return Err(Error::InvalidAlphabet(format!("table is not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverse = match inverse {
            Some(inv) => {
                if inv.len() != n {
                    return Err(Error::InvalidAlphabet("inverse table has wrong length".into()));
                }
                for (a, &b) in inv.iter().enumerate() {
                    if b as usize >= n || mul[a][b as usize] != identity || mul[b as usize][a] != identity {
                        return Err(Error::InvalidAlphabet(format!("inverse table entry {a} is not a two-sided inverse")));
                    }
                }
                inv
            }
            None => {
                let mut inv = Vec::with_capacity(n);
                for (a, row) in mul.iter().enumerate() {
                    match row.iter().position(|&x| x == identity) {
                        Some(b) if mul[b][a] == identity => inv.push(b as Elem),
                        _ => return Err(Error::InvalidAlphabet(format!("element {a} has no two-sided inverse"))),
                    }
                }
                inv
            }
        };
        let flat: Vec<Elem> = mul.iter().flatten().copied().collect();
        let ops = Ops::Table {
            n,
            mul: flat,
            inv: inverse.clone(),
            identity,
        };
        let kind = AlphabetKind::Table {
            mul,
            inverse,
            identity,
        };
        Ok(Self::from_parts(kind, n as u64, ops, None))
    }

    /// The product `Z/o_1 x .. x Z/o_r`.
    pub fn cyclic_product(orders: Vec<u32>) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|&&o| o < 2) {
            return Err(Error::InvalidAlphabet(format!("cyclic factor order {bad} must be at least 2")));
        }
        let order = checked_order(orders.iter().map(|&o| o as u64))
            .ok_or_else(|| Error::cap("alphabet order", u32::MAX as u64, "use fewer or smaller factors"))?;
        let ops = Ops::Radix {
            radices: orders.clone(),
        };
        Ok(Self::from_parts(AlphabetKind::CyclicProduct { orders }, order, ops, None))
    }

    pub fn cyclic(order: u32) -> Result<Self> {
        Self::cyclic_product(vec![order])
    }

    /// The permutation group generated by `generators` acting on `0..degree`.
    ///
    /// Elements are indexed by the lexicographic order of their image arrays, so the
    /// identity is always index 0. Products compose right to left: `(a * b)(i) = a(b(i))`.
    pub fn permutation(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidAlphabet("permutation degree must be positive".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InvalidAlphabet(format!("generator {i} has length {}, expected {degree}", g.len())));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(Error::InvalidAlphabet(format!("generator {i} is not a bijection of 0..{degree}")));
                }
                seen[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = VecDeque::from([identity.clone()]);
        while let Some(p) = queue.pop_front() {
            for g in &generators {
                let q = compose(&p, g);
                if !seen.contains_key(&q) {
                    if seen.len() >= MAX_PERMUTATION_ORDER {
                        return Err(Error::cap(
                            "permutation group order",
                            MAX_PERMUTATION_ORDER as u64,
                            "choose generators of a smaller group",
                        ));
                    }
                    seen.insert(q.clone(), ());
                    queue.push_back(q);
                }
            }
        }
        let mut elems: Vec<Vec<usize>> = seen.into_keys().collect();
        elems.sort();
        let index: HashMap<&[usize], Elem> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i as Elem)).collect();
        let n = elems.len();
        let mut mul = vec![0 as Elem; n * n];
        let mut inv = vec![0 as Elem; n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i * n + j] = index[compose(a, b).as_slice()];
            }
            let mut ai = vec![0usize; degree];
            for (x, &y) in a.iter().enumerate() {
                ai[y] = x;
            }
            inv[i] = index[ai.as_slice()];
        }
        let ops = Ops::Table {
            n,
            mul,
            inv,
            identity: 0,
        };
        let kind = AlphabetKind::Permutation { degree, generators };
        Ok(Self::from_parts(kind, n as u64, ops, Some(elems)))
    }

    /// The symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut t: Vec<usize> = (0..degree).collect();
            t.swap(0, 1);
            gens.push(t);
        }
        if degree >= 3 {
            gens.push((0..degree).map(|i| (i + 1) % degree).collect());
        }
        Self::permutation(degree.max(1), gens)
    }

    /// `GF(p)^dim`.
    pub fn vector_space(p: u32, dim: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidAlphabet(format!("p must be prime (got {p})")));
        }
        let order = checked_order(std::iter::repeat_n(p as u64, dim))
            .ok_or_else(|| Error::cap("alphabet order", u32::MAX as u64, "use a smaller dimension"))?;
        let ops = Ops::Radix {
            radices: vec![p; dim],
        };
        Ok(Self::from_parts(AlphabetKind::VectorSpace { p, dim }, order, ops, None))
    }

    /// `GF(p)`.
    pub fn gf(p: u32) -> Result<Self> {
        Self::vector_space(p, 1)
    }

    /// The direct power `A^d`, indexed so that tuples over `A` group into elements of `A^d`.
    pub fn power(&self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        if d == 1 {
            return Ok(self.clone());
        }
        match &self.0.kind {
            AlphabetKind::VectorSpace { p, dim } => Self::vector_space(*p, dim * d),
            AlphabetKind::CyclicProduct { orders } => {
                Self::cyclic_product(orders.iter().copied().cycle().take(orders.len() * d).collect())
            }
            AlphabetKind::Power { base, exponent } => base.power(exponent * d),
            _ => {
                let order = checked_order(std::iter::repeat_n(self.order(), d))
                    .ok_or_else(|| Error::cap("alphabet order", u32::MAX as u64, "use a smaller block length"))?;
                let ops = Ops::Power {
                    base: self.clone(),
                    d,
                };
                let kind = AlphabetKind::Power {
                    base: self.clone(),
                    exponent: d,
                };
                Ok(Self::from_parts(kind, order, ops, None))
            }
        }
    }

    pub fn kind(&self) -> &AlphabetKind {
        &self.0.kind
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn identity(&self) -> Elem {
        match &self.0.ops {
            Ops::Table { identity, .. } => *identity,
            Ops::Radix { .. } | Ops::Power { .. } => 0,
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        (a as u64) < self.0.order
    }

    pub fn check(&self, a: Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: a as u64,
                order: self.order(),
            })
        }
    }

    pub fn check_tuple(&self, t: &[Elem], arity: usize) -> Result<()> {
        if t.len() != arity {
            return Err(Error::Arity {
                expected: arity,
                found: t.len(),
            });
        }
        t.iter().try_for_each(|&a| self.check(a))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.ops.mul(a, b)
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.0.ops.inv(a)
    }

    /// `(p, dim)` when the alphabet is a GF(p) vector space.
    pub fn vector_space_params(&self) -> Option<(u32, usize)> {
        match self.0.kind {
            AlphabetKind::VectorSpace { p, dim } => Some((p, dim)),
            _ => None,
        }
    }

    pub fn is_vector_space(&self) -> bool {
        self.vector_space_params().is_some()
    }

    /// Residue vector of a vector-space element.
    pub fn residues(&self, a: Elem) -> Vec<u32> {
        let (p, dim) = self.vector_space_params().expect("residues() requires a vector space alphabet");
        let mut a = a;
        (0..dim)
            .map(|_| {
                let r = a % p;
                a /= p;
                r
            })
            .collect()
    }

    pub fn from_residues(&self, residues: &[u32]) -> Result<Elem> {
        let (p, dim) = self
            .vector_space_params()
            .ok_or_else(|| Error::InvalidArgument("residue vectors need a vector space alphabet".into()))?;
        if residues.len() != dim {
            return Err(Error::Arity {
                expected: dim,
                found: residues.len(),
            });
        }
        let mut out = 0u64;
        for &r in residues.iter().rev() {
            if r >= p {
                return Err(Error::InvalidElement {
                    element: r as u64,
                    order: p as u64,
                });
            }
            out = out * p as u64 + r as u64;
        }
        Ok(out as Elem)
    }

    /// Image array of a permutation-group element.
    pub fn permutation_of(&self, a: Elem) -> Option<&[usize]> {
        self.0.permutations.as_ref().map(|v| v[a as usize].as_slice())
    }

    pub fn element_of_permutation(&self, images: &[usize]) -> Option<Elem> {
        let perms = self.0.permutations.as_ref()?;
        perms.binary_search_by(|p| p.as_slice().cmp(images)).ok().map(|i| i as Elem)
    }

    /// A generating set of the alphabet (small, deterministic).
    pub fn generators(&self) -> &[Elem] {
        &self.0.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.order as Elem
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Digits of an element of a power alphabet `B^d` (`None` for other alphabets).
    pub fn power_digits(&self, a: Elem) -> Option<Vec<Elem>> {
        let (q, d) = match &self.0.kind {
            AlphabetKind::Power { base, exponent } => (base.order() as u32, *exponent),
            _ => return None,
        };
        let mut a = a;
        Some(
            (0..d)
                .map(|_| {
                    let r = a % q;
                    a /= q;
                    r
                })
                .collect(),
        )
    }

    /// Upper bound on the length of a strictly descending chain of subgroups of `A^k`.
    pub fn chain_length_bound(&self, k: usize) -> usize {
        match self.0.kind {
            AlphabetKind::VectorSpace { dim, .. } => dim * k,
            _ => {
                let total = BigUint::from(self.order()).pow(k as u32);
                (total.bits() as usize).saturating_sub(1)
            }
        }
    }

    /// Short human-readable name.
    pub fn describe(&self) -> String {
        match &self.0.kind {
            AlphabetKind::Table { mul, .. } => format!("Table({})", mul.len()),
            AlphabetKind::CyclicProduct { orders } => {
                let parts: Vec<String> = orders.iter().map(|o| format!("C{o}")).collect();
                parts.join("x")
            }
            AlphabetKind::Permutation { degree, .. } => format!("Perm(degree {degree}, order {})", self.order()),
            AlphabetKind::VectorSpace { p, dim } => {
                if *dim == 1 {
                    format!("GF({p})")
                } else {
                    format!("GF({p})^{dim}")
                }
            }
            AlphabetKind::Power { base, exponent } => format!("({})^{exponent}", base.describe()),
        }
    }

    // Tuple helpers over A^k.

    pub fn identity_tuple(&self, k: usize) -> Tuple {
        vec![self.identity(); k]
    }

    pub fn mul_tuple(&self, a: &[Elem], b: &[Elem]) -> Tuple {
        a.iter().zip(b).map(|(&x, &y)| self.mul(x, y)).collect()
    }

    pub fn inv_tuple(&self, a: &[Elem]) -> Tuple {
        a.iter().map(|&x| self.inv(x)).collect()
    }

    pub fn is_identity_tuple(&self, a: &[Elem]) -> bool {
        let e = self.identity();
        a.iter().all(|&x| x == e)
    }

    /// Groups a tuple over `A` of length `d * k` into `k` elements of `A^d`.
    pub fn group_tuple(&self, t: &[Elem], d: usize) -> Tuple {
        let q = self.order();
        t.chunks(d)
            .map(|c| c.iter().rev().fold(0u64, |acc, &x| acc * q + x as u64) as Elem)
            .collect()
    }

    /// Inverse of [`Alphabet::group_tuple`]: splits elements of `A^d` into tuples over `A`.
    pub fn ungroup_tuple(&self, t: &[Elem], d: usize) -> Tuple {
        let q = self.order() as u32;
        t.iter()
            .flat_map(|&x| {
                let mut x = x;
                (0..d).map(move |_| {
                    let r = x % q;
                    x /= q;
                    r
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closure_size(a: &Alphabet) -> usize {
        let mut seen = vec![false; a.order() as usize];
        let mut q = VecDeque::from([a.identity()]);
        seen[a.identity() as usize] = true;
        let mut n = 1;
        while let Some(x) = q.pop_front() {
            for &g in a.generators() {
                let y = a.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    n += 1;
                    q.push_back(y);
                }
            }
        }
        n
    }

    #[test]
    fn s3_has_order_six_and_identity_first() {
        let s3 = Alphabet::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert_eq!(s3.permutation_of(0), Some(&[0, 1, 2][..]));
        assert_eq!(closure_size(&s3), 6);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn generators_generate() {
        for a in [
            Alphabet::cyclic_product(vec![2, 6]).unwrap(),
            Alphabet::vector_space(3, 2).unwrap(),
            Alphabet::symmetric(4).unwrap(),
            Alphabet::symmetric(3).unwrap().power(2).unwrap(),
        ] {
            assert_eq!(closure_size(&a) as u64, a.order(), "{a:?}");
        }
    }

    #[test]
    fn table_validation() {
        let z2 = vec![vec![0, 1], vec![1, 0]];
        assert!(Alphabet::table(z2.clone(), 0, None).is_ok());
        assert!(Alphabet::table(z2.clone(), 1, None).is_err());
        let bad = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(Alphabet::table(bad, 0, None).is_err());
        assert!(Alphabet::table(z2, 0, Some(vec![1, 0])).is_err());
    }

    #[test]
    fn vector_space_requires_prime() {
        assert!(Alphabet::vector_space(4, 1).is_err());
        assert!(Alphabet::vector_space(2, 0).unwrap().order() == 1);
        let v = Alphabet::vector_space(3, 2).unwrap();
        let a = v.from_residues(&[1, 2]).unwrap();
        assert_eq!(v.residues(a), vec![1, 2]);
        assert_eq!(v.mul(a, a), v.from_residues(&[2, 1]).unwrap());
    }

    #[test]
    fn power_indexing_matches_grouping() {
        let s3 = Alphabet::symmetric(3).unwrap();
        let s3_2 = s3.power(2).unwrap();
        let t = vec![3, 5];
        let g = s3.group_tuple(&t, 2);
        assert_eq!(g.len(), 1);
        assert_eq!(s3_2.power_digits(g[0]).unwrap(), t);
        assert_eq!(s3.ungroup_tuple(&g, 2), t);
        let u = vec![1, 4];
        let gu = s3.group_tuple(&u, 2)[0];
        assert_eq!(s3_2.power_digits(s3_2.mul(g[0], gu)).unwrap(), s3.mul_tuple(&t, &u));
        let v = Alphabet::gf(2).unwrap().power(3).unwrap();
        assert_eq!(v.vector_space_params(), Some((2, 3)));
    }

    #[test]
    fn chain_length_bounds() {
        assert_eq!(Alphabet::vector_space(2, 2).unwrap().chain_length_bound(3), 6);
        assert_eq!(Alphabet::symmetric(3).unwrap().chain_length_bound(1), 2);
        assert_eq!(Alphabet::gf(3).unwrap().chain_length_bound(4), 4);
    }
}
