use std::collections::HashSet;

use num_bigint::BigUint;

use super::chain::{Action, StabChain};
use super::gfp;
use super::{Alphabet, Elem, Tuple};
use crate::error::{Error, Result};

/// Default limit on explicit element enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 16;

/// A subgroup of `A^len`, stored canonically.
///
/// Vector-space alphabets use the reduced row-echelon basis of the subspace of
/// `GF(p)^(dim * len)`; all other alphabets use a coordinate stabilizer chain
/// whose transversal elements are the lexicographically least members of their
/// cosets. Two subgroups are equal as sets iff their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    alphabet: Alphabet,
    len: usize,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Linear { basis: Vec<Vec<u32>> },
    Chain { levels: Vec<Vec<(Elem, Tuple)>> },
}

pub(crate) fn tuple_to_flat(a: &Alphabet, t: &[Elem]) -> Vec<u32> {
    t.iter().flat_map(|&x| a.residues(x)).collect()
}

pub(crate) fn flat_to_tuple(a: &Alphabet, v: &[u32], len: usize) -> Tuple {
    let (_, dim) = a.vector_space_params().expect("vector space alphabet");
    if dim == 0 {
        return vec![0; len];
    }
    v.chunks(dim)
        .map(|c| a.from_residues(c).expect("residues in range"))
        .collect()
}

fn small_generating_subset(a: &Alphabet, points: &[Elem]) -> Vec<usize> {
    // indices into `points` whose elements generate the subgroup `points` of `a`
    let mut inside: HashSet<Elem> = HashSet::from([a.identity()]);
    let mut members = vec![a.identity()];
    let mut chosen = Vec::new();
    let mut gens: Vec<Elem> = Vec::new();
    for (i, &t) in points.iter().enumerate() {
        if inside.contains(&t) {
            continue;
        }
        chosen.push(i);
        gens.push(t);
        let mut k = 0;
        let mut frontier = members.clone();
        while k < frontier.len() {
            let x = frontier[k];
            for &g in &gens {
                let y = a.mul(x, g);
                if inside.insert(y) {
                    members.push(y);
                    frontier.push(y);
                }
            }
            k += 1;
        }
    }
    chosen
}

impl Subgroup {
    /// The subgroup of `A^len` generated by `gens`.
    pub fn generated(alphabet: &Alphabet, len: usize, gens: &[Tuple]) -> Result<Self> {
        for g in gens {
            alphabet.check_tuple(g, len)?;
        }
        Ok(Self::generated_unchecked(alphabet, len, gens))
    }

    pub(crate) fn generated_unchecked(alphabet: &Alphabet, len: usize, gens: &[Tuple]) -> Self {
        let repr = if let Some((p, _)) = alphabet.vector_space_params() {
            let rows: Vec<Vec<u32>> = gens.iter().map(|g| tuple_to_flat(alphabet, g)).collect();
            Repr::Linear {
                basis: gfp::rref(rows, p),
            }
        } else {
            let chain = StabChain::build(
                vec![alphabet.clone(); len],
                (0..len).map(Action::Right).collect(),
                gens.iter().filter(|g| !alphabet.is_identity_tuple(g)).cloned(),
            );
            Repr::Chain {
                levels: canonical_levels(alphabet, &chain),
            }
        };
        Subgroup {
            alphabet: alphabet.clone(),
            len,
            repr,
        }
    }

    pub fn trivial(alphabet: &Alphabet, len: usize) -> Self {
        Self::generated_unchecked(alphabet, len, &[])
    }

    pub fn full(alphabet: &Alphabet, len: usize) -> Self {
        let mut gens = Vec::new();
        for pos in 0..len {
            for &g in alphabet.generators() {
                let mut t = alphabet.identity_tuple(len);
                t[pos] = g;
                gens.push(t);
            }
        }
        Self::generated_unchecked(alphabet, len, &gens)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of coordinates `k` of the ambient power `A^k`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn order(&self) -> BigUint {
        match &self.repr {
            Repr::Linear { basis } => {
                let (p, _) = self.alphabet.vector_space_params().unwrap();
                BigUint::from(p).pow(basis.len() as u32)
            }
            Repr::Chain { levels } => levels.iter().map(|l| BigUint::from(l.len())).product(),
        }
    }

    /// Dimension over GF(p) for vector-space alphabets.
    pub fn rank(&self) -> Option<usize> {
        match &self.repr {
            Repr::Linear { basis } => Some(basis.len()),
            Repr::Chain { .. } => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        match &self.repr {
            Repr::Linear { basis } => basis.is_empty(),
            Repr::Chain { levels } => levels.iter().all(|l| l.len() == 1),
        }
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(&self.alphabet, self.len)
    }

    pub fn contains(&self, t: &[Elem]) -> bool {
        if self.alphabet.check_tuple(t, self.len).is_err() {
            return false;
        }
        match &self.repr {
            Repr::Linear { basis } => {
                let (p, _) = self.alphabet.vector_space_params().unwrap();
                gfp::in_span(&tuple_to_flat(&self.alphabet, t), basis, p)
            }
            Repr::Chain { levels } => {
                let a = &self.alphabet;
                let mut x = t.to_vec();
                for (l, level) in levels.iter().enumerate() {
                    match level.binary_search_by_key(&x[l], |(pt, _)| *pt) {
                        Ok(i) => x = a.mul_tuple(&x, &a.inv_tuple(&level[i].1)),
                        Err(_) => return false,
                    }
                }
                a.is_identity_tuple(&x)
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "{} vs {}",
                self.alphabet.describe(),
                other.alphabet.describe()
            )));
        }
        if self.len != other.len {
            return Err(Error::WindowMismatch(format!("length {} vs {}", self.len, other.len)));
        }
        Ok(())
    }

    /// `self <= other`.
    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.check_compatible(other).is_ok() && self.generators().iter().all(|g| other.contains(g))
    }

    /// A small generating set (strong generators for chains, the basis for subspaces).
    pub fn generators(&self) -> Vec<Tuple> {
        match &self.repr {
            Repr::Linear { basis } => basis.iter().map(|r| flat_to_tuple(&self.alphabet, r, self.len)).collect(),
            Repr::Chain { levels } => {
                let mut out = Vec::new();
                for level in levels {
                    let points: Vec<Elem> = level.iter().map(|(p, _)| *p).collect();
                    for i in small_generating_subset(&self.alphabet, &points) {
                        out.push(level[i].1.clone());
                    }
                }
                out
            }
        }
    }

    /// All elements in lexicographic order; fails when the order exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Tuple>> {
        if self.order() > BigUint::from(cap) {
            return Err(Error::cap(
                format!("enumeration of a subgroup of order {}", self.order()),
                cap,
                "use a shorter window or raise the enumeration cap",
            ));
        }
        let a = &self.alphabet;
        let mut out = match &self.repr {
            Repr::Linear { basis } => {
                let (p, dim) = a.vector_space_params().unwrap();
                let mut vecs = vec![vec![0u32; dim * self.len]];
                for row in basis {
                    let mut next = Vec::with_capacity(vecs.len() * p as usize);
                    for v in &vecs {
                        for c in 0..p {
                            next.push(
                                v.iter()
                                    .zip(row)
                                    .map(|(&x, &y)| ((x as u64 + c as u64 * y as u64) % p as u64) as u32)
                                    .collect(),
                            );
                        }
                    }
                    vecs = next;
                }
                vecs.iter().map(|v| flat_to_tuple(a, v, self.len)).collect::<Vec<_>>()
            }
            Repr::Chain { levels } => {
                let mut elems = vec![a.identity_tuple(self.len)];
                for level in levels.iter().rev() {
                    let mut next = Vec::with_capacity(elems.len() * level.len());
                    for (_, r) in level {
                        for e in &elems {
                            next.push(a.mul_tuple(r, e));
                        }
                    }
                    elems = next;
                }
                elems
            }
        };
        out.sort();
        Ok(out)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let a = &self.alphabet;
        match (&self.repr, &other.repr) {
            (Repr::Linear { basis: x }, Repr::Linear { basis: y }) => {
                let (p, dim) = a.vector_space_params().unwrap();
                Ok(Subgroup {
                    alphabet: a.clone(),
                    len: self.len,
                    repr: Repr::Linear {
                        basis: gfp::intersect(x, y, dim * self.len, p),
                    },
                })
            }
            _ => {
                if self.is_subgroup_of(other) {
                    return Ok(self.clone());
                }
                if other.is_subgroup_of(self) {
                    return Ok(other.clone());
                }
                let k = self.len;
                let e = a.identity_tuple(k);
                let mut actions: Vec<Action> = (0..k).map(|j| Action::TwoSided(j, k + j)).collect();
                actions.extend((0..k).map(Action::Right));
                let gens = self
                    .generators()
                    .into_iter()
                    .map(|h| [h, e.clone()].concat())
                    .chain(other.generators().into_iter().map(|g| [e.clone(), g].concat()));
                let chain = StabChain::build(vec![a.clone(); 2 * k], actions, gens);
                let inter: Vec<Tuple> = chain.strong_gens_from(k).into_iter().map(|g| g[..k].to_vec()).collect();
                Ok(Self::generated_unchecked(a, k, &inter))
            }
        }
    }

    /// Coordinate projection onto `positions` (distinct, in the given order).
    pub fn project(&self, positions: &[usize]) -> Result<Self> {
        check_positions(positions, self.len)?;
        let gens: Vec<Tuple> = self
            .generators()
            .iter()
            .map(|g| positions.iter().map(|&i| g[i]).collect())
            .collect();
        Ok(Self::generated_unchecked(&self.alphabet, positions.len(), &gens))
    }

    /// Projection onto the interval `start..end`.
    pub fn project_range(&self, start: usize, end: usize) -> Result<Self> {
        self.project(&(start..end).collect::<Vec<_>>())
    }

    /// Full preimage under the projection `A^total -> A^positions`.
    pub fn cylinder_lift(&self, total: usize, positions: &[usize]) -> Result<Self> {
        if positions.len() != self.len {
            return Err(Error::Arity {
                expected: self.len,
                found: positions.len(),
            });
        }
        check_positions(positions, total)?;
        let a = &self.alphabet;
        let mut gens = Vec::new();
        for g in self.generators() {
            let mut t = a.identity_tuple(total);
            for (&pos, &x) in positions.iter().zip(&g) {
                t[pos] = x;
            }
            gens.push(t);
        }
        for free in (0..total).filter(|q| !positions.contains(q)) {
            for &x in a.generators() {
                let mut t = a.identity_tuple(total);
                t[free] = x;
                gens.push(t);
            }
        }
        Ok(Self::generated_unchecked(a, total, &gens))
    }

    /// Lift placing this subgroup on the interval `offset..offset + len` of `A^total`.
    pub fn lift_at(&self, total: usize, offset: usize) -> Result<Self> {
        self.cylinder_lift(total, &(offset..offset + self.len).collect::<Vec<_>>())
    }

    /// An element whose coordinates at `positions` take `values`, if any exists.
    pub fn complete(&self, positions: &[usize], values: &[Elem]) -> Result<Option<Tuple>> {
        self.completer(positions)?.complete(values)
    }

    /// Precomputed data for many [`Subgroup::complete`] queries at the same positions.
    pub fn completer(&self, positions: &[usize]) -> Result<Completer> {
        check_positions(positions, self.len)?;
        let a = &self.alphabet;
        let inner = match &self.repr {
            Repr::Linear { basis } => {
                let (p, dim) = a.vector_space_params().unwrap();
                let cols: Vec<usize> = positions.iter().flat_map(|&i| (i * dim)..(i + 1) * dim).collect();
                CompleterRepr::Linear {
                    reduced: gfp::completion_basis(basis, &cols, p),
                    f: cols.len(),
                }
            }
            Repr::Chain { .. } => {
                let mut order: Vec<usize> = positions.to_vec();
                order.extend((0..self.len).filter(|q| !positions.contains(q)));
                CompleterRepr::Chain(StabChain::build(
                    vec![a.clone(); self.len],
                    order.into_iter().map(Action::Right).collect(),
                    self.generators(),
                ))
            }
        };
        Ok(Completer {
            alphabet: a.clone(),
            len: self.len,
            arity: positions.len(),
            inner,
        })
    }

    /// Regroups a subgroup of `A^(d * k)` as a subgroup of `(A^d)^k`.
    pub fn group(&self, d: usize) -> Result<Self> {
        if d == 0 || !self.len.is_multiple_of(d) {
            return Err(Error::InvalidArgument(format!("length {} is not a multiple of {d}", self.len)));
        }
        let target = self.alphabet.power(d)?;
        let gens: Vec<Tuple> = self.generators().iter().map(|g| self.alphabet.group_tuple(g, d)).collect();
        Ok(Self::generated_unchecked(&target, self.len / d, &gens))
    }

    /// Inverse of [`Subgroup::group`]: a subgroup of `(A^d)^k` as a subgroup of `A^(d * k)`.
    pub fn ungroup(&self, base: &Alphabet, d: usize) -> Result<Self> {
        if base.power(d)? != self.alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "{} is not the {d}-th power of {}",
                self.alphabet.describe(),
                base.describe()
            )));
        }
        let gens: Vec<Tuple> = self.generators().iter().map(|g| base.ungroup_tuple(g, d)).collect();
        Ok(Self::generated_unchecked(base, self.len * d, &gens))
    }

    /// Byte encoding of the canonical representation.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let mut push = |x: u32| out.extend_from_slice(&x.to_le_bytes());
        push(self.len as u32);
        match &self.repr {
            Repr::Linear { basis } => {
                push(0);
                push(basis.len() as u32);
                for row in basis {
                    row.iter().for_each(|&x| push(x));
                }
            }
            Repr::Chain { levels } => {
                push(1);
                for level in levels {
                    push(level.len() as u32);
                    for (pt, rep) in level {
                        push(*pt);
                        rep.iter().for_each(|&x| push(x));
                    }
                }
            }
        }
        out
    }
}

/// See [`Subgroup::completer`].
#[derive(Clone, Debug)]
pub struct Completer {
    alphabet: Alphabet,
    len: usize,
    arity: usize,
    inner: CompleterRepr,
}

#[derive(Clone, Debug)]
enum CompleterRepr {
    Linear { reduced: Vec<Vec<u32>>, f: usize },
    Chain(StabChain),
}

impl Completer {
    pub fn complete(&self, values: &[Elem]) -> Result<Option<Tuple>> {
        let a = &self.alphabet;
        a.check_tuple(values, self.arity)?;
        Ok(match &self.inner {
            CompleterRepr::Linear { reduced, f } => {
                let (p, dim) = a.vector_space_params().unwrap();
                gfp::solve_completion(reduced, *f, dim * self.len, &tuple_to_flat(a, values), p)
                    .map(|v| flat_to_tuple(a, &v, self.len))
            }
            CompleterRepr::Chain(chain) => chain.solve_prefix(values),
        })
    }
}

fn check_positions(positions: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    for &i in positions {
        if i >= len {
            return Err(Error::InvalidArgument(format!("position {i} outside window of length {len}")));
        }
        if seen[i] {
            return Err(Error::InvalidArgument(format!("position {i} repeated")));
        }
        seen[i] = true;
    }
    Ok(())
}

fn canonical_levels(a: &Alphabet, chain: &StabChain) -> Vec<Vec<(Elem, Tuple)>> {
    let k = chain.len();
    let e = a.identity();
    (0..k)
        .map(|j| {
            let mut points = chain.orbit(j).to_vec();
            points.sort_unstable();
            points
                .into_iter()
                .map(|t| {
                    if t == e {
                        return (t, a.identity_tuple(k));
                    }
                    let mut r = chain.rep(j, t).expect("orbit point has a representative").clone();
                    for l in j + 1..k {
                        let best = chain
                            .orbit(l)
                            .iter()
                            .copied()
                            .min_by_key(|&u| a.mul(r[l], u))
                            .expect("orbits are nonempty");
                        if best != e {
                            r = a.mul_tuple(&r, chain.rep(l, best).unwrap());
                        }
                    }
                    (t, r)
                })
                .collect()
        })
        .collect()
}
