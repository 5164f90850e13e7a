use super::chain::{Action, StabChain};
use super::gfp;
use super::subgroup::{flat_to_tuple, tuple_to_flat};
use super::{Alphabet, Elem, Subgroup, Tuple};
use crate::error::{Error, Result};

/// A homomorphism `A^arity -> B^out_len`.
///
/// Between vector spaces over the same prime field the map is a matrix of shape
/// `(dim_B * out_len) x (dim_A * arity)`. Otherwise it is determined by one
/// table per domain coordinate, and `phi(x)` is the product of the coordinate
/// images `table_i[x_i]` (which pairwise commute).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    domain: Alphabet,
    arity: usize,
    codomain: Alphabet,
    out_len: usize,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Matrix(Vec<Vec<u32>>),
    Tables(Vec<Vec<Tuple>>),
}

fn linear_pair(a: &Alphabet, b: &Alphabet) -> Option<(u32, usize, usize)> {
    let (p, da) = a.vector_space_params()?;
    let (q, db) = b.vector_space_params()?;
    (p == q).then_some((p, da, db))
}

fn unit(a: &Alphabet, len: usize, pos: usize, x: Elem) -> Tuple {
    let mut t = a.identity_tuple(len);
    t[pos] = x;
    t
}

impl Homomorphism {
    /// A linear map from a matrix over GF(p) acting on stacked residue vectors.
    pub fn from_matrix(
        domain: &Alphabet,
        arity: usize,
        codomain: &Alphabet,
        out_len: usize,
        entries: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let (p, da, db) = linear_pair(domain, codomain).ok_or_else(|| {
            Error::AlphabetMismatch(format!(
                "matrix rules need vector spaces over one prime field, got {} and {}",
                domain.describe(),
                codomain.describe()
            ))
        })?;
        let (rows, cols) = (db * out_len, da * arity);
        if entries.len() != rows {
            return Err(Error::InvalidArgument(format!("matrix has {} rows, expected {rows}", entries.len())));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "matrix row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= p) {
                return Err(Error::InvalidElement {
                    element: bad as u64,
                    order: p as u64,
                });
            }
        }
        Ok(Homomorphism {
            domain: domain.clone(),
            arity,
            codomain: codomain.clone(),
            out_len,
            repr: Repr::Matrix(entries),
        })
    }

    /// The homomorphism sending each generator to its image.
    ///
    /// The generators must generate `A^arity`, and the assignment must extend to a
    /// homomorphism; both are checked with a stabilizer chain on the graph.
    pub fn from_generator_images(
        domain: &Alphabet,
        arity: usize,
        codomain: &Alphabet,
        out_len: usize,
        generators: &[Tuple],
        images: &[Tuple],
    ) -> Result<Self> {
        if generators.len() != images.len() {
            return Err(Error::InvalidArgument(format!(
                "{} generators but {} images",
                generators.len(),
                images.len()
            )));
        }
        for (g, h) in generators.iter().zip(images) {
            domain.check_tuple(g, arity)?;
            codomain.check_tuple(h, out_len)?;
        }
        if !Subgroup::generated(domain, arity, generators)?.is_full() {
            return Err(Error::InvalidArgument(format!(
                "generators do not generate {}^{arity}",
                domain.describe()
            )));
        }
        check_factor_commutation(domain, codomain, generators, images)?;
        let mut factors = vec![domain.clone(); arity];
        factors.extend(std::iter::repeat_n(codomain.clone(), out_len));
        let graph = StabChain::build(
            factors,
            (0..arity + out_len).map(Action::Right).collect(),
            generators.iter().zip(images).map(|(g, h)| [g.as_slice(), h.as_slice()].concat()),
        );
        if let Some(bad) = graph.strong_gens_from(arity).first() {
            return Err(Error::NotHomomorphism(format!(
                "the identity of the domain would map to {:?}",
                &bad[arity..]
            )));
        }
        Ok(Self::from_factor_fn(domain, arity, codomain, out_len, |i, a| {
            let x = unit(domain, arity, i, a);
            graph.solve_prefix(&x).expect("generators generate the domain")[arity..].to_vec()
        }))
    }

    fn from_tables_unchecked(
        domain: &Alphabet,
        arity: usize,
        codomain: &Alphabet,
        out_len: usize,
        tables: Vec<Vec<Tuple>>,
    ) -> Self {
        let repr = match linear_pair(domain, codomain) {
            Some((p, da, db)) => {
                let mut m = vec![vec![0u32; da * arity]; db * out_len];
                for (i, table) in tables.iter().enumerate() {
                    for r in 0..da {
                        let mut e = vec![0u32; da];
                        e[r] = 1;
                        let a = domain.from_residues(&e).unwrap();
                        let col = tuple_to_flat(codomain, &table[a as usize]);
                        for (row, &v) in m.iter_mut().zip(&col) {
                            row[i * da + r] = v % p;
                        }
                    }
                }
                Repr::Matrix(m)
            }
            None => Repr::Tables(tables),
        };
        Homomorphism {
            domain: domain.clone(),
            arity,
            codomain: codomain.clone(),
            out_len,
            repr,
        }
    }

    /// A homomorphism from its coordinate images `f(i, a)`; `f` is trusted.
    pub(crate) fn from_fn(
        domain: &Alphabet,
        arity: usize,
        codomain: &Alphabet,
        out_len: usize,
        f: impl Fn(usize, Elem) -> Tuple,
    ) -> Self {
        Self::from_factor_fn(domain, arity, codomain, out_len, f)
    }

    fn from_factor_fn(
        domain: &Alphabet,
        arity: usize,
        codomain: &Alphabet,
        out_len: usize,
        f: impl Fn(usize, Elem) -> Tuple,
    ) -> Self {
        if let Some((_, da, _)) = linear_pair(domain, codomain) {
            // only the images of unit residue vectors are needed for the matrix
            let units: Vec<Elem> = (0..da)
                .map(|r| {
                    let mut e = vec![0u32; da];
                    e[r] = 1;
                    domain.from_residues(&e).unwrap()
                })
                .collect();
            let top = units.last().map_or(0, |&u| u as usize + 1);
            let tables = (0..arity)
                .map(|i| {
                    (0..top as Elem)
                        .map(|a| if units.contains(&a) { f(i, a) } else { Vec::new() })
                        .collect()
                })
                .collect();
            return Self::from_tables_unchecked(domain, arity, codomain, out_len, tables);
        }
        let tables = (0..arity).map(|i| domain.elements().map(|a| f(i, a)).collect()).collect();
        Self::from_tables_unchecked(domain, arity, codomain, out_len, tables)
    }

    /// The identity map of `A^len`.
    pub fn identity(alphabet: &Alphabet, len: usize) -> Self {
        Self::selection(alphabet, len, &(0..len).collect::<Vec<_>>()).expect("positions are in range")
    }

    /// The coordinate selection `A^arity -> A^positions.len()`.
    pub fn selection(alphabet: &Alphabet, arity: usize, positions: &[usize]) -> Result<Self> {
        if let Some(&bad) = positions.iter().find(|&&i| i >= arity) {
            return Err(Error::InvalidArgument(format!("position {bad} outside arity {arity}")));
        }
        let l = positions.len();
        Ok(Self::from_factor_fn(alphabet, arity, alphabet, l, |i, a| {
            let mut t = alphabet.identity_tuple(l);
            for (slot, &pos) in positions.iter().enumerate() {
                if pos == i {
                    t[slot] = a;
                }
            }
            t
        }))
    }

    /// The sliding map `A^(k + m - 1) -> B^k` of a local rule `A^m -> B`.
    pub fn sliding(&self, k: usize) -> Result<Self> {
        if self.out_len != 1 {
            return Err(Error::InvalidArgument("sliding needs a rule with a single output".into()));
        }
        let m = self.arity;
        let n = k + m - 1;
        let b = &self.codomain;
        if let (Repr::Matrix(rule), Some((_, da, db))) = (&self.repr, linear_pair(&self.domain, b)) {
            let mut out = vec![vec![0u32; da * n]; db * k];
            for t in 0..k {
                for r in 0..db {
                    out[t * db + r][t * da..(t + m) * da].copy_from_slice(&rule[r]);
                }
            }
            return Ok(Homomorphism {
                domain: self.domain.clone(),
                arity: n,
                codomain: b.clone(),
                out_len: k,
                repr: Repr::Matrix(out),
            });
        }
        Ok(Self::from_factor_fn(&self.domain, n, b, k, |i, a| {
            (0..k)
                .map(|t| {
                    if t <= i && i < t + m {
                        self.factor_image(i - t, a)[0]
                    } else {
                        b.identity()
                    }
                })
                .collect()
        }))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Self> {
        if inner.codomain != self.domain || inner.out_len != self.arity {
            return Err(Error::AlphabetMismatch(format!(
                "cannot compose {}^{} -> {}^{} after a map into {}^{}",
                self.domain.describe(),
                self.arity,
                self.codomain.describe(),
                self.out_len,
                inner.codomain.describe(),
                inner.out_len
            )));
        }
        if let (Repr::Matrix(outer), Repr::Matrix(m)) = (&self.repr, &inner.repr) {
            if let Some((p, _, _)) = linear_pair(&inner.domain, &self.codomain) {
                return Ok(Homomorphism {
                    domain: inner.domain.clone(),
                    arity: inner.arity,
                    codomain: self.codomain.clone(),
                    out_len: self.out_len,
                    repr: Repr::Matrix(gfp::mat_mul(outer, m, p)),
                });
            }
        }
        Ok(Self::from_factor_fn(
            &inner.domain,
            inner.arity,
            &self.codomain,
            self.out_len,
            |i, a| self.apply_unchecked(&inner.factor_image(i, a)),
        ))
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn out_len(&self) -> usize {
        self.out_len
    }

    /// The matrix of a linear map.
    pub fn matrix(&self) -> Option<&[Vec<u32>]> {
        match &self.repr {
            Repr::Matrix(m) => Some(m),
            Repr::Tables(_) => None,
        }
    }

    /// Image of the element that is `a` at coordinate `i` and the identity elsewhere.
    pub fn factor_image(&self, i: usize, a: Elem) -> Tuple {
        match &self.repr {
            Repr::Tables(t) => t[i][a as usize].clone(),
            Repr::Matrix(_) => self.apply_unchecked(&unit(&self.domain, self.arity, i, a)),
        }
    }

    pub fn apply(&self, x: &[Elem]) -> Result<Tuple> {
        self.domain.check_tuple(x, self.arity)?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &[Elem]) -> Tuple {
        match &self.repr {
            Repr::Matrix(m) => {
                let (p, _) = self.domain.vector_space_params().unwrap();
                let y = gfp::mat_vec(m, &tuple_to_flat(&self.domain, x), p);
                flat_to_tuple(&self.codomain, &y, self.out_len)
            }
            Repr::Tables(t) => {
                let b = &self.codomain;
                let mut acc = b.identity_tuple(self.out_len);
                for (table, &a) in t.iter().zip(x) {
                    if a != self.domain.identity() {
                        acc = b.mul_tuple(&acc, &table[a as usize]);
                    }
                }
                acc
            }
        }
    }

    fn check_domain(&self, h: &Subgroup) -> Result<()> {
        if h.alphabet() != &self.domain || h.len() != self.arity {
            return Err(Error::AlphabetMismatch(format!(
                "subgroup of {}^{} is not in the domain {}^{}",
                h.alphabet().describe(),
                h.len(),
                self.domain.describe(),
                self.arity
            )));
        }
        Ok(())
    }

    fn check_codomain(&self, k: &Subgroup) -> Result<()> {
        if k.alphabet() != &self.codomain || k.len() != self.out_len {
            return Err(Error::AlphabetMismatch(format!(
                "subgroup of {}^{} is not in the codomain {}^{}",
                k.alphabet().describe(),
                k.len(),
                self.codomain.describe(),
                self.out_len
            )));
        }
        Ok(())
    }

    /// `phi(H)`.
    pub fn image(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_domain(h)?;
        let gens: Vec<Tuple> = h.generators().iter().map(|g| self.apply_unchecked(g)).collect();
        Ok(Subgroup::generated_unchecked(&self.codomain, self.out_len, &gens))
    }

    /// `phi^-1(K)`.
    pub fn preimage(&self, k: &Subgroup) -> Result<Subgroup> {
        self.check_codomain(k)?;
        let a = &self.domain;
        if let (Repr::Matrix(m), Some((p, da, db))) = (&self.repr, linear_pair(a, &self.codomain)) {
            let kb: Vec<Vec<u32>> = k.generators().iter().map(|g| tuple_to_flat(&self.codomain, g)).collect();
            let annihilator = gfp::nullspace(&kb, db * self.out_len, p);
            let constraints = gfp::mat_mul(&annihilator, m, p);
            let pre = gfp::nullspace(&constraints, da * self.arity, p);
            let gens: Vec<Tuple> = pre.iter().map(|v| flat_to_tuple(a, v, self.arity)).collect();
            return Ok(Subgroup::generated_unchecked(a, self.arity, &gens));
        }
        let (l, j) = (self.out_len, self.arity);
        let mut factors = vec![self.codomain.clone(); l];
        factors.extend(std::iter::repeat_n(a.clone(), j));
        let graph_gens: Vec<Tuple> = (0..j)
            .flat_map(|i| a.generators().iter().map(move |&g| (i, g)))
            .map(|(i, g)| [self.factor_image(i, g), unit(a, j, i, g)].concat())
            .collect();
        let graph = StabChain::build(factors, (0..l + j).map(Action::Right).collect(), graph_gens);
        let mut gens: Vec<Tuple> = graph.strong_gens_from(l).into_iter().map(|g| g[l..].to_vec()).collect();
        let reachable = k.intersect(&self.image(&Subgroup::full(a, j))?)?;
        for y in reachable.generators() {
            let x = graph.solve_prefix(&y).ok_or_else(|| {
                Error::Internal("an element of the image has no preimage".into())
            })?;
            gens.push(x[l..].to_vec());
        }
        Ok(Subgroup::generated_unchecked(a, j, &gens))
    }

    pub fn kernel(&self) -> Subgroup {
        self.preimage(&Subgroup::trivial(&self.codomain, self.out_len))
            .expect("trivial subgroup lies in the codomain")
    }
}

fn check_factor_commutation(a: &Alphabet, b: &Alphabet, generators: &[Tuple], images: &[Tuple]) -> Result<()> {
    let support = |g: &Tuple| -> Option<usize> {
        let moved: Vec<usize> = (0..g.len()).filter(|&i| g[i] != a.identity()).collect();
        (moved.len() == 1).then(|| moved[0])
    };
    let supports: Vec<Option<usize>> = generators.iter().map(support).collect();
    for x in 0..generators.len() {
        for y in x + 1..generators.len() {
            if let (Some(i), Some(k)) = (supports[x], supports[y]) {
                if i != k && b.mul_tuple(&images[x], &images[y]) != b.mul_tuple(&images[y], &images[x]) {
                    return Err(Error::NonCommutingFactors {
                        first: i.min(k),
                        second: i.max(k),
                    });
                }
            }
        }
    }
    Ok(())
}
