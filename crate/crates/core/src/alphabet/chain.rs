//! Stabilizer chains for subgroups of direct products of finite groups.
//!
//! A point of the product is a tuple whose coordinate `i` lives in `factors[i]`.
//! Each level of the chain acts on the elements of one factor: either by right
//! multiplication with one coordinate, or two-sidedly by `x -> g_l^-1 x g_r`
//! with two coordinates of the same factor. The base point of every level is the
//! identity, and the point stabilizer of level `i` is the group at level `i + 1`.
//! The action of the whole base must be faithful.

use std::collections::HashMap;

use super::{Alphabet, Elem, Tuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Action {
    Right(usize),
    TwoSided(usize, usize),
}

#[derive(Clone, Debug)]
struct Level {
    action: Action,
    gens: Vec<Tuple>,
    orbit: Vec<Elem>,
    index: HashMap<Elem, usize>,
    reps: Vec<Tuple>,
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    factors: Vec<Alphabet>,
    levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn build(factors: Vec<Alphabet>, actions: Vec<Action>, gens: impl IntoIterator<Item = Tuple>) -> Self {
        let mut chain = StabChain {
            factors,
            levels: actions
                .into_iter()
                .map(|action| Level {
                    action,
                    gens: Vec::new(),
                    orbit: Vec::new(),
                    index: HashMap::new(),
                    reps: Vec::new(),
                })
                .collect(),
        };
        for g in gens {
            if let Some(l) = chain.first_moved_level(&g) {
                chain.levels[l].gens.push(g);
            } else {
                debug_assert!(chain.is_identity(&g), "base action is not faithful");
            }
        }
        chain.schreier_sims();
        chain
    }

    pub(crate) fn len(&self) -> usize {
        self.levels.len()
    }

    fn identity(&self) -> Tuple {
        self.factors.iter().map(Alphabet::identity).collect()
    }

    fn is_identity(&self, g: &[Elem]) -> bool {
        g.iter().zip(&self.factors).all(|(&x, a)| x == a.identity())
    }

    fn mul(&self, a: &[Elem], b: &[Elem]) -> Tuple {
        a.iter().zip(b).zip(&self.factors).map(|((&x, &y), f)| f.mul(x, y)).collect()
    }

    fn inv(&self, a: &[Elem]) -> Tuple {
        a.iter().zip(&self.factors).map(|(&x, f)| f.inv(x)).collect()
    }

    fn act(&self, action: Action, point: Elem, g: &[Elem]) -> Elem {
        match action {
            Action::Right(c) => self.factors[c].mul(point, g[c]),
            Action::TwoSided(l, r) => {
                let f = &self.factors[l];
                f.mul(f.mul(f.inv(g[l]), point), g[r])
            }
        }
    }

    fn base_point(&self, action: Action) -> Elem {
        match action {
            Action::Right(c) | Action::TwoSided(c, _) => self.factors[c].identity(),
        }
    }

    fn first_moved_level(&self, g: &[Elem]) -> Option<usize> {
        self.levels.iter().position(|lvl| {
            let b = self.base_point(lvl.action);
            self.act(lvl.action, b, g) != b
        })
    }

    fn gens_from(&self, level: usize) -> Vec<Tuple> {
        self.levels[level..].iter().flat_map(|l| l.gens.iter().cloned()).collect()
    }

    fn compute_orbit(&mut self, level: usize) {
        let action = self.levels[level].action;
        let gens = self.gens_from(level);
        let base = self.base_point(action);
        let mut orbit = vec![base];
        let mut reps = vec![self.identity()];
        let mut index = HashMap::from([(base, 0usize)]);
        let mut i = 0;
        while i < orbit.len() {
            for s in &gens {
                let q = self.act(action, orbit[i], s);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(q) {
                    e.insert(orbit.len());
                    orbit.push(q);
                    reps.push(self.mul(&reps[i], s));
                }
            }
            i += 1;
        }
        let lvl = &mut self.levels[level];
        lvl.orbit = orbit;
        lvl.reps = reps;
        lvl.index = index;
    }

    /// Strips `g` through the levels starting at `from`. Returns the residue and
    /// the level where stripping stopped (`len()` when it passed every level).
    fn sift(&self, mut g: Tuple, from: usize) -> (Tuple, usize) {
        for l in from..self.levels.len() {
            let lvl = &self.levels[l];
            let p = self.act(lvl.action, self.base_point(lvl.action), &g);
            match lvl.index.get(&p) {
                None => return (g, l),
                Some(&i) => g = self.mul(&g, &self.inv(&lvl.reps[i])),
            }
        }
        (g, self.levels.len())
    }

    fn schreier_sims(&mut self) {
        let n = self.levels.len();
        for l in 0..n {
            self.compute_orbit(l);
        }
        let mut i = n;
        'outer: while i > 0 {
            let level = i - 1;
            self.compute_orbit(level);
            let action = self.levels[level].action;
            let gens = self.gens_from(level);
            for pi in 0..self.levels[level].orbit.len() {
                let p = self.levels[level].orbit[pi];
                for s in &gens {
                    let q = self.act(action, p, s);
                    let qi = self.levels[level].index[&q];
                    let us = self.mul(&self.levels[level].reps[pi], s);
                    let schreier = self.mul(&us, &self.inv(&self.levels[level].reps[qi]));
                    if self.is_identity(&schreier) {
                        continue;
                    }
                    let (residue, stop) = self.sift(schreier, level + 1);
                    if stop < n {
                        self.levels[stop].gens.push(residue);
                        for l in level + 1..=stop {
                            self.compute_orbit(l);
                        }
                        i = stop + 1;
                        continue 'outer;
                    }
                    debug_assert!(self.is_identity(&residue), "base action is not faithful");
                }
            }
            i -= 1;
        }
    }

    pub(crate) fn orbit(&self, level: usize) -> &[Elem] {
        &self.levels[level].orbit
    }

    pub(crate) fn rep(&self, level: usize, point: Elem) -> Option<&Tuple> {
        self.levels[level].index.get(&point).map(|&i| &self.levels[level].reps[i])
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    pub(crate) fn strong_gens_from(&self, level: usize) -> Vec<Tuple> {
        self.gens_from(level)
    }

    /// For a chain whose first `values.len()` levels are `Right` actions, an element
    /// whose coordinates at those levels equal `values`.
    pub(crate) fn solve_prefix(&self, values: &[Elem]) -> Option<Tuple> {
        let mut h = self.identity();
        for (l, &v) in values.iter().enumerate() {
            let Action::Right(c) = self.levels[l].action else {
                panic!("solve_prefix needs right-multiplication levels");
            };
            let f = &self.factors[c];
            let point = f.mul(f.inv(h[c]), v);
            let u = self.rep(l, point)?;
            h = self.mul(&h, u);
        }
        Some(h)
    }
}
