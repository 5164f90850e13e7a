//! Group subshifts of finite type over ℤ.
//!
//! A [`GroupSFT`] with window `m` and pattern group `P ≤ A^m` is the set of
//! configurations `x` with `x[n..n + m] ∈ P` for every `n`.

mod recode;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::alphabet::{Alphabet, Subgroup, Tuple};
use crate::blocks::PeriodicConfig;
use crate::error::{Error, Result};

pub use recode::{decode_higher_block, induce_from_subgroup, recode_higher_block, restrict_to_subgroup};

/// Largest window probed by [`GroupSFT::minimal_window`] unless told otherwise.
pub const DEFAULT_MAX_WINDOW: usize = 16;

#[derive(Clone)]
pub struct GroupSFT {
    pattern: Subgroup,
    essential: bool,
    cache: Arc<OnceLock<(Subgroup, usize)>>,
}

impl fmt::Debug for GroupSFT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupSFT")
            .field("alphabet", self.alphabet())
            .field("window", &self.window())
            .field("order", &self.pattern.order())
            .field("essential", &self.essential)
            .finish()
    }
}

/// Words of length `len >= m` all of whose `m`-windows lie in `p`.
pub(crate) fn window_words(p: &Subgroup, len: usize) -> Subgroup {
    let m = p.len();
    debug_assert!(len >= m);
    let mut acc = p.lift_at(len, 0).expect("window fits");
    for off in 1..=len - m {
        acc = acc.intersect(&p.lift_at(len, off).expect("window fits")).expect("same ambient group");
    }
    acc
}

fn refine(p: &Subgroup) -> (Subgroup, usize) {
    let m = p.len();
    let bound = p.alphabet().chain_length_bound(m);
    let mut current = p.clone();
    let mut steps = 0;
    loop {
        let next = window_words(&current, m + 2).project_range(1, m + 1).expect("middle window");
        if next == current {
            return (current, steps);
        }
        steps += 1;
        debug_assert!(steps <= bound, "refinement chain longer than {bound}");
        current = next;
    }
}

impl GroupSFT {
    /// `Σ(A^ℤ; {0..m-1}, P)` for `P ≤ A^m`.
    pub fn new(pattern: Subgroup) -> Result<Self> {
        if pattern.len() == 0 {
            return Err(Error::InvalidArgument("window length must be at least 1".into()));
        }
        Ok(Self::raw(pattern, false))
    }

    pub(crate) fn raw(pattern: Subgroup, essential: bool) -> Self {
        let cache = Arc::new(OnceLock::new());
        if essential {
            let _ = cache.set((pattern.clone(), 0));
        }
        GroupSFT {
            pattern,
            essential,
            cache,
        }
    }

    /// The SFT whose pattern group is generated by `generators` (tuples of length `window`).
    pub fn from_generators(alphabet: &Alphabet, window: usize, generators: &[Tuple]) -> Result<Self> {
        Self::new(Subgroup::generated(alphabet, window, generators)?)
    }

    pub fn full(alphabet: &Alphabet) -> Self {
        Self::raw(Subgroup::full(alphabet, 1), true)
    }

    /// The shift containing only the identity configuration.
    pub fn trivial(alphabet: &Alphabet) -> Self {
        Self::raw(Subgroup::trivial(alphabet, 1), true)
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.pattern.alphabet()
    }

    pub fn window(&self) -> usize {
        self.pattern.len()
    }

    pub fn pattern(&self) -> &Subgroup {
        &self.pattern
    }

    /// Whether the pattern group is known to equal the true restriction to the window.
    pub fn is_essential(&self) -> bool {
        self.essential
    }

    fn essential_pattern(&self) -> &(Subgroup, usize) {
        self.cache.get_or_init(|| refine(&self.pattern))
    }

    /// Same shift, with the pattern group replaced by the true `m`-block restriction.
    pub fn essentialize(&self) -> GroupSFT {
        self.essentialize_counted().0
    }

    /// [`GroupSFT::essentialize`] together with the number of strict refinement steps.
    pub fn essentialize_counted(&self) -> (GroupSFT, usize) {
        let (p, steps) = self.essential_pattern();
        (Self::raw(p.clone(), true), *steps)
    }

    /// The restriction of the shift to `{0..k-1}`.
    pub fn blocks(&self, k: usize) -> Result<Subgroup> {
        if k == 0 {
            return Err(Error::InvalidArgument("block length must be at least 1".into()));
        }
        let (p, _) = self.essential_pattern();
        Ok(if k >= self.window() {
            window_words(p, k)
        } else {
            p.project_range(0, k)?
        })
    }

    /// The same shift presented on window `m2 >= m`.
    pub fn widen(&self, m2: usize) -> Result<GroupSFT> {
        if m2 < self.window() {
            return Err(Error::WindowMismatch(format!(
                "cannot widen window {} to {m2}",
                self.window()
            )));
        }
        Ok(Self::raw(self.blocks(m2)?, true))
    }

    pub(crate) fn check_alphabet(&self, other: &GroupSFT) -> Result<()> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch(format!(
                "{} vs {}",
                self.alphabet().describe(),
                other.alphabet().describe()
            )));
        }
        Ok(())
    }

    pub fn intersect(&self, other: &GroupSFT) -> Result<GroupSFT> {
        self.check_alphabet(other)?;
        let m = self.window().max(other.window());
        let p = window_words(&self.pattern, m).intersect(&window_words(&other.pattern, m))?;
        Ok(Self::raw(p, false).essentialize())
    }

    pub fn equals(&self, other: &GroupSFT) -> Result<bool> {
        self.check_alphabet(other)?;
        let m = self.window().max(other.window());
        let eq = self.blocks(m)? == other.blocks(m)?;
        debug_assert_eq!(eq, self.blocks(m + 1)? == other.blocks(m + 1)?);
        Ok(eq)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &GroupSFT) -> Result<bool> {
        self.check_alphabet(other)?;
        let m = self.window().max(other.window());
        Ok(other.blocks(m)?.is_subgroup_of(&self.blocks(m)?))
    }

    pub fn member_periodic(&self, c: &PeriodicConfig) -> Result<bool> {
        if c.alphabet() != self.alphabet() {
            return Err(Error::AlphabetMismatch("configuration over a different alphabet".into()));
        }
        Ok(c.wrap_subwords(self.window()).iter().all(|w| self.pattern.contains(w.as_slice())))
    }

    /// Least `w <= max_window` such that the `w`-blocks define the shift.
    pub fn minimal_window(&self, max_window: usize) -> Result<usize> {
        for w in 1..=max_window.max(1) {
            if w >= self.window() || GroupSFT::new(self.blocks(w)?)?.equals(self)? {
                return Ok(w);
            }
        }
        Err(Error::cap(
            "minimal window search",
            max_window as u64,
            "raise --max-window",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::Word;

    fn gf(p: u32) -> Alphabet {
        Alphabet::gf(p).unwrap()
    }

    fn constants() -> GroupSFT {
        GroupSFT::from_generators(&gf(2), 2, &[vec![1, 1]]).unwrap()
    }

    fn zero_trap() -> GroupSFT {
        GroupSFT::from_generators(&gf(2), 2, &[vec![1, 0]]).unwrap()
    }

    fn orbit3() -> GroupSFT {
        GroupSFT::from_generators(&gf(3), 2, &[vec![1, 2]]).unwrap()
    }

    fn periodic(a: &Alphabet, xs: &[u32]) -> PeriodicConfig {
        PeriodicConfig::repeat(Word::new(a, xs.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn essentialize_examples() {
        let (e, steps) = zero_trap().essentialize_counted();
        assert!(e.pattern().is_trivial());
        assert_eq!(steps, 1);
        let c = constants();
        assert_eq!(c.essentialize().pattern(), c.pattern());
        let full = GroupSFT::full(&Alphabet::vector_space(2, 2).unwrap());
        assert_eq!(full.essentialize_counted().1, 0);
    }

    #[test]
    fn block_examples() {
        assert!(GroupSFT::full(&gf(2)).blocks(3).unwrap().is_full());
        let b = constants().blocks(3).unwrap();
        assert_eq!(b.elements(8).unwrap(), vec![vec![0, 0, 0], vec![1, 1, 1]]);
        for k in 1..5 {
            assert!(zero_trap().blocks(k).unwrap().is_trivial());
        }
    }

    #[test]
    fn widen_intersect_equals() {
        let c = constants();
        assert_eq!(c.widen(3).unwrap().pattern().order(), 2u32.into());
        assert!(c.equals(&c.widen(4).unwrap()).unwrap());
        assert!(!c.equals(&zero_trap()).unwrap());
        assert!(c.intersect(&zero_trap()).unwrap().pattern().is_trivial());
        let both = orbit3().intersect(&GroupSFT::from_generators(&gf(3), 2, &[vec![1, 1]]).unwrap()).unwrap();
        assert!(both.pattern().is_trivial());
        assert!(GroupSFT::full(&gf(2)).contains(&c).unwrap());
        assert!(c.intersect(&GroupSFT::full(&gf(2))).unwrap().equals(&c).unwrap());
        assert!(c.intersect(&GroupSFT::full(&gf(3))).is_err());
    }

    #[test]
    fn periodic_membership() {
        assert!(constants().member_periodic(&periodic(&gf(2), &[1])).unwrap());
        assert!(!constants().member_periodic(&periodic(&gf(2), &[0, 1])).unwrap());
        assert!(orbit3().member_periodic(&periodic(&gf(3), &[1, 2])).unwrap());
    }

    #[test]
    fn minimal_windows() {
        assert_eq!(GroupSFT::full(&gf(2)).widen(4).unwrap().minimal_window(8).unwrap(), 1);
        assert_eq!(constants().widen(5).unwrap().minimal_window(8).unwrap(), 2);
        assert_eq!(zero_trap().minimal_window(8).unwrap(), 1);
    }
}
