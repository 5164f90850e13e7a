//! Group cellular automata over ℤ.
//!
//! A [`GroupCA`] with memory `m` and local rule `μ: A^m -> B` maps `x` to
//! `y(n) = μ(x(n), .., x(n + m - 1))`.

mod image;

use crate::alphabet::{Alphabet, Homomorphism};
use crate::blocks::{PeriodicConfig, Word};
use crate::error::{Error, Result};
use crate::shiftspace::{GroupSFT, DEFAULT_MAX_WINDOW};

pub use image::ImageReport;

/// Default cap on the number of image iterations in [`GroupCA::limit_set`].
pub const DEFAULT_MAX_ITERATIONS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCA {
    rule: Homomorphism,
}

/// The descending chain `S ⊇ τ(S) ⊇ τ²(S) ⊇ ..` up to its first repetition.
#[derive(Clone, Debug)]
pub struct LimitSet {
    pub omega: GroupSFT,
    /// Least `n` with `τ^(n+1)(S) = τ^n(S)`.
    pub stability_index: usize,
    /// `S, τ(S), .., τ^(n+1)(S)`.
    pub chain: Vec<GroupSFT>,
    /// Certified window of each image in `chain[1..]`.
    pub windows: Vec<usize>,
}

impl GroupCA {
    pub fn new(rule: Homomorphism) -> Result<Self> {
        if rule.out_len() != 1 {
            return Err(Error::InvalidArgument(format!(
                "a local rule has one output symbol, found {}",
                rule.out_len()
            )));
        }
        if rule.arity() == 0 {
            return Err(Error::InvalidArgument("memory length must be at least 1".into()));
        }
        Ok(GroupCA { rule })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        GroupCA {
            rule: Homomorphism::identity(alphabet, 1),
        }
    }

    /// The shift `y(n) = x(n + 1)`.
    pub fn shift(alphabet: &Alphabet) -> Self {
        GroupCA {
            rule: Homomorphism::selection(alphabet, 2, &[1]).expect("position 1 of 2"),
        }
    }

    pub fn domain(&self) -> &Alphabet {
        self.rule.domain()
    }

    pub fn codomain(&self) -> &Alphabet {
        self.rule.codomain()
    }

    pub fn memory(&self) -> usize {
        self.rule.arity()
    }

    pub fn rule(&self) -> &Homomorphism {
        &self.rule
    }

    pub fn apply_word(&self, w: &Word) -> Result<Word> {
        if w.alphabet() != self.domain() {
            return Err(Error::AlphabetMismatch("word is not over the domain alphabet".into()));
        }
        let m = self.memory();
        if w.len() < m {
            return Err(Error::InvalidArgument(format!(
                "word of length {} is shorter than the memory {m}",
                w.len()
            )));
        }
        let out = w.as_slice().windows(m).map(|x| self.rule.apply_unchecked(x)[0]).collect();
        Ok(Word::new_unchecked(self.codomain(), out))
    }

    /// Image of a periodic configuration, with the same period.
    pub fn apply_periodic(&self, c: &PeriodicConfig) -> Result<PeriodicConfig> {
        if c.alphabet() != self.domain() {
            return Err(Error::AlphabetMismatch("configuration is not over the domain alphabet".into()));
        }
        let unrolled = c.unroll(c.period() + self.memory() - 1);
        PeriodicConfig::repeat(self.apply_word(&unrolled)?)
    }

    /// The sliding homomorphism `A^(k + m - 1) -> B^k`.
    pub fn block_map(&self, k: usize) -> Result<Homomorphism> {
        if k == 0 {
            return Err(Error::InvalidArgument("output length must be at least 1".into()));
        }
        self.rule.sliding(k)
    }

    /// `self ∘ inner`, with memory `m_inner + m_self - 1`.
    pub fn compose(&self, inner: &GroupCA) -> Result<GroupCA> {
        GroupCA::new(self.rule.compose(&inner.block_map(self.memory())?)?)
    }

    fn check_domain(&self, s: &GroupSFT) -> Result<()> {
        if s.alphabet() != self.domain() {
            return Err(Error::AlphabetMismatch(format!(
                "shift over {} is not over the domain {}",
                s.alphabet().describe(),
                self.domain().describe()
            )));
        }
        Ok(())
    }

    /// `τ(S)` as a group SFT, with the default window cap.
    pub fn image_sft(&self, s: &GroupSFT) -> Result<GroupSFT> {
        Ok(self.image_report(s, DEFAULT_MAX_WINDOW)?.sft)
    }

    /// The SFT `τ^-1(S2)`.
    pub fn preimage_sft(&self, s2: &GroupSFT) -> Result<GroupSFT> {
        if s2.alphabet() != self.codomain() {
            return Err(Error::AlphabetMismatch(format!(
                "shift over {} is not over the codomain {}",
                s2.alphabet().describe(),
                self.codomain().describe()
            )));
        }
        let pattern = self.block_map(s2.window())?.preimage(s2.pattern())?;
        Ok(GroupSFT::new(pattern)?.essentialize())
    }

    pub fn kernel(&self) -> GroupSFT {
        self.preimage_sft(&GroupSFT::trivial(self.codomain()))
            .expect("trivial shift lies over the codomain")
    }

    /// Iterates images of `s` until two consecutive ones coincide.
    pub fn limit_set(&self, s: &GroupSFT, max_window: usize, max_iterations: usize) -> Result<LimitSet> {
        self.check_domain(s)?;
        if self.domain() != self.codomain() {
            return Err(Error::Precondition("limit sets need a CA from an alphabet to itself".into()));
        }
        let mut chain = vec![s.essentialize()];
        let mut windows = Vec::new();
        loop {
            let n = chain.len() - 1;
            let report = self.image_report(&chain[n], max_window)?;
            windows.push(report.window);
            let next = report.sft;
            if n == 0 && !s.contains(&next)? {
                return Err(Error::Precondition("the CA does not map the shift into itself".into()));
            }
            let stable = next.equals(&chain[n])?;
            chain.push(next);
            if stable {
                return Ok(LimitSet {
                    omega: chain[n].clone(),
                    stability_index: n,
                    chain,
                    windows,
                });
            }
            if n + 1 >= max_iterations {
                return Err(Error::cap(
                    "limit set iteration",
                    max_iterations as u64,
                    "raise --max-iterations",
                ));
            }
        }
    }
}
