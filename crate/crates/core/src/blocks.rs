//! Finite words and periodic configurations.

use std::fmt;

use crate::alphabet::{Alphabet, Elem, Tuple};
use crate::error::{Error, Result};

/// A finite word over a group alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    elems: Tuple,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.elems)
    }
}

impl Word {
    pub fn new(alphabet: &Alphabet, elems: Tuple) -> Result<Self> {
        alphabet.check_tuple(&elems, elems.len())?;
        Ok(Word {
            alphabet: alphabet.clone(),
            elems,
        })
    }

    pub(crate) fn new_unchecked(alphabet: &Alphabet, elems: Tuple) -> Self {
        Word {
            alphabet: alphabet.clone(),
            elems,
        }
    }

    pub fn identity(alphabet: &Alphabet, len: usize) -> Self {
        Self::new_unchecked(alphabet, alphabet.identity_tuple(len))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.elems
    }

    pub fn into_inner(self) -> Tuple {
        self.elems
    }

    /// All contiguous subwords of length `k`, left to right.
    pub fn subwords(&self, k: usize) -> Result<Vec<Word>> {
        if k > self.len() {
            return Err(Error::InvalidArgument(format!(
                "subword length {k} exceeds word length {}",
                self.len()
            )));
        }
        Ok((0..=self.len() - k)
            .map(|i| Self::new_unchecked(&self.alphabet, self.elems[i..i + k].to_vec()))
            .collect())
    }

    fn check_same(&self, other: &Word) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "{} vs {}",
                self.alphabet.describe(),
                other.alphabet.describe()
            )));
        }
        if self.len() != other.len() {
            return Err(Error::Arity {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Word) -> Result<Word> {
        self.check_same(other)?;
        Ok(Self::new_unchecked(&self.alphabet, self.alphabet.mul_tuple(&self.elems, &other.elems)))
    }

    /// Pointwise inverse.
    pub fn inv(&self) -> Word {
        Self::new_unchecked(&self.alphabet, self.alphabet.inv_tuple(&self.elems))
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch("cannot concatenate words over different alphabets".into()));
        }
        Ok(Self::new_unchecked(&self.alphabet, [self.as_slice(), other.as_slice()].concat()))
    }

    pub fn is_identity(&self) -> bool {
        self.alphabet.is_identity_tuple(&self.elems)
    }
}

/// The periodic configuration `x(i) = w[(i + phase) mod p]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PeriodicConfig {
    word: Word,
    phase: usize,
}

impl PeriodicConfig {
    pub fn new(word: Word, phase: usize) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidArgument("a periodic configuration needs period at least 1".into()));
        }
        if phase >= word.len() {
            return Err(Error::InvalidArgument(format!(
                "phase {phase} is not below the period {}",
                word.len()
            )));
        }
        Ok(PeriodicConfig { word, phase })
    }

    /// `w^∞` with phase 0.
    pub fn repeat(word: Word) -> Result<Self> {
        Self::new(word, 0)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn phase(&self) -> usize {
        self.phase
    }

    pub fn period(&self) -> usize {
        self.word.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.word.alphabet()
    }

    pub fn at(&self, i: i64) -> Elem {
        let p = self.period() as i64;
        self.word.elems[(i + self.phase as i64).rem_euclid(p) as usize]
    }

    /// The word `x(0) .. x(n-1)`.
    pub fn unroll(&self, n: usize) -> Word {
        Word::new_unchecked(self.alphabet(), (0..n as i64).map(|i| self.at(i)).collect())
    }

    /// The configuration read with phase 0.
    pub fn normalized(&self) -> PeriodicConfig {
        PeriodicConfig {
            word: self.unroll(self.period()),
            phase: 0,
        }
    }

    /// The length-`k` windows starting at positions `0 .. p`.
    pub fn wrap_subwords(&self, k: usize) -> Vec<Word> {
        let unrolled = self.unroll(self.period() + k);
        (0..self.period())
            .map(|i| Word::new_unchecked(self.alphabet(), unrolled.elems[i..i + k].to_vec()))
            .collect()
    }

    /// Least period of the configuration.
    pub fn primitive_period(&self) -> usize {
        let p = self.period();
        let w = &self.word.elems;
        (1..=p)
            .find(|&q| p.is_multiple_of(q) && (0..p).all(|i| w[i] == w[(i + q) % p]))
            .unwrap_or(p)
    }

    /// The same configuration presented with its least period.
    pub fn reduced(&self) -> PeriodicConfig {
        let q = self.primitive_period();
        PeriodicConfig {
            word: self.normalized().unroll(q),
            phase: 0,
        }
    }
}
