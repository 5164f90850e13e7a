//! The line shift `x_(n+1) = a x_n` over the rationals.
//!
//! Everything here is exact; the alphabet `ℚ` is not finite, so none of the
//! subgroup machinery applies.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalOrbitShift {
    a: BigRational,
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodRow {
    pub period: usize,
    /// `a^p`, reduced.
    pub a_pow: String,
    /// Dimension of the solution space of the period-`p` system.
    pub solution_dim: usize,
    pub only_zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub a: String,
    pub max_period: usize,
    pub rows: Vec<PeriodRow>,
    pub all_periods_zero: bool,
    /// `x_0, .., x_4` of the point with `x_0 = 1`.
    pub orbit_of_one: Vec<String>,
    /// Whether some periodic point of period `<= max_period` has `x_0 = 1`.
    pub cylinder_hit: bool,
    pub verdict: String,
}

/// Dimension of the kernel of `m` (rows of equal length).
fn nullity(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][c].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..cols {
                    let t = &f * &m[rank][j];
                    m[r][j] -= t;
                }
            }
        }
        rank += 1;
    }
    cols - rank
}

impl RationalOrbitShift {
    pub fn new(a: BigRational) -> Result<Self> {
        if a.is_zero() || a.abs().is_one() {
            return Err(Error::InvalidArgument(format!("a = {a} must not be 0, 1 or -1")));
        }
        Ok(RationalOrbitShift { a })
    }

    /// Parses `n` or `n/d`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("{s:?} is not a rational number"));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Self::new(BigRational::new(n, d))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Whether `(x_0, x_1)` is an allowed pattern.
    pub fn allows(&self, x0: &BigRational, x1: &BigRational) -> bool {
        &(&self.a * x0) == x1
    }

    /// The system `x_(i+1) = a x_i` for `i` mod `p`.
    fn period_system(&self, p: usize) -> Vec<Vec<BigRational>> {
        (0..p)
            .map(|i| {
                let mut row = vec![BigRational::zero(); p];
                row[i] -= &self.a;
                row[(i + 1) % p] += BigRational::one();
                row
            })
            .collect()
    }

    pub fn period_row(&self, p: usize) -> PeriodRow {
        let dim = nullity(self.period_system(p));
        PeriodRow {
            period: p,
            a_pow: num_traits::pow(self.a.clone(), p).to_string(),
            solution_dim: dim,
            only_zero: dim == 0,
        }
    }

    pub fn counterexample(&self, max_period: usize) -> Result<CounterexampleReport> {
        if max_period == 0 {
            return Err(Error::InvalidArgument("max period must be at least 1".into()));
        }
        let rows: Vec<PeriodRow> = (1..=max_period).map(|p| self.period_row(p)).collect();
        let all_zero = rows.iter().all(|r| r.only_zero);
        let mut x = BigRational::one();
        let mut orbit = Vec::new();
        for _ in 0..5 {
            orbit.push(x.to_string());
            x *= &self.a;
        }
        let verdict = if all_zero {
            "only periodic point is zero".to_string()
        } else {
            "nonzero periodic point found".to_string()
        };
        Ok(CounterexampleReport {
            a: self.a.to_string(),
            max_period,
            rows,
            all_periods_zero: all_zero,
            orbit_of_one: orbit,
            cylinder_hit: !all_zero,
            verdict,
        })
    }
}
