//! Descending chains of group shifts and their stabilization.

mod rational;

use std::fmt::Write as _;

use serde::Serialize;

use crate::ca::GroupCA;
use crate::error::{Error, Result};
use crate::shiftspace::GroupSFT;

pub use rational::{CounterexampleReport, PeriodRow, RationalOrbitShift};

#[derive(Clone, Debug, Serialize)]
pub struct Snapshot {
    pub step: usize,
    pub window: usize,
    /// Order of the essential pattern group, in decimal.
    pub order: String,
    pub rank: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub description: String,
    pub snapshots: Vec<Snapshot>,
    pub stabilization_index: Option<usize>,
    /// Longest strictly descending chain possible at the working window.
    pub bound: usize,
    pub working_window: usize,
    /// Steps where the shift strictly shrinks; never more than `bound`.
    pub strict_descents: usize,
    /// Whether a step after the stabilization index was checked to be equal.
    pub confirmed: bool,
    pub verdict: String,
}

impl ChainReport {
    fn build(description: String, chain: &[GroupSFT], index: Option<usize>, confirmed: bool) -> Result<Self> {
        let working = chain.iter().map(GroupSFT::window).max().unwrap_or(1);
        let mut descents = 0;
        for pair in chain.windows(2) {
            if !pair[0].contains(&pair[1])? {
                return Err(Error::Internal("chain is not descending".into()));
            }
            if !pair[1].contains(&pair[0])? {
                descents += 1;
            }
        }
        let snapshots = chain
            .iter()
            .enumerate()
            .map(|(step, s)| {
                let e = s.essentialize();
                Snapshot {
                    step,
                    window: s.window(),
                    order: e.pattern().order().to_string(),
                    rank: e.pattern().rank(),
                }
            })
            .collect();
        let bound = chain
            .first()
            .map_or(0, |s| s.alphabet().chain_length_bound(working));
        let verdict = match (index, confirmed) {
            (Some(i), true) => format!("stabilized at step {i}"),
            (Some(i), false) => format!("equal to the last step from step {i}; extend the chain to confirm"),
            (None, _) => "still descending".to_string(),
        };
        if descents > bound {
            return Err(Error::Internal(format!("{descents} strict descents exceed the bound {bound}")));
        }
        Ok(ChainReport {
            description,
            snapshots,
            stabilization_index: index,
            bound,
            working_window: working,
            strict_descents: descents,
            confirmed,
            verdict,
        })
    }

    /// Plain-text table of the snapshots.
    pub fn to_table(&self) -> String {
        let mut out = format!("{}\n{:>5} {:>7} {:>12} {:>5}\n", self.description, "step", "window", "order", "rank");
        for s in &self.snapshots {
            let rank = s.rank.map_or("-".to_string(), |r| r.to_string());
            let _ = writeln!(out, "{:>5} {:>7} {:>12} {:>5}", s.step, s.window, s.order, rank);
        }
        let index = self.stabilization_index.map_or("-".into(), |i| i.to_string());
        let _ = writeln!(
            out,
            "stabilization index: {index}, strict descents: {} (bound {})",
            self.strict_descents, self.bound
        );
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}

/// The chain `S ⊇ τ(S) ⊇ τ²(S) ⊇ ..`, with one extra image computed past stabilization.
pub fn iterate_images(tau: &GroupCA, s: &GroupSFT, max_window: usize, cap: usize) -> Result<ChainReport> {
    let limit = tau.limit_set(s, max_window, cap)?;
    let last = limit.chain.last().expect("chain is nonempty");
    let extra = tau.image_report(last, max_window)?.sft;
    let confirmed = extra.equals(last)?;
    if !confirmed {
        return Err(Error::Internal("images changed after stabilizing".into()));
    }
    ChainReport::build(
        format!("iterated images under a CA with memory {}", tau.memory()),
        &limit.chain,
        Some(limit.stability_index),
        confirmed,
    )
}

/// Running intersections `I_n = S_0 ∩ .. ∩ S_n`; the index is the least `n` with `I_n = I_last`.
pub fn intersect_chain(shifts: &[GroupSFT]) -> Result<(GroupSFT, ChainReport)> {
    let first = shifts
        .first()
        .ok_or_else(|| Error::InvalidArgument("an intersection chain needs at least one shift".into()))?;
    let mut running = vec![first.essentialize()];
    for s in &shifts[1..] {
        let next = running.last().unwrap().intersect(s)?;
        running.push(next);
    }
    let last = running.last().unwrap().clone();
    let mut index = running.len() - 1;
    while index > 0 && running[index - 1].equals(&last)? {
        index -= 1;
    }
    let confirmed = index + 1 < running.len();
    let report = ChainReport::build(
        format!("running intersection of {} shifts", shifts.len()),
        &running,
        Some(index),
        confirmed,
    )?;
    Ok((last, report))
}

/// Result of [`markov_window_demo`].
#[derive(Clone, Debug)]
pub struct MarkovWindow {
    pub sft: GroupSFT,
    /// Least window whose blocks define the intersection.
    pub window: usize,
    pub report: ChainReport,
}

/// Intersects the constraints `template(1), .., template(cap)` and certifies the
/// finite window of the result. Fails when the intersection still shrinks at `cap`.
pub fn markov_window_demo(
    description: &str,
    template: impl Fn(usize) -> Result<GroupSFT>,
    cap: usize,
    max_window: usize,
) -> Result<MarkovWindow> {
    if cap < 2 {
        return Err(Error::InvalidArgument("the template cap must be at least 2".into()));
    }
    let shifts = (1..=cap).map(template).collect::<Result<Vec<_>>>()?;
    let (sft, mut report) = intersect_chain(&shifts)?;
    if !report.confirmed {
        return Err(Error::cap(
            "constraint template instances",
            cap as u64,
            "the intersection still shrinks at the cap; increase it",
        ));
    }
    report.description = description.to_string();
    let window = sft.minimal_window(max_window)?;
    Ok(MarkovWindow { sft, window, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn image_chain_examples() {
        let drop = iterate_images(&catalog::tau_drop(), &catalog::full(&catalog::gf2_2()), 16, 16).unwrap();
        assert_eq!(drop.stabilization_index, Some(1));
        assert!(drop.confirmed);
        let id = iterate_images(&GroupCA::identity(&catalog::gf(2)), &catalog::constants(2), 16, 16).unwrap();
        assert_eq!(id.stabilization_index, Some(0));
        let sum = iterate_images(&catalog::tau_sum(), &catalog::full(&catalog::gf(2)), 16, 16).unwrap();
        assert_eq!(sum.stabilization_index, Some(0));
    }

    #[test]
    fn intersection_chain_examples() {
        let c = catalog::constants(2);
        let (s, r) = intersect_chain(&[c.clone(), c.widen(3).unwrap(), c.widen(4).unwrap()]).unwrap();
        assert_eq!(r.stabilization_index, Some(0));
        assert!(s.equals(&c).unwrap());

        let v = catalog::gf2_2();
        let (t, r) = intersect_chain(&[catalog::full(&v), catalog::second_zero(), GroupSFT::trivial(&v)]).unwrap();
        assert_eq!(r.stabilization_index, Some(2));
        assert!(t.pattern().is_trivial());

        let powers: Vec<GroupSFT> = [8, 4, 2, 1, 1]
            .iter()
            .map(|&n| catalog::power(&catalog::tau_sum(), n).kernel())
            .collect();
        let (k, r) = intersect_chain(&powers).unwrap();
        assert!(k.equals(&c).unwrap());
        assert_eq!(r.stabilization_index, Some(3));
        assert!(r.confirmed);
    }

    #[test]
    fn markov_examples() {
        let gf2 = catalog::gf(2);
        let eq = markov_window_demo("x_n = x_(n+k)", |k| catalog::shift_equality(&gf2, k), 6, 16).unwrap();
        assert!(eq.sft.equals(&catalog::constants(2)).unwrap());
        assert_eq!(eq.window, 2);
        let orbit = catalog::orbit(3, 2);
        let rep = markov_window_demo("repeat", |_| Ok(orbit.clone()), 4, 16).unwrap();
        assert_eq!(rep.window, 2);
        let tau = catalog::tau_sum();
        let ker = markov_window_demo("ker τ^n", |n| Ok(catalog::power(&tau, n).kernel()), 5, 16).unwrap();
        assert!(ker.sft.equals(&tau.kernel()).unwrap());
        let late = |k: usize| Ok(if k < 6 { catalog::full(&gf2) } else { catalog::constants(2) });
        assert!(markov_window_demo("late", late, 6, 16).unwrap_err().is_cap_exceeded());
    }
}
