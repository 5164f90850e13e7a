//! Image of a group SFT under a group CA, with a window certificate.
//!
//! Points of `S` are bi-infinite paths in the graph whose vertices are the
//! `r`-blocks and whose edges are the `(r + 1)`-blocks of `S`, `r = max(m_S, m) - 1`.
//! Labelling an edge by `μ` of its last `m` symbols presents `τ(S)` as a group
//! sofic shift. For the group `E₀` of identity-labelled edges put
//!
//! * `C_n`: terminal vertices of identity-labelled paths of length `n`,
//! * `D`: initial vertices of infinite identity-labelled forward paths.
//!
//! The futures of a set of vertices `T` depend only on `⟨T ∪ D⟩`, so the image
//! has window `k` exactly when `⟨C_(k-1) ∪ D⟩ = ⟨C_∞ ∪ D⟩`.

use super::GroupCA;
use crate::alphabet::{Homomorphism, Subgroup};
use crate::error::{Error, Result};
use crate::shiftspace::GroupSFT;

/// Outcome of [`GroupCA::image_report`].
#[derive(Clone, Debug)]
pub struct ImageReport {
    pub sft: GroupSFT,
    /// Window at which the block check was accepted.
    pub window: usize,
    /// Smallest window of the image.
    pub minimal_window: usize,
    /// Windows below `minimal_window` where the block check alone would have passed.
    pub rejected_windows: Vec<usize>,
}

fn join(x: &Subgroup, y: &Subgroup) -> Subgroup {
    let mut gens = x.generators();
    gens.extend(y.generators());
    Subgroup::generated_unchecked(x.alphabet(), x.len(), &gens)
}

fn stabilize(start: Subgroup, step: impl Fn(&Subgroup) -> Subgroup) -> Vec<Subgroup> {
    let bound = start.alphabet().chain_length_bound(start.len());
    let mut seq = vec![start];
    loop {
        let next = step(seq.last().unwrap());
        if &next == seq.last().unwrap() {
            return seq;
        }
        debug_assert!(seq.len() <= bound, "descending chain longer than {bound}");
        seq.push(next);
    }
}

impl GroupCA {
    fn minimal_image_window(&self, s: &GroupSFT) -> Result<usize> {
        let m = self.memory();
        let r = s.window().max(m) - 1;
        if r == 0 {
            return Ok(1);
        }
        let a = self.domain();
        let edges = s.blocks(r + 1)?;
        let label = self
            .rule()
            .compose(&Homomorphism::selection(a, r + 1, &(r + 1 - m..r + 1).collect::<Vec<_>>())?)?;
        let silent = edges.intersect(&label.kernel())?;
        let src = Homomorphism::selection(a, r + 1, &(0..r).collect::<Vec<_>>())?;
        let dst = Homomorphism::selection(a, r + 1, &(1..r + 1).collect::<Vec<_>>())?;
        let vertices = s.blocks(r)?;
        let forward = |c: &Subgroup| {
            let e = silent.intersect(&src.preimage(c).expect("vertex group")).expect("edge group");
            dst.image(&e).expect("edge group")
        };
        let backward = |c: &Subgroup| {
            let e = silent.intersect(&dst.preimage(c).expect("vertex group")).expect("edge group");
            src.image(&e).expect("edge group")
        };
        let reach = stabilize(vertices.clone(), forward);
        let infinite = stabilize(vertices, backward).pop().unwrap();
        let target = join(reach.last().unwrap(), &infinite);
        let n = reach
            .iter()
            .position(|c| join(c, &infinite) == target)
            .expect("the limit itself qualifies");
        Ok(n + 1)
    }

    /// `τ(S)` together with its certified and minimal windows.
    ///
    /// Candidate windows `k = m_S, m_S + 1, ..` take `Q_k` as the image of the
    /// `(k + m - 1)`-blocks of `S`, and `k` is accepted when `Q_(k+1)` equals the
    /// `(k + 1)`-blocks of the SFT defined by `Q_k` and `k` is at least the
    /// minimal window.
    pub fn image_report(&self, s: &GroupSFT, max_window: usize) -> Result<ImageReport> {
        self.check_domain(s)?;
        let minimal = self.minimal_image_window(s)?;
        if minimal > max_window {
            return Err(Error::cap(
                format!("image window (needs {minimal})"),
                max_window as u64,
                "raise --max-window",
            ));
        }
        let m = self.memory();
        let q = |k: usize| -> Result<Subgroup> { self.block_map(k)?.image(&s.blocks(k + m - 1)?) };
        let mut rejected = Vec::new();
        let start = s.window();
        if start > max_window {
            return Err(Error::cap("image window", max_window as u64, "raise --max-window"));
        }
        let mut qk = q(start)?;
        for k in start..=max_window {
            let next = q(k + 1)?;
            let candidate = GroupSFT::new(qk.clone())?;
            let passes = candidate.blocks(k + 1)? == next;
            if k >= minimal {
                if !passes {
                    return Err(Error::Internal(format!(
                        "block check failed at window {k} although the image has window {minimal}"
                    )));
                }
                return Ok(ImageReport {
                    sft: GroupSFT::raw(qk, true),
                    window: k,
                    minimal_window: minimal,
                    rejected_windows: rejected,
                });
            }
            if passes {
                rejected.push(k);
            }
            qk = next;
        }
        unreachable!("minimal window is within the cap")
    }
}
