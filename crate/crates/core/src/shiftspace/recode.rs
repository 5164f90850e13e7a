//! Passing between ℤ and its finite-index subgroups `dℤ`.

use super::GroupSFT;
use crate::alphabet::{Alphabet, Homomorphism};
use crate::ca::GroupCA;
use crate::error::{Error, Result};

fn check_index(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument("index d must be at least 1".into()));
    }
    Ok(())
}

/// Configurations of `s` read in consecutive non-overlapping `d`-blocks, over `A^d`.
pub fn recode_higher_block(s: &GroupSFT, d: usize) -> Result<GroupSFT> {
    check_index(d)?;
    if d == 1 {
        return Ok(s.essentialize());
    }
    let m = (s.window() + d - 1).div_ceil(d);
    let grouped = s.blocks(d * m)?.group(d)?;
    Ok(GroupSFT::raw(grouped, true))
}

/// Inverse of [`recode_higher_block`]: the configurations over `base` whose every
/// `d`-block reading lies in `t`.
pub fn decode_higher_block(t: &GroupSFT, base: &Alphabet, d: usize) -> Result<GroupSFT> {
    check_index(d)?;
    if d == 1 {
        return t.check_alphabet(&GroupSFT::full(base)).map(|_| t.clone());
    }
    GroupSFT::new(t.pattern().ungroup(base, d)?)
}

/// The subshift `{x|_{dℤ} : x ∈ s}`, read as a shift over the same alphabet.
pub fn restrict_to_subgroup(s: &GroupSFT, d: usize) -> Result<GroupSFT> {
    check_index(d)?;
    if d == 1 {
        return Ok(s.essentialize());
    }
    let a = s.alphabet();
    let recoded = recode_higher_block(s, d)?;
    let first = Homomorphism::from_fn(recoded.alphabet(), 1, a, 1, |_, x| vec![a.ungroup_tuple(&[x], d)[0]]);
    GroupCA::new(first)?.image_sft(&recoded)
}

/// The configurations over `A` whose restriction to every coset `r + dℤ` lies in `lambda`.
pub fn induce_from_subgroup(lambda: &GroupSFT, d: usize) -> Result<GroupSFT> {
    check_index(d)?;
    let m = lambda.window();
    let positions: Vec<usize> = (0..m).map(|i| i * d).collect();
    GroupSFT::new(lambda.pattern().cylinder_lift(d * (m - 1) + 1, &positions)?)
}
