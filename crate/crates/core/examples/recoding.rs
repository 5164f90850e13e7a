//! Higher-block recoding and restriction to the subgroup dℤ.

use gsft::catalog;
use gsft::shiftspace::{decode_higher_block, induce_from_subgroup, recode_higher_block, restrict_to_subgroup};

fn main() -> gsft::Result<()> {
    let s = catalog::delay();
    for d in [2, 3] {
        let r = recode_higher_block(&s, d)?;
        let back = decode_higher_block(&r, s.alphabet(), d)?;
        println!(
            "d = {d}: recoded alphabet {}, window {}, round trip {}",
            r.alphabet().describe(),
            r.window(),
            back.equals(&s)?
        );
        let lambda = restrict_to_subgroup(&s, d)?;
        let induced = induce_from_subgroup(&lambda, d)?;
        println!(
            "  restriction has window {}, induced shift window {}, restrict(induce) = id: {}",
            lambda.window(),
            induced.window(),
            restrict_to_subgroup(&induced, d)?.equals(&lambda)?
        );
    }
    Ok(())
}
