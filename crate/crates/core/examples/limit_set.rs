//! Limit sets of group CAs.

use gsft::catalog;

fn main() -> gsft::Result<()> {
    let drop = catalog::tau_drop();
    let l = drop.limit_set(&catalog::full(&catalog::gf2_2()), 16, 64)?;
    println!(
        "τ_drop: stability index {}, limit set is 'second coordinate 0': {}",
        l.stability_index,
        l.omega.equals(&catalog::second_zero())?
    );
    for (n, s) in l.chain.iter().enumerate() {
        println!("  τ^{n}(S): {} symbols", s.blocks(1)?.order());
    }

    let sum = catalog::tau_sum();
    let l = sum.limit_set(&catalog::full(&catalog::gf(2)), 16, 64)?;
    println!("τ_sum is onto: stability index {}", l.stability_index);
    Ok(())
}
