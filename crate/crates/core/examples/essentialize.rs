//! Group SFTs: essential patterns, blocks and windows.

use gsft::catalog;
use gsft::shiftspace::GroupSFT;

fn main() -> gsft::Result<()> {
    let trap = catalog::zero_trap();
    let (e, steps) = trap.essentialize_counted();
    println!(
        "zero trap: pattern order {} -> {} after {steps} refinement step(s)",
        trap.pattern().order(),
        e.pattern().order()
    );

    let delay = catalog::delay();
    for k in 1..=5 {
        println!("delay shift: {} blocks of length {k}", delay.blocks(k)?.order());
    }

    let wide = catalog::constants(2).widen(5)?;
    println!(
        "constants widened to window {} still have minimal window {}",
        wide.window(),
        wide.minimal_window(16)?
    );

    let both = catalog::orbit(3, 2).intersect(&GroupSFT::from_generators(&catalog::gf(3), 2, &[vec![1, 1]])?)?;
    println!("x_(n+1) = 2 x_n and x_(n+1) = x_n meet in a shift of order {}", both.blocks(3)?.order());
    Ok(())
}
