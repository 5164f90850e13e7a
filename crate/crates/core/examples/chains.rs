//! Descending chains: iterated images, running intersections and finite windows.

use gsft::catalog;
use gsft::chains::{intersect_chain, iterate_images, markov_window_demo};
use gsft::shiftspace::GroupSFT;

fn main() -> gsft::Result<()> {
    let r = iterate_images(&catalog::tau_drop(), &catalog::full(&catalog::gf2_2()), 16, 64)?;
    print!("{}", r.to_table());

    let v = catalog::gf2_2();
    let shifts = [catalog::full(&v), catalog::second_zero(), GroupSFT::trivial(&v), GroupSFT::trivial(&v)];
    let (_, r) = intersect_chain(&shifts)?;
    print!("{}", r.to_table());

    let gf2 = catalog::gf(2);
    let m = markov_window_demo("x_n = x_(n+k), k <= n", |k| catalog::shift_equality(&gf2, k), 8, 16)?;
    println!("constraint family collapses to window {}", m.window);
    Ok(())
}
