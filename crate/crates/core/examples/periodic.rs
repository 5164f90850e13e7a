//! Periodic points, irreducibility and periodic density.

use gsft::catalog;
use gsft::periodic::{density_report, is_irreducible, periodic_points, w_subshift_check, TransferGraph};

fn main() -> gsft::Result<()> {
    let delay = catalog::delay();
    for p in 1..=4 {
        println!("delay shift: {} points of period {p}", periodic_points(&delay, p)?.order());
    }
    println!("delay irreducible: {}", is_irreducible(&delay)?);
    println!("swap irreducible: {}", is_irreducible(&catalog::swap())?);

    let w = w_subshift_check(&delay, 2, 3)?;
    println!("delay has a filler bound of at most 2: {}", w.holds);

    let d = density_report(&delay, 4, 12, false)?;
    println!("{} of {} words up to length 4 extend to periodic points", d.covered, d.words);

    print!("{}", TransferGraph::new(&catalog::orbit(3, 2))?.to_dot());
    Ok(())
}
