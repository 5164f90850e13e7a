//! x_(n+1) = a x_n over the rationals has no nonzero periodic point.

use gsft::chains::RationalOrbitShift;

fn main() -> gsft::Result<()> {
    for a in ["2", "-2", "3/2", "-5/3"] {
        let r = RationalOrbitShift::parse(a)?.counterexample(16)?;
        println!("a = {:>5}: {} (a^16 = {})", r.a, r.verdict, r.rows.last().unwrap().a_pow);
    }
    println!("a = 1 rejected: {}", RationalOrbitShift::parse("1").is_err());
    Ok(())
}
