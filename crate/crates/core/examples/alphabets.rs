//! Alphabets, subgroups of A^k and local homomorphisms.

use gsft::alphabet::{Alphabet, Homomorphism, Subgroup};

fn main() -> gsft::Result<()> {
    let s3 = Alphabet::symmetric(3)?;
    let v = Alphabet::vector_space(3, 2)?;
    for a in [&s3, &v] {
        println!("{}: order {}, abelian {}", a.describe(), a.order(), a.is_abelian());
    }

    // the diagonal of S_3 x S_3
    let t = s3.element_of_permutation(&[1, 0, 2]).unwrap();
    let c = s3.element_of_permutation(&[1, 2, 0]).unwrap();
    let diag = Subgroup::generated(&s3, 2, &[vec![t, t], vec![c, c]])?;
    println!("diagonal of S_3^2 has order {}", diag.order());

    let first = Subgroup::generated(&s3, 2, &[vec![t, 0], vec![c, 0]])?;
    println!("diagonal ∩ first factor has order {}", diag.intersect(&first)?.order());

    // (x, y) -> x + y over GF(3)^2, coordinatewise
    let sum = Homomorphism::from_matrix(&v, 2, &v, 1, vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]])?;
    let kernel = sum.kernel();
    println!("kernel of the sum map on (GF(3)^2)^2 has order {}", kernel.order());
    let x = v.from_residues(&[1, 2])?;
    println!("sum({x}, {x}) = {:?}", sum.apply(&[x, x])?);
    Ok(())
}
