//! Images, preimages and kernels of group cellular automata.

use gsft::alphabet::Homomorphism;
use gsft::ca::GroupCA;
use gsft::catalog;

fn main() -> gsft::Result<()> {
    let sign = catalog::tau_sign();
    let r = sign.image_report(&catalog::full(&catalog::s3()), 16)?;
    println!("sign CA on S_3: image has {} symbols, window {}", r.sft.blocks(1)?.order(), r.minimal_window);

    // y_n = (x_n, x_(n+3)) needs window 4 to describe its image
    let gf2 = catalog::gf(2);
    let v = catalog::gf2_2();
    let rule = Homomorphism::from_matrix(&gf2, 4, &v, 1, vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1]])?;
    let r = GroupCA::new(rule)?.image_report(&catalog::full(&gf2), 16)?;
    println!(
        "(x_n, x_(n+3)): certified window {}, windows that only pass the block check {:?}",
        r.window, r.rejected_windows
    );

    let sum = catalog::tau_sum();
    println!("kernel of x_n + x_(n+1) equals the constants: {}", sum.kernel().equals(&catalog::constants(2))?);
    let pre = sum.preimage_sft(&catalog::constants(2))?;
    println!("preimage of the constants has window {} and {} 3-blocks", pre.window(), pre.blocks(3)?.order());
    Ok(())
}
