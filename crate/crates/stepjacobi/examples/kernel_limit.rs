//! The Christoffel-Darboux kernel at the jump converges to a confluent
//! hypergeometric kernel, not the sine kernel. The first table shows the
//! scaled finite kernel approaching the limit; the second contrasts the
//! limit with the sine kernel along a diagonal slice.
//!
//! Run with: cargo run --release --example kernel_limit

use std::f64::consts::PI;

use stepjacobi::asymptotics::{k_infty, reproducing_check};
use stepjacobi::orthopoly::cd_kernel;
use stepjacobi::{build_recurrence, WeightSpec};

fn main() -> stepjacobi::Result<()> {
    let spec = WeightSpec::jacobi(0.0, 0.0, 2.0)?;
    let table = build_recurrence(&spec, 1024)?;
    let (x, y) = (0.3, -0.2);
    let limit = k_infty(&spec, x, y)?;
    println!("scaled kernel (pi/n) K_n(pi x/n, pi y/n) at (x, y) = ({x}, {y}), c = 2:");
    println!("{:>6} {:>14} {:>10}", "n", "value", "abs err");
    for n in [32usize, 64, 128, 256, 512, 1024] {
        let nf = n as f64;
        let v = PI / nf * cd_kernel(&table, n, PI * x / nf, PI * y / nf)?;
        println!("{n:>6} {v:>14.8} {:>10.2e}", (v - limit).abs());
    }
    println!("{:>6} {limit:>14.8}   (confluent limit)", "inf");
    println!();

    println!("limit kernel vs the sine kernel, K(x, x - 1/2):");
    println!("{:>6} {:>12} {:>12}", "x", "K_inf", "sine kernel");
    let sinc = (PI * 0.5).sin() / (PI * 0.5);
    let mut x = -2.0;
    while x <= 2.0 + 1e-9 {
        println!(
            "{x:>6.2} {:>12.6} {sinc:>12.6}",
            k_infty(&spec, x, x - 0.5)?
        );
        x += 0.5;
    }
    println!();
    println!(
        "de Branges reproducing-kernel identity deviation at (0.7, -0.3): {:.2e}",
        reproducing_check(&spec, 0.7, -0.3)?
    );
    Ok(())
}
