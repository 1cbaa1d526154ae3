//! Recurrence coefficients of the jump weight against their asymptotic
//! expansions: a_n -> 1/2 and b_n -> 0 with oscillating 1/n corrections
//! driven by the phase theta_n.
//!
//! Run with: cargo run --release --example recurrence_sweep

use stepjacobi::asymptotics::recurrence_prediction;
use stepjacobi::{build_recurrence, WeightSpec};

fn main() -> stepjacobi::Result<()> {
    let spec = WeightSpec::jacobi(0.0, 0.0, 2.0)?;
    let table = build_recurrence(&spec, 257)?;
    println!("weight: alpha = 0, beta = 0, c = 2  (jump factor c^2 = 4 on [0, 1])");
    println!(
        "quadrature: {} points per half, orthogonality defect {:.2e}",
        table.quad_npts, table.ortho_defect
    );
    println!();
    println!(
        "{:>5} {:>14} {:>14} {:>11} {:>11}",
        "n", "a_n", "b_n", "err_a*n^2", "err_b*n^2"
    );
    for n in [8usize, 16, 32, 64, 128, 256] {
        let (pa, pb) = recurrence_prediction(&spec, n)?;
        let nf = (n * n) as f64;
        println!(
            "{:>5} {:>14.10} {:>14.10} {:>11.4} {:>11.4}",
            n,
            table.a(n),
            table.b(n),
            (table.a(n) - pa).abs() * nf,
            (table.b(n) - pb).abs() * nf,
        );
    }
    println!();
    println!("the scaled errors stay bounded: both expansions are accurate to O(1/n^2)");
    Ok(())
}
