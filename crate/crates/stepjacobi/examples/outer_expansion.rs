//! Strong asymptotics away from the interval: the ratio 2^n P_n(z)/phi(z)^n
//! approaches a Szego-function expression, and adding the 1/n correction
//! upgrades the error from O(1/n) to O(1/n^2).
//!
//! Run with: cargo run --release --example outer_expansion

use num_complex::Complex64;
use stepjacobi::asymptotics::{outer_prediction, outer_ratio_numeric, Order};
use stepjacobi::{build_recurrence, WeightSpec};

fn main() -> stepjacobi::Result<()> {
    let spec = WeightSpec::jacobi(0.0, 0.0, 2.0)?;
    let table = build_recurrence(&spec, 512)?;
    for z in [Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.8)] {
        println!("z = {z}");
        println!(
            "{:>5} {:>24} {:>12} {:>12}",
            "n", "2^n P_n(z)/phi^n", "err order0", "err order1"
        );
        for n in [16usize, 32, 64, 128, 256, 512] {
            let numeric = outer_ratio_numeric(&table, n, z)?;
            let e0 = (numeric - outer_prediction(&spec, n, z, Order::Leading)?).norm();
            let e1 = (numeric - outer_prediction(&spec, n, z, Order::WithCorrection)?).norm();
            println!(
                "{:>5} {:>11.6}{:>+11.6}i {:>12.3e} {:>12.3e}",
                n, numeric.re, numeric.im, e0, e1
            );
        }
        println!();
    }
    Ok(())
}
