//! The confluent-hypergeometric phase machinery behind the zero
//! predictions: the continuous argument y(x) of 1F1(ia;1;ix), the strictly
//! increasing frak_g(x) = x - 2 y(x), its inverse, and the ODE they solve.
//!
//! Run with: cargo run --release --example confluent_phase

use std::f64::consts::PI;
use stepjacobi::specfun::{arg_f1, frak_g, frak_g_sweep, invert_frak_g, upsilon};

fn main() -> stepjacobi::Result<()> {
    let a = 2f64.ln() / PI; // jump strength of c = 2
    println!("a = log(2)/pi = {a:.10}");
    println!();
    println!(
        "{:>6} {:>14} {:>14} {:>12}",
        "x", "y(x)", "frak_g(x)", "ODE residual"
    );
    for &x in &[-20.0, -5.0, -1.0, 1.0, 5.0, 20.0] {
        let y = arg_f1(a, x)?;
        let g = frak_g(a, x)?;
        let h = 1e-5;
        let yp = (arg_f1(a, x + h)? - arg_f1(a, x - h)?) / (2.0 * h);
        let residual = x * yp - a * ((x - 2.0 * y).cos() - 1.0);
        println!("{x:>6.1} {y:>14.10} {g:>14.10} {residual:>12.2e}");
    }
    println!();

    // frak_g is strictly increasing, so its level sets order the zeros
    let xs: Vec<f64> = (0..=40).map(|k| -10.0 + 0.5 * k as f64).collect();
    let gs = frak_g_sweep(a, &xs)?;
    let min_gap = gs
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    println!("frak_g on [-10, 10] in steps of 0.5: smallest increment {min_gap:.4} (> 0)");

    let target = 2.0 * PI;
    let t = invert_frak_g(a, target)? / (2.0 * PI);
    println!("density endpoint: frak_g(2 pi t) = 2 pi at t = {t:.6} (< 1 for c > 1)");
    println!();
    println!(
        "Upsilon(2) = {:.12}, Upsilon(1/2) = {:.12}",
        upsilon(2.0),
        upsilon(0.5)
    );
    Ok(())
}
