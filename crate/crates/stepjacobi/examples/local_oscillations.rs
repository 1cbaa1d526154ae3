//! P_n near the jump: in the pi/n scale the polynomial oscillates like
//! Im[e^{i theta_n/2} G(lambda; 2 pi i x)] instead of a pure sine wave.
//! The table compares the exact polynomial with that limit form.
//!
//! Run with: cargo run --release --example local_oscillations

use num_complex::Complex64;
use std::f64::consts::PI;

use stepjacobi::asymptotics::scaled_local_prediction;
use stepjacobi::orthopoly::eval_monic;
use stepjacobi::{build_recurrence, WeightSpec};

fn main() -> stepjacobi::Result<()> {
    let spec = WeightSpec::jacobi(0.0, 0.0, 2.0)?;
    let n = 128;
    let table = build_recurrence(&spec, n)?;
    let scale = 2f64.powf(n as f64 - 0.5) * (spec.c * spec.h(0.0)).sqrt();
    println!("P_n(pi x/n) for n = {n}, c = 2, rescaled by 2^(n-1/2) sqrt(c h(0)):");
    println!(
        "{:>6} {:>14} {:>14} {:>10}",
        "x", "exact", "limit form", "abs err"
    );
    let mut x = -3.0;
    while x <= 3.0 + 1e-9 {
        let exact = eval_monic(&table, n, Complex64::new(PI * x / n as f64, 0.0))?.re * scale;
        let pred = scaled_local_prediction(&spec, n, x)? * scale;
        println!(
            "{x:>6.2} {exact:>14.8} {pred:>14.8} {:>10.2e}",
            (exact - pred).abs()
        );
        x += 0.5;
    }
    println!();
    println!("note the asymmetric spacing of sign changes around x = 0: the jump");
    println!("compresses the zeros on the heavy side and stretches them on the light side");
    Ok(())
}
