//! Szego-function anatomy of the jump weight: boundary modulus and phase,
//! the product law D_+ D_- = w_c on both sides of the jump, and the value
//! at infinity computed two ways.
//!
//! Run with: cargo run --release --example szego_boundary

use num_complex::Complex64;
use stepjacobi::szego::{d_infinity, hbar, phi_cap, rho, szego_boundary, szego_full};
use stepjacobi::WeightSpec;

fn main() -> stepjacobi::Result<()> {
    // alpha = 0.4, beta = -0.3, c = 2, h(x) = exp(0.1 + 0.3 x)
    let spec = WeightSpec::new(0.4, -0.3, 2.0, vec![0.1, 0.3])?;
    println!(
        "{:>6} {:>22} {:>12} {:>10} {:>10} {:>10}",
        "x", "D_+(x)", "|D_+|^2/w_c", "hbar", "Phi", "rho"
    );
    for &x in &[-0.8, -0.5, -0.2, 0.2, 0.5, 0.8] {
        let d = szego_boundary(&spec, x, true)?;
        // D_- = conj(D_+) for a real weight, so D_+ D_- = |D_+|^2
        let ratio = d.norm_sqr() / spec.wc(x);
        println!(
            "{x:>6.2} {:>10.6}{:>+11.6}i {ratio:>12.9} {:>10.6} {:>10.6} {:>10.6}",
            d.re,
            d.im,
            hbar(&spec, x)?,
            phi_cap(&spec, x)?,
            rho(&spec, x)?,
        );
    }
    println!();
    let closed = d_infinity(&spec);
    let far = szego_full(&spec, Complex64::new(1e12, 0.0))?;
    println!("D_infinity closed form: {closed:.12}");
    println!(
        "D_infinity from z = 1e12: {:.12}  (two-path agreement {:.1e})",
        far.re,
        (far.re - closed).abs()
    );
    Ok(())
}
