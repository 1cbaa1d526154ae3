//! Confluent hypergeometric functions 1F1(a;b;z) for b in {1, 2} and the
//! entire normalization G(a;z) = 1F1(a;1;z) e^{-z/2}.
//!
//! Everything is evaluated through the Taylor series of the normalized
//! function v = 1F1(a;b;z) e^{-z/2}, whose coefficients satisfy
//!
//! ```text
//! (k+1)(k+b) g_{k+1} = (a - b/2) g_k + g_{k-1}/4,   g_0 = 1,
//! ```
//!
//! in double-double arithmetic (see `dd`). On the imaginary axis the
//! largest term of this series is ~e^{|z|/2}, so the double-double float
//! error stays near e^{|z|/2} * 1e-31: below 1e-17 for |z| <= 60 and still
//! below ~1e-9 at the hard cap |z| = 100. Large-|z| asymptotic expansions
//! are deliberately not implemented; callers that need bigger arguments
//! must rescale.

use num_complex::Complex64;

use crate::dd::Cdd;
use crate::error::{Error, Result};

/// Hard evaluation cap for the series argument.
///
/// Relative error of the normalized series at the cap is ~1e-9; it is
/// below 1e-11 for |z| <= 60 and below 1e-17 for |z| <= 30.
pub const SERIES_DOMAIN_CAP: f64 = 100.0;

const MAX_TERMS: usize = 700;

fn check_finite(z: Complex64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what}: non-finite argument")))
    }
}

/// Normalized series value and derivative:
/// v(z) = 1F1(a;b;z) e^{-z/2} and v'(z), for b in {1, 2}.
fn normalized_series(a: Complex64, b: u32, z: Complex64) -> Result<(Complex64, Complex64)> {
    debug_assert!(b == 1 || b == 2);
    check_finite(a, "kummer series")?;
    check_finite(z, "kummer series")?;
    let r = z.norm();
    if r > SERIES_DOMAIN_CAP {
        return Err(Error::DomainCapExceeded {
            magnitude: r,
            cap: SERIES_DOMAIN_CAP,
        });
    }

    let bf = f64::from(b);
    if z == Complex64::new(0.0, 0.0) {
        return Ok((Complex64::new(1.0, 0.0), (a - 0.5 * bf) / bf));
    }
    let am_z = Cdd::from_c64((a - 0.5 * bf) * z); // (a - b/2) z
    let z2_quarter = Cdd::from_c64(0.25 * z * z); // z^2 / 4

    // recur on the terms t_k = g_k z^k themselves: separate coefficients
    // would underflow while z^k overflows once k passes ~150 at large |z|,
    // whereas t_k never exceeds ~e^{|z|/2}
    let mut t_prev = Cdd::one(); // t_0
    let mut t_cur = am_z.div_f64(bf); // t_1
    let mut sum = t_prev.add(t_cur);
    let mut der_z = t_cur; // sum of k t_k = z * derivative

    let mut k = 1usize;
    let mut quiet = 0u32;
    while k < MAX_TERMS {
        // t_{k+1} = ((a - b/2) z t_k + (z^2/4) t_{k-1}) / ((k+1)(k+b))
        let t_next = am_z
            .mul(t_cur)
            .add(z2_quarter.mul(t_prev))
            .div_f64(((k + 1) * (k + b as usize)) as f64);
        sum = sum.add(t_next);
        der_z = der_z.add(t_next.scale((k + 1) as f64));

        t_prev = t_cur;
        t_cur = t_next;
        k += 1;

        if t_cur.mag() <= 1e-36 * (1.0 + sum.mag()) && k as f64 > r {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if k >= MAX_TERMS {
        return Err(Error::Numeric(format!(
            "kummer series did not settle after {MAX_TERMS} terms at |z| = {r:.2}"
        )));
    }
    Ok((sum.to_c64(), der_z.to_c64() / z))
}

/// G(a; z) = 1F1(a;1;z) e^{-z/2}, the entire building block of the local
/// asymptotics; G(a; 0) = 1 exactly.
pub fn g_func(a: Complex64, zeta: Complex64) -> Result<Complex64> {
    Ok(normalized_series(a, 1, zeta)?.0)
}

/// dG/dzeta; equals a - 1/2 at zeta = 0.
pub fn g_prime(a: Complex64, zeta: Complex64) -> Result<Complex64> {
    Ok(normalized_series(a, 1, zeta)?.1)
}

/// G together with its derivative from one series pass.
pub fn g_with_prime(a: Complex64, zeta: Complex64) -> Result<(Complex64, Complex64)> {
    normalized_series(a, 1, zeta)
}

/// 1F1(a; 1; z).
pub fn kummer_m(a: Complex64, z: Complex64) -> Result<Complex64> {
    Ok(normalized_series(a, 1, z)?.0 * (0.5 * z).exp())
}

/// 1F1(a; 2; z), needed for the derivative identity
/// d/dz 1F1(a;1;z) = a 1F1(a+1;2;z).
pub fn kummer_m2(a: Complex64, z: Complex64) -> Result<Complex64> {
    Ok(normalized_series(a, 2, z)?.0 * (0.5 * z).exp())
}
