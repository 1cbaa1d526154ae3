//! The continuous phase y(x) = arg 1F1(ia;1;ix), the strictly increasing
//! function frak_g(x) = x - 2 y(x), its inverse, and the jump-strength
//! normalization Upsilon(c).

use num_complex::Complex64;
use std::f64::consts::PI;

use super::kummer::{g_func, SERIES_DOMAIN_CAP};
use crate::error::{Error, Result};

/// arg 1F1(ia;1;ix) on the branch that is continuous in x with y(0) = 0.
///
/// The principal argument jumps; the continuous branch is recovered by
/// marching from 0 toward x with steps small enough that consecutive
/// arguments move by less than pi/2, halving the step when they do not.
pub fn arg_f1(a: f64, x: f64) -> Result<f64> {
    let (y, _) = march_arg(a, 0.0, 0.0, x)?;
    Ok(y)
}

/// y(x) along an arbitrary sequence of points, unwrapped continuously
/// starting from y(0) = 0. Far cheaper than calling `arg_f1` per point
/// when the points themselves form a fine path (grids, sweeps).
pub fn arg_f1_sweep(a: f64, xs: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(xs.len());
    let mut anchor_x = 0.0;
    let mut anchor_y = 0.0;
    for &x in xs {
        let (y, _) = march_arg(a, anchor_x, anchor_y, x)?;
        anchor_x = x;
        anchor_y = y;
        out.push(y);
    }
    Ok(out)
}

/// Principal argument of 1F1(ia;1;ix) = G(ia; ix) e^{ix/2}.
fn raw_arg(a: f64, x: f64) -> Result<f64> {
    let g = g_func(Complex64::new(0.0, a), Complex64::new(0.0, x))?;
    if g == Complex64::new(0.0, 0.0) {
        return Err(Error::Numeric(format!(
            "1F1(i{a};1;i{x}) evaluated to zero"
        )));
    }
    let mut p = g.arg() + 0.5 * x;
    // reduce to (-pi, pi]
    while p > PI {
        p -= 2.0 * PI;
    }
    while p <= -PI {
        p += 2.0 * PI;
    }
    Ok(p)
}

/// Continue the unwrapped argument from (x0, y0) to x1.
fn march_arg(a: f64, x0: f64, y0: f64, x1: f64) -> Result<(f64, f64)> {
    if a == 0.0 {
        return Ok((0.0, x1));
    }
    if x1.abs() > SERIES_DOMAIN_CAP {
        return Err(Error::DomainCapExceeded {
            magnitude: x1.abs(),
            cap: SERIES_DOMAIN_CAP,
        });
    }
    let mut t = x0;
    let mut y = y0;
    // |y'| stays of order |a|; this step keeps |delta y| well under pi/2
    let base_step = 0.5 / (1.0 + a.abs());
    while t != x1 {
        let remaining = x1 - t;
        let mut step = remaining.clamp(-base_step, base_step);
        loop {
            // a clamp that returns `remaining` unchanged lands exactly on x1
            let t_next = if step == remaining { x1 } else { t + step };
            let p = raw_arg(a, t_next)?;
            // choose the 2 pi k branch closest to the current value
            let k = ((y - p) / (2.0 * PI)).round();
            let y_next = p + 2.0 * PI * k;
            if (y_next - y).abs() < 0.45 * PI {
                t = t_next;
                y = y_next;
                break;
            }
            step *= 0.5;
            if step.abs() < 1e-12 {
                return Err(Error::Numeric(format!(
                    "phase unwrapping stalled near x = {t} (a = {a})"
                )));
            }
        }
    }
    Ok((y, t))
}

/// frak_g(x) = x - 2 arg 1F1(ia;1;ix); strictly increasing, frak_g(0) = 0.
pub fn frak_g(a: f64, x: f64) -> Result<f64> {
    Ok(x - 2.0 * arg_f1(a, x)?)
}

/// frak_g along a sweep of points (continuous unwrapping shared).
pub fn frak_g_sweep(a: f64, xs: &[f64]) -> Result<Vec<f64>> {
    Ok(arg_f1_sweep(a, xs)?
        .iter()
        .zip(xs)
        .map(|(y, x)| x - 2.0 * y)
        .collect())
}

/// Solve frak_g(a, x) = target for the unique x.
///
/// Starts from the empirical bracket target -+ (2 pi |a| + 1), expanding
/// geometrically if the root lies outside, then refines with safeguarded
/// Newton steps; the derivative comes from the identity
/// x frak_g'(x) = x + 2a (1 - cos frak_g(x)).
pub fn invert_frak_g(a: f64, target: f64) -> Result<f64> {
    if !target.is_finite() {
        return Err(Error::Domain("invert_frak_g: non-finite target".into()));
    }
    if a == 0.0 {
        return Ok(target);
    }
    let pad = 2.0 * PI * a.abs() + 1.0;
    let mut lo = target - pad;
    let mut hi = target + pad;
    let clamp = |v: f64| v.clamp(-SERIES_DOMAIN_CAP, SERIES_DOMAIN_CAP);
    lo = clamp(lo);
    hi = clamp(hi);
    let mut flo = frak_g(a, lo)? - target;
    let mut fhi = frak_g(a, hi)? - target;
    let mut width = pad;
    while flo > 0.0 || fhi < 0.0 {
        width *= 2.0;
        let nlo = clamp(target - width);
        let nhi = clamp(target + width);
        if nlo == lo && nhi == hi {
            return Err(Error::BracketNotFound { target });
        }
        lo = nlo;
        hi = nhi;
        flo = frak_g(a, lo)? - target;
        fhi = frak_g(a, hi)? - target;
    }
    let _ = fhi;

    let mut x = 0.5 * (lo + hi);
    for _ in 0..80 {
        let f = frak_g(a, x)? - target;
        if f.abs() < 1e-11 {
            return Ok(x);
        }
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let slope = if x.abs() > 1e-8 {
            1.0 + 2.0 * a * (1.0 - (f + target).cos()) / x
        } else {
            1.0
        };
        let mut next = x - f / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        x = next;
    }
    let f = frak_g(a, x)? - target;
    if f.abs() < 1e-10 {
        Ok(x)
    } else {
        Err(Error::Numeric(format!(
            "invert_frak_g: residual {f:.3e} at x = {x} after iteration limit"
        )))
    }
}

/// Upsilon(c) = sgn(log c) sqrt(2 c log c / (c^2 - 1)), with Upsilon(1) = 1.
pub fn upsilon(c: f64) -> f64 {
    assert!(c > 0.0 && c.is_finite(), "upsilon: c must be positive");
    if c == 1.0 {
        return 1.0;
    }
    // (c-1)(c+1) instead of c^2-1: exact near c = 1
    let ratio = 2.0 * c * c.ln() / ((c - 1.0) * (c + 1.0));
    c.ln().signum() * ratio.sqrt()
}
