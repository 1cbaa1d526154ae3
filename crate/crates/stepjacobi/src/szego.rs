//! Szego functions of the weight and its factors, their boundary values,
//! and the phase functions hbar, Phi and rho entering every asymptotic
//! formula.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature::WeightSpec;

/// sqrt(z^2 - 1) on the branch analytic off [-1, 1] that behaves like z at
/// infinity: principal square roots of the two linear factors.
pub fn sqrt_cut(z: Complex64) -> Complex64 {
    (z - 1.0).sqrt() * (z + 1.0).sqrt()
}

/// phi(z) = z + sqrt(z^2 - 1), the conformal map onto |w| > 1.
pub fn phi_map(z: Complex64) -> Complex64 {
    z + sqrt_cut(z)
}

fn check_off_cut(z: Complex64) -> Result<()> {
    if z.im == 0.0 && (-1.0..=1.0).contains(&z.re) {
        return Err(Error::Domain(format!("point {z} lies on the cut [-1, 1]")));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("non-finite point".into()));
    }
    Ok(())
}

fn check_open_interval(x: f64) -> Result<()> {
    if !(x > -1.0 && x < 1.0) {
        return Err(Error::Domain(format!("x = {x} is outside (-1, 1)")));
    }
    Ok(())
}

/// Cached Szego data of a weight: the value at infinity and hbar(0).
#[derive(Clone, Debug)]
pub struct SzegoData {
    pub spec: WeightSpec,
    pub d_infinity: f64,
    pub hbar0: f64,
}

impl SzegoData {
    pub fn new(spec: WeightSpec) -> Result<Self> {
        spec.validate()?;
        let d_infinity = d_infinity(&spec);
        let hbar0 = hbar(&spec, 0.0)?;
        Ok(SzegoData {
            spec,
            d_infinity,
            hbar0,
        })
    }
}

/// D_infinity = sqrt(c) D(infinity, h) 2^{-(alpha+beta)/2}, with
/// D(infinity, h) = exp(c_0 / 2).
pub fn d_infinity(spec: &WeightSpec) -> f64 {
    let c0 = spec.logh_cheb.first().copied().unwrap_or(0.0);
    spec.c.sqrt() * (0.5 * c0).exp() * 2f64.powf(-(spec.alpha + spec.beta) / 2.0)
}

/// The conjugate function of log h: with log h(cos t) = sum_k c_k cos(k t),
/// hbar(x) = sum_{k>=1} (c_k / 2) sin(k arccos x). Matches the principal
/// value integral defining it; the quadrature oracle lives in the tests.
pub fn hbar(spec: &WeightSpec, x: f64) -> Result<f64> {
    check_open_interval(x)?;
    let t = x.acos();
    Ok(spec
        .logh_cheb
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &ck)| 0.5 * ck * (k as f64 * t).sin())
        .sum())
}

/// Szego function of the analytic factor h off the cut:
/// D(z, h) = exp(c_0/2 + sum_{k>=1} (c_k/2) phi(z)^{-k}).
pub fn szego_h(spec: &WeightSpec, z: Complex64) -> Result<Complex64> {
    check_off_cut(z)?;
    let phi_inv = 1.0 / phi_map(z);
    let mut acc = Complex64::new(spec.logh_cheb.first().copied().unwrap_or(0.0) / 2.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0);
    for &ck in spec.logh_cheb.iter().skip(1) {
        pw *= phi_inv;
        acc += 0.5 * ck * pw;
    }
    Ok(acc.exp())
}

/// Szego function of the pure step:
/// D(z, Xi_c) = c exp(-lambda log((1 - i sqrt(z^2-1)) / z)), main branches.
pub fn szego_jump(c: f64, z: Complex64) -> Result<Complex64> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::Domain(format!(
            "szego_jump: c must be positive, got {c}"
        )));
    }
    check_off_cut(z)?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("szego_jump: z = 0 is on the cut".into()));
    }
    let lambda = Complex64::new(0.0, c.ln() / PI);
    let w = (Complex64::new(1.0, 0.0) - Complex64::new(0.0, 1.0) * sqrt_cut(z)) / z;
    Ok(c * (-lambda * w.ln()).exp())
}

/// Szego function of the Jacobi factor (1-x)^alpha (1+x)^beta:
/// (z-1)^{alpha/2} (z+1)^{beta/2} / phi(z)^{(alpha+beta)/2}.
pub fn szego_jacobi_factor(alpha: f64, beta: f64, z: Complex64) -> Result<Complex64> {
    check_off_cut(z)?;
    let a = ((z - 1.0).ln() * (alpha / 2.0)).exp();
    let b = ((z + 1.0).ln() * (beta / 2.0)).exp();
    let p = (phi_map(z).ln() * ((alpha + beta) / 2.0)).exp();
    Ok(a * b / p)
}

/// Full Szego function D(z, w_c) = D(z, h) * Jacobi factor * D(z, Xi_c).
pub fn szego_full(spec: &WeightSpec, z: Complex64) -> Result<Complex64> {
    Ok(szego_h(spec, z)? * szego_jacobi_factor(spec.alpha, spec.beta, z)? * szego_jump(spec.c, z)?)
}

/// Boundary phase Phi(x) = pi alpha/2 - (alpha+beta)/2 arccos x - hbar(x).
pub fn phi_cap(spec: &WeightSpec, x: f64) -> Result<f64> {
    check_open_interval(x)?;
    Ok(PI * spec.alpha / 2.0 - (spec.alpha + spec.beta) / 2.0 * x.acos() - hbar(spec, x)?)
}

/// Closed-form boundary value of D(z, w_c) as z -> x from above (+) or
/// below (-): sqrt(w_c(x)) exp(+- i Phi(x)) times the jump phase.
pub fn szego_boundary(spec: &WeightSpec, x: f64, upper: bool) -> Result<Complex64> {
    check_open_interval(x)?;
    if x == 0.0 {
        return Err(Error::Domain(
            "boundary value at the jump point x = 0".into(),
        ));
    }
    let sign = if upper { 1.0 } else { -1.0 };
    let w_part = spec.w1(x).sqrt() * (Complex64::new(0.0, sign * phi_cap(spec, x)?)).exp();
    let jump_phase = -sign * (spec.c.ln() / PI) * ((1.0 + (1.0 - x * x).sqrt()) / x).abs().ln();
    let jump = spec.step(x).sqrt() * Complex64::new(0.0, jump_phase).exp();
    Ok(w_part * jump)
}

/// rho(x): the slowly varying part of the local phase,
/// rho(0) = 0 by continuity.
pub fn rho(spec: &WeightSpec, x: f64) -> Result<f64> {
    check_open_interval(x)?;
    let hb = hbar(spec, x)? - hbar(spec, 0.0)?;
    let jacobi_part = -(spec.alpha + spec.beta) / 2.0 * x.asin();
    if x == 0.0 {
        return Ok(0.0);
    }
    let ratio = x.asin() / (2.0 * x) * (1.0 + (1.0 - x * x).sqrt());
    Ok(spec.c.ln() / PI * ratio.abs().ln() + jacobi_part + hb)
}
