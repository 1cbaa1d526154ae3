//! The final asymptotic predictions: phases, outer and local strong
//! asymptotics, recurrence-coefficient and leading-coefficient expansions,
//! the general step-weight conjecture formulas, the confluent limit of the
//! Christoffel-Darboux kernel, and its de Branges form.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::orthopoly::RecurrenceTable;
use crate::quadrature::WeightSpec;
use crate::specfun::{arg_gamma_imag, g_func, g_with_prime, upsilon, SERIES_DOMAIN_CAP};
use crate::szego::{d_infinity, hbar, phi_map, rho, sqrt_cut, szego_full};

/// Which terms of the expansion a prediction carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// leading term only
    Leading,
    /// leading term plus the 1/n correction
    WithCorrection,
}

impl Order {
    fn weight(self) -> f64 {
        match self {
            Order::Leading => 0.0,
            Order::WithCorrection => 1.0,
        }
    }
}

/// The phases eta_n and theta_n driving every first-order correction.
#[derive(Clone, Debug)]
pub struct PhaseParams {
    /// lambda = i log(c) / pi
    pub lambda: Complex64,
    pub eta_n: f64,
    pub theta_n: f64,
    pub n: usize,
}

/// eta and theta in double-double form; the public `phases` rounds these.
/// Kept separate so the increment identity can be verified below the f64
/// ulp of theta itself, which exceeds 1e-12 once n is in the thousands.
pub(crate) fn theta_eta_dd(spec: &WeightSpec, n: usize) -> Result<(Dd, Dd)> {
    if n == 0 {
        return Err(Error::Domain("phases: n must be >= 1".into()));
    }
    let lb = spec.c.ln() / PI;
    let hbar0 = hbar(spec, 0.0)?;
    let consts = (spec.beta - spec.alpha) / 4.0 * PI + hbar0;
    let eta = Dd::from_f64(lb)
        .scale((4.0 * n as f64).ln())
        .add(Dd::from_f64(std::f64::consts::FRAC_PI_2).scale(n as f64))
        .add(Dd::from_f64(consts));
    let shift = if spec.c == 1.0 {
        -std::f64::consts::FRAC_PI_2
    } else {
        arg_gamma_imag(lb)?
    };
    let theta = eta.sub(Dd::from_f64(shift)).scale(2.0);
    Ok((theta, eta))
}

/// eta_n = (log c/pi) log(4n) + n pi/2 + (beta - alpha) pi/4 + hbar(0),
/// theta_n = 2 (eta_n - arg Gamma(lambda)), with the c = 1 branch using
/// the continuity value -pi/2 for the gamma argument.
pub fn phases(spec: &WeightSpec, n: usize) -> Result<PhaseParams> {
    let (theta, eta) = theta_eta_dd(spec, n)?;
    Ok(PhaseParams {
        lambda: spec.lambda(),
        eta_n: eta.hi + eta.lo,
        theta_n: theta.hi + theta.lo,
        n,
    })
}

fn dist_to_cut(z: Complex64) -> f64 {
    if z.re.abs() <= 1.0 {
        z.im.abs()
    } else {
        (z - 1.0).norm().min((z + 1.0).norm())
    }
}

/// The 1/n coefficient of the outer expansion.
fn h_correction(spec: &WeightSpec, theta_n: f64, z: Complex64) -> Complex64 {
    let phi = phi_map(z);
    let lc = spec.c.ln();
    let t1 = -(4.0 * spec.alpha * spec.alpha - 1.0) / (8.0 * (phi - 1.0));
    let t2 = (4.0 * spec.beta * spec.beta - 1.0) / (8.0 * (phi + 1.0));
    let t3 = -lc / (2.0 * PI) * (theta_n.cos() * phi + theta_n.sin() - lc / PI) / (z * phi);
    t1 + t2 + t3
}

/// Predicted 2^n P_n(z) / phi(z)^n for z away from the cut.
pub fn outer_prediction(
    spec: &WeightSpec,
    n: usize,
    z: Complex64,
    order: Order,
) -> Result<Complex64> {
    if dist_to_cut(z) < 0.1 {
        return Err(Error::Domain(format!(
            "outer prediction needs dist(z, [-1,1]) >= 0.1, z = {z}"
        )));
    }
    let ph = phases(spec, n)?;
    let phi = phi_map(z);
    let quarter = sqrt_cut(z).sqrt();
    let base =
        d_infinity(spec) / szego_full(spec, z)? * phi.sqrt() / (std::f64::consts::SQRT_2 * quarter);
    let corr =
        Complex64::new(1.0, 0.0) + order.weight() / n as f64 * h_correction(spec, ph.theta_n, z);
    Ok(base * corr)
}

/// Numeric 2^n P_n(z) / phi(z)^n through the scaled recurrence; stays O(1)
/// for any z off the cut, so no overflow at large n.
pub fn outer_ratio_numeric(table: &RecurrenceTable, n: usize, z: Complex64) -> Result<Complex64> {
    if n > table.n_max {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: table.n_max,
        });
    }
    let s = 2.0 / phi_map(z);
    let mut q_prev = Complex64::new(0.0, 0.0);
    let mut q_cur = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let next = s * (z - table.b(k)) * q_cur
            - if k >= 1 {
                s * s * table.a_sq(k) * q_prev
            } else {
                Complex64::new(0.0, 0.0)
            };
        q_prev = q_cur;
        q_cur = next;
    }
    Ok(q_cur)
}

/// Predicted recurrence coefficients
/// a_n = 1/2 - log(c) sin(theta_n) / (2 pi n),
/// b_n = -log(c) cos(theta_n) / (pi n).
pub fn recurrence_prediction(spec: &WeightSpec, n: usize) -> Result<(f64, f64)> {
    let ph = phases(spec, n)?;
    let lc = spec.c.ln();
    Ok((
        0.5 - lc / (2.0 * PI * n as f64) * ph.theta_n.sin(),
        -lc / (PI * n as f64) * ph.theta_n.cos(),
    ))
}

/// The conjectured general formulas for the weight
/// `(1-x)^alpha (1+x)^beta |x0 - x|^gamma {B on [-1,x0), A on [x0,1]}`.
///
/// `a_value` is the level right of x0, `b_value` the level left of it.
#[allow(clippy::too_many_arguments)]
pub fn magnus_prediction(
    alpha: f64,
    beta: f64,
    gamma: f64,
    x0: f64,
    a_value: f64,
    b_value: f64,
    n: usize,
) -> Result<(f64, f64)> {
    if !(a_value > 0.0 && b_value > 0.0) {
        return Err(Error::Domain(
            "magnus_prediction: A and B must be positive".into(),
        ));
    }
    if !(alpha > -1.0 && beta > -1.0 && gamma > -1.0) {
        return Err(Error::Domain(
            "magnus_prediction: exponents must be > -1".into(),
        ));
    }
    if !(x0 > -1.0 && x0 < 1.0) {
        return Err(Error::Domain(
            "magnus_prediction: x0 must lie in (-1, 1)".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Domain("magnus_prediction: n must be >= 1".into()));
    }
    let t0 = x0.acos();
    let mu = (b_value / a_value).ln() / (2.0 * PI);
    let m_amp = 0.5 * (gamma * gamma / 4.0 + mu * mu).sqrt() * t0.sin();
    if m_amp == 0.0 {
        return Ok((0.5, 0.0));
    }
    let head = Complex64::new(gamma / 2.0, mu);
    let phi_tilde = (alpha + gamma / 2.0) * PI
        - (alpha + beta + gamma) * t0
        - 2.0 * crate::specfun::log_gamma(head)?.im
        - head.arg();
    let log_term = 2.0 * mu * (4.0 * n as f64 * t0.sin()).ln();
    let a_n = 0.5 - m_amp / n as f64 * (2.0 * n as f64 * t0 - log_term - phi_tilde).cos();
    let b_n = -2.0 * m_amp / n as f64 * ((2.0 * n as f64 + 1.0) * t0 - log_term - phi_tilde).cos();
    Ok((a_n, b_n))
}

/// Predicted leading coefficient k_n = 2^n / (sqrt(pi) D_infinity) times
/// the 1/n bracket (theta is taken at n+1).
pub fn leading_coeff_prediction(spec: &WeightSpec, n: usize, order: Order) -> Result<f64> {
    let lc = spec.c.ln();
    let bracket = match order {
        Order::Leading => 1.0,
        Order::WithCorrection => {
            let ph = phases(spec, n + 1)?;
            1.0 - ((2.0 * spec.alpha * spec.alpha + 2.0 * spec.beta * spec.beta - 1.0) / 8.0
                + lc / (2.0 * PI) * (lc / PI + ph.theta_n.sin()))
                / n as f64
        }
    };
    Ok(2f64.powi(n as i32) / (PI.sqrt() * d_infinity(spec)) * bracket)
}

/// The 1/n coefficient of the local expansion on (-delta, delta); removable
/// singularity at x = 0 is not evaluated (callers use Order::Leading there).
fn local_correction(spec: &WeightSpec, theta_n: f64, x: f64, rho_x: f64) -> Complex64 {
    let lc = spec.c.ln();
    let eic = Complex64::new(0.0, x.acos()).exp();
    let t1 = -(4.0 * spec.alpha * spec.alpha - 1.0) / (8.0 * (eic - 1.0));
    let t2 = (4.0 * spec.beta * spec.beta - 1.0) / (8.0 * (eic + 1.0));
    let t3 = -lc / (2.0 * PI * x) * (theta_n.cos() * eic + theta_n.sin() - lc / PI) / eic;
    let t4 = Complex64::new(0.0, lc / (2.0 * PI * x.asin()))
        * (lc / PI + Complex64::new(0.0, -(2.0 * rho_x + theta_n + x.acos())).exp());
    t1 + t2 + t3 + t4
}

/// Predicted P_n(x) on compact subsets of (-delta, delta) around the jump.
pub fn local_prediction(spec: &WeightSpec, n: usize, x: f64, order: Order) -> Result<f64> {
    if x.abs() > 0.5 {
        return Err(Error::Domain(format!(
            "local prediction is kept to |x| <= 0.5, got {x}"
        )));
    }
    let zeta = Complex64::new(0.0, 2.0 * n as f64 * x.asin());
    if zeta.norm() > SERIES_DOMAIN_CAP {
        return Err(Error::DomainCapExceeded {
            magnitude: zeta.norm(),
            cap: SERIES_DOMAIN_CAP,
        });
    }
    let ph = phases(spec, n)?;
    let rho_x = rho(spec, x)?;
    let pref = d_infinity(spec) * upsilon(spec.c)
        / (2f64.powf(n as f64 - 0.5) * (spec.c * spec.w1(x)).sqrt() * (1.0 - x * x).powf(0.25));
    let phase = Complex64::new(0.0, rho_x + (ph.theta_n - PI - x.asin()) / 2.0).exp();
    let g = g_func(ph.lambda, zeta)?;
    let bracket = if order == Order::WithCorrection && x != 0.0 {
        Complex64::new(1.0, 0.0) + local_correction(spec, ph.theta_n, x, rho_x) / n as f64
    } else {
        Complex64::new(1.0, 0.0)
    };
    Ok(pref * (phase * g * bracket).re)
}

/// Predicted P_n(pi x / n): the scaled limit form
/// D_inf Upsilon(c) / (2^{n-1/2} sqrt(c h(0))) Im[e^{i theta_n/2} G(lambda; 2 pi i x)].
pub fn scaled_local_prediction(spec: &WeightSpec, n: usize, x: f64) -> Result<f64> {
    let zeta = Complex64::new(0.0, 2.0 * PI * x);
    if zeta.norm() > SERIES_DOMAIN_CAP {
        return Err(Error::DomainCapExceeded {
            magnitude: zeta.norm(),
            cap: SERIES_DOMAIN_CAP,
        });
    }
    let ph = phases(spec, n)?;
    let pref = d_infinity(spec) * upsilon(spec.c)
        / (2f64.powf(n as f64 - 0.5) * (spec.c * spec.h(0.0)).sqrt());
    let g = g_func(ph.lambda, zeta)?;
    Ok(pref * (Complex64::new(0.0, ph.theta_n / 2.0).exp() * g).im)
}

/// The scaled kernel limit K_infinity(x, y) at the jump.
///
/// For c != 1 and x != y this is the totally real form
/// 2 log(c) / (pi (x-y) h(0) (c^2-1)) Im[G(1+lambda;2 pi i x) G(lambda;2 pi i y)];
/// near the diagonal the confluent Wronskian form takes over, and c = 1 is
/// the sine kernel.
pub fn k_infty(spec: &WeightSpec, x: f64, y: f64) -> Result<f64> {
    let h0 = spec.h(0.0);
    if spec.c == 1.0 {
        let d = x - y;
        return Ok(if d.abs() < 1e-12 {
            1.0 / h0
        } else {
            (PI * d).sin() / (PI * d) / h0
        });
    }
    for v in [x, y] {
        if 2.0 * PI * v.abs() > SERIES_DOMAIN_CAP {
            return Err(Error::DomainCapExceeded {
                magnitude: 2.0 * PI * v.abs(),
                cap: SERIES_DOMAIN_CAP,
            });
        }
    }
    let lam = spec.lambda();
    let one = Complex64::new(1.0, 0.0);
    let factor = spec.c.ln() / ((spec.c - 1.0) * (spec.c + 1.0));
    if (x - y).abs() < 1e-6 {
        let u = 0.5 * (x + y);
        let zeta = Complex64::new(0.0, 2.0 * PI * u);
        let (g0, g0p) = g_with_prime(lam, zeta)?;
        let (g1, g1p) = g_with_prime(one + lam, zeta)?;
        let wronskian = g1p * g0 - g1 * g0p;
        Ok(2.0 / h0 * factor * wronskian.re)
    } else {
        let gx = g_func(one + lam, Complex64::new(0.0, 2.0 * PI * x))?;
        let gy = g_func(lam, Complex64::new(0.0, 2.0 * PI * y))?;
        Ok(2.0 / (PI * (x - y) * h0) * factor * (gx * gy).im)
    }
}

/// The Hermite-Biehler structure function whose de Branges space reproduces
/// K_infinity: E(z) = sqrt(2 log c / (h(0)(c^2-1))) G(lambda; 2 pi i z).
pub fn de_branges_e(spec: &WeightSpec, z: Complex64) -> Result<Complex64> {
    if spec.c == 1.0 {
        return Err(Error::Domain(
            "de Branges normalization degenerates at c = 1 (sine-kernel case)".into(),
        ));
    }
    let amp = (2.0 * spec.c.ln() / (spec.h(0.0) * (spec.c - 1.0) * (spec.c + 1.0))).sqrt();
    let zeta = Complex64::new(0.0, 2.0 * PI) * z;
    if zeta.norm() > SERIES_DOMAIN_CAP {
        return Err(Error::DomainCapExceeded {
            magnitude: zeta.norm(),
            cap: SERIES_DOMAIN_CAP,
        });
    }
    Ok(amp * g_func(spec.lambda(), zeta)?)
}

/// |K(x, conj y) - K_infinity(x, y)| where K is the reproducing kernel
/// built from E:
/// K(u, v) = (i/2pi) (E(u) conj(E(v)) - conj(E(conj u)) E(conj v)) / (u - conj v).
pub fn reproducing_check(spec: &WeightSpec, x: f64, y: f64) -> Result<f64> {
    let e_x = de_branges_e(spec, Complex64::new(x, 0.0))?;
    let e_y = de_branges_e(spec, Complex64::new(y, 0.0))?;
    // real arguments: conj(E(conj x)) = conj(E(x)) and the pairing collapses
    let kernel =
        (Complex64::new(0.0, 1.0) / (2.0 * PI)) * (e_x * e_y.conj() - e_x.conj() * e_y) / (x - y);
    Ok((kernel.re - k_infty(spec, x, y)?).abs() + kernel.im.abs())
}
