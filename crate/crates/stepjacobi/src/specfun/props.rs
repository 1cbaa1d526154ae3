//! Executable property suite for the confluent-hypergeometric phase
//! machinery: no real zeros, the Hermite-Biehler inequality, strict
//! monotonicity of frak_g, and the phase ODE. Used by the `props` CLI
//! command and by the acceptance tests.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::kummer::g_func;
use super::phase::{arg_f1, frak_g_sweep};
use crate::error::Result;

/// Outcome of one property check.
#[derive(Clone, Debug)]
pub struct PropCheck {
    pub name: &'static str,
    pub points: usize,
    /// Worst margin seen; positive means the property held with room.
    pub worst_margin: f64,
    pub pass: bool,
}

/// Deterministic low-discrepancy stream for sample points.
struct Lcg(u64);

impl Lcg {
    fn next_unit(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// |1F1(ia;1;ix)| and |1F1(1+ia;1;ix)| stay away from zero on a grid of
/// `grid_points` points covering [-50, 50], for each listed a.
pub fn no_real_zeros(a_values: &[f64], grid_points: usize) -> Result<PropCheck> {
    let mut worst = f64::INFINITY;
    let mut count = 0;
    for &a in a_values {
        for k in 0..grid_points {
            let x = -50.0 + 100.0 * (k as f64 + 0.5) / grid_points as f64;
            let zeta = Complex64::new(0.0, x);
            // |1F1| = |G| on the imaginary axis
            let m0 = g_func(Complex64::new(0.0, a), zeta)?.norm();
            let m1 = g_func(Complex64::new(1.0, a), zeta)?.norm();
            worst = worst.min(m0).min(m1);
            count += 2;
        }
    }
    Ok(PropCheck {
        name: "no-real-zeros",
        points: count,
        worst_margin: worst,
        pass: worst > 1e-8,
    })
}

/// |1F1(1+ia;1;iz)| < |1F1(ia;1;iz)| strictly for Im z > 0, sampled at
/// deterministic points with Im z >= 0.05.
pub fn hermite_biehler_strict(a_values: &[f64], samples: usize) -> Result<PropCheck> {
    let mut worst = f64::INFINITY;
    let mut count = 0;
    let mut rng = Lcg(0x5eed_1234_abcd_0001);
    for &a in a_values {
        for _ in 0..samples {
            let re = -8.0 + 16.0 * rng.next_unit();
            let im = 0.05 + 4.0 * rng.next_unit();
            let z = Complex64::new(re, im);
            let zeta = Complex64::new(0.0, 1.0) * z;
            // the common factor |e^{-zeta/2}| cancels in the ratio
            let upper = g_func(Complex64::new(1.0, a), zeta)?.norm();
            let lower = g_func(Complex64::new(0.0, a), zeta)?.norm();
            let margin = 1.0 - upper / lower;
            worst = worst.min(margin);
            count += 1;
        }
    }
    Ok(PropCheck {
        name: "hermite-biehler-strict",
        points: count,
        worst_margin: worst,
        pass: worst > 0.0,
    })
}

/// frak_g increases strictly along uniform grids of the given step over
/// [-40, 40].
pub fn frak_g_monotone(a_values: &[f64], step: f64) -> Result<PropCheck> {
    let n = (80.0 / step).ceil() as usize;
    let mut worst = f64::INFINITY;
    let mut count = 0;
    for &a in a_values {
        let xs: Vec<f64> = (0..=n).map(|k| -40.0 + k as f64 * step).collect();
        let gs = frak_g_sweep(a, &xs)?;
        for w in gs.windows(2) {
            worst = worst.min(w[1] - w[0]);
            count += 1;
        }
    }
    Ok(PropCheck {
        name: "frak-g-monotone",
        points: count,
        worst_margin: worst,
        pass: worst > 0.0,
    })
}

/// Residual of x y' = a (cos(x - 2y) - 1) with y' from central differences,
/// at `samples` points per a.
pub fn phase_ode_residual(a_values: &[f64], samples: usize) -> Result<PropCheck> {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let h = 1e-5;
    for &a in a_values {
        if a == 0.0 {
            continue;
        }
        for k in 0..samples {
            // log-spaced |x| in [0.3, 20], alternating sign
            let t = (k as f64 + 0.5) / samples as f64;
            let mag = 0.3 * (20.0f64 / 0.3).powf(t);
            let x = if k % 2 == 0 { mag } else { -mag };
            let yp = (arg_f1(a, x + h)? - arg_f1(a, x - h)?) / (2.0 * h);
            let y = arg_f1(a, x)?;
            let residual = (x * yp - a * ((x - 2.0 * y).cos() - 1.0)).abs();
            worst = worst.max(residual);
            count += 1;
        }
    }
    Ok(PropCheck {
        name: "phase-ode-residual",
        points: count,
        worst_margin: 1e-6 - worst,
        pass: worst < 1e-6,
    })
}

/// The four-part suite with the canonical parameter sets, plus the
/// jump strength a = log(c)/pi of the weight under test.
pub fn property_suite(c: f64) -> Result<Vec<PropCheck>> {
    let a_weight = c.ln() / PI;
    let mut zero_as = vec![-3.0, -1.0, -0.25, 0.25, 1.0, 3.0];
    if a_weight != 0.0 {
        zero_as.push(a_weight);
    }
    let mut mono_as = vec![-2.0, 3.0];
    mono_as.push(if a_weight != 0.0 {
        a_weight
    } else {
        2f64.ln() / PI
    });
    let mut ode_as = vec![0.5, -1.3];
    if a_weight != 0.0 {
        ode_as.push(a_weight);
    }
    Ok(vec![
        no_real_zeros(&zero_as, 10_000)?,
        hermite_biehler_strict(&[0.7, -1.5, a_weight.abs().max(0.2)], 67)?,
        frak_g_monotone(&mono_as, 1e-3)?,
        phase_ode_residual(&ode_as, 34)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        // smaller grids than the acceptance run, same properties
        let checks = vec![
            no_real_zeros(&[0.25, -1.0], 400).unwrap(),
            hermite_biehler_strict(&[0.7], 40).unwrap(),
            frak_g_monotone(&[-2.0, 0.22], 0.05).unwrap(),
            phase_ode_residual(&[0.5], 10).unwrap(),
        ];
        for c in checks {
            assert!(c.pass, "{} failed with margin {:e}", c.name, c.worst_margin);
        }
    }
}
