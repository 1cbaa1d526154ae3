//! Zeros around the jump: indexed enumeration, the phase-equation
//! predictions, normalized spacing reports, and the density experiment for
//! the scaled first nonnegative zero.

use std::f64::consts::PI;

use crate::asymptotics::phases;
use crate::error::{Error, Result};
use crate::orthopoly::{zeros, RecurrenceTable};
use crate::quadrature::WeightSpec;
use crate::specfun::{arg_f1, invert_frak_g};

/// Zeros of P_n re-indexed so that x_{-1} < 0 <= x_0, as pairs (k, x_k).
pub fn enumerate_local_zeros(
    table: &RecurrenceTable,
    n: usize,
    k_min: i64,
    k_max: i64,
) -> Result<Vec<(i64, f64)>> {
    if k_min > k_max {
        return Err(Error::Domain(
            "enumerate_local_zeros: empty index range".into(),
        ));
    }
    let zs = zeros(table, n)?.zeros;
    let origin = zs.partition_point(|&z| z < 0.0); // index of x_0
    let mut out = Vec::with_capacity((k_max - k_min + 1) as usize);
    for k in k_min..=k_max {
        let idx = origin as i64 + k;
        if idx < 0 || idx >= zs.len() as i64 {
            let available = if k < 0 { origin } else { zs.len() - origin };
            return Err(Error::WindowExhausted { k, available });
        }
        out.push((k, zs[idx as usize]));
    }
    Ok(out)
}

/// Predicted scaled zeros zeta_k solving
/// frak_g(2 pi zeta_k) / (2 pi) = {theta_n / 2 pi} + k.
pub fn predicted_zeros(
    spec: &WeightSpec,
    n: usize,
    k_min: i64,
    k_max: i64,
) -> Result<Vec<(i64, f64)>> {
    if k_min > k_max {
        return Err(Error::Domain("predicted_zeros: empty index range".into()));
    }
    let a = spec.c.ln() / PI;
    let frac = (phases(spec, n)?.theta_n / (2.0 * PI)).rem_euclid(1.0);
    let mut out = Vec::with_capacity((k_max - k_min + 1) as usize);
    for k in k_min..=k_max {
        let target = 2.0 * PI * (frac + k as f64);
        let x = invert_frak_g(a, target)?;
        out.push((k, x / (2.0 * PI)));
    }
    Ok(out)
}

/// One row of a spacing report.
#[derive(Clone, Debug)]
pub struct SpacingRow {
    pub k: i64,
    pub x_k: f64,
    /// n/pi (x_k - x_{k-1})
    pub normalized_spacing: f64,
    pub zeta_k: f64,
    /// zeta_k - zeta_{k-1}
    pub predicted_spacing: f64,
    /// 1 + (y(2 pi zeta_k) - y(2 pi zeta_{k-1})) / pi
    pub phase_reconstruction: f64,
    /// |normalized - predicted|
    pub deviation: f64,
}

/// Actual vs predicted normalized spacings for k in [k_min+1, k_max].
#[derive(Clone, Debug)]
pub struct SpacingReport {
    pub n: usize,
    pub k_range: (i64, i64),
    pub rows: Vec<SpacingRow>,
}

pub fn spacing_report(
    spec: &WeightSpec,
    table: &RecurrenceTable,
    n: usize,
    k_min: i64,
    k_max: i64,
) -> Result<SpacingReport> {
    let actual = enumerate_local_zeros(table, n, k_min - 1, k_max)?;
    let predicted = predicted_zeros(spec, n, k_min - 1, k_max)?;
    let a = spec.c.ln() / PI;
    let mut rows = Vec::new();
    for i in 1..actual.len() {
        let (k, xk) = actual[i];
        let (_, xprev) = actual[i - 1];
        let (_, zk) = predicted[i];
        let (_, zprev) = predicted[i - 1];
        let normalized = n as f64 / PI * (xk - xprev);
        let pred_gap = zk - zprev;
        let reconstruction = 1.0 + (arg_f1(a, 2.0 * PI * zk)? - arg_f1(a, 2.0 * PI * zprev)?) / PI;
        rows.push(SpacingRow {
            k,
            x_k: xk,
            normalized_spacing: normalized,
            zeta_k: zk,
            predicted_spacing: pred_gap,
            phase_reconstruction: reconstruction,
            deviation: (normalized - pred_gap).abs(),
        });
    }
    Ok(SpacingReport {
        n,
        k_range: (k_min, k_max),
        rows,
    })
}

/// The density experiment for {n x_0^{(n)} / pi}.
#[derive(Clone, Debug)]
pub struct DensityReport {
    /// (n, n x_0^{(n)} / pi)
    pub values: Vec<(usize, f64)>,
    /// right endpoint t of the accumulation interval [0, t], from
    /// frak_g(2 pi t) = 2 pi
    pub t_endpoint: f64,
}

pub fn x0_density_experiment(
    spec: &WeightSpec,
    table: &RecurrenceTable,
    n_list: &[usize],
) -> Result<DensityReport> {
    if spec.c == 1.0 {
        return Err(Error::Domain(
            "density experiment needs c != 1 (the c = 1 zero pattern is periodic)".into(),
        ));
    }
    let a = spec.c.ln() / PI;
    let t_endpoint = invert_frak_g(a, 2.0 * PI)? / (2.0 * PI);
    let mut values = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let x0 = enumerate_local_zeros(table, n, 0, 0)?[0].1;
        let v = n as f64 * x0 / PI;
        if v > t_endpoint + 0.01 {
            return Err(Error::Numeric(format!(
                "scaled first zero {v:.4} exceeds the density endpoint t = {t_endpoint:.4} at n = {n}"
            )));
        }
        values.push((n, v));
    }
    Ok(DensityReport { values, t_endpoint })
}
