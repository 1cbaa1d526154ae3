//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with --nocapture) and failing the harness if any clause
//! of the criterion fails.
//!
//! Two clauses are known to fail for a structural reason documented in the
//! test output: over the pinned degree window {32..256} the second-order
//! coefficients of the b_n and leading-coefficient expansions drift through
//! a zero of their oscillating prefactor, so the fitted slopes land at
//! about -1.56 and -0.58 instead of the requested -1.7 / -0.7 even though
//! the underlying O(1/n^2) and O(1/n) claims are true (the scaled errors
//! stay bounded, which these tests also verify and print).

use num_complex::Complex64;
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use std::time::Instant;

use stepjacobi::asymptotics::{
    k_infty, leading_coeff_prediction, local_prediction, outer_prediction, outer_ratio_numeric,
    recurrence_prediction, scaled_local_prediction, Order,
};
use stepjacobi::orthopoly::{
    build_recurrence, cd_kernel, eval_monic, oracle_cross_check, RecurrenceTable,
};
use stepjacobi::quadrature::{gauss_jacobi, CompositeRule, WeightSpec};
use stepjacobi::specfun::props;
use stepjacobi::szego::{d_infinity, hbar, szego_full};
use stepjacobi::zerolab::{enumerate_local_zeros, predicted_zeros, spacing_report};

/// The degree window pinned by criteria 1 and 3.
const SWEEP_PINNED: [usize; 7] = [32, 45, 64, 91, 128, 181, 256];
/// Window for the outer/local criteria (their texts do not pin one); starts
/// past the pre-asymptotic drift of the oscillating 1/n coefficients.
const SWEEP_FIELD: [usize; 7] = [64, 91, 128, 181, 256, 362, 512];
/// Window for the kernel criterion, where the O(1/n) coefficient settles
/// later than for the other quantities.
const SWEEP_KERNEL: [usize; 7] = [128, 181, 256, 362, 512, 724, 1024];

static SPEC_C2: Lazy<WeightSpec> = Lazy::new(|| WeightSpec::jacobi(0.0, 0.0, 2.0).unwrap());

/// One table serves criteria 1, 3, 4, 5 and 6.
static TABLE_C2: Lazy<RecurrenceTable> =
    Lazy::new(|| build_recurrence(&SPEC_C2, 1024).expect("c = 2 table"));

static TABLE_C2_ZEROS: Lazy<RecurrenceTable> =
    Lazy::new(|| build_recurrence(&SPEC_C2, 400).expect("c = 2 zeros table"));

static SPEC_LEGENDRE: Lazy<WeightSpec> = Lazy::new(|| WeightSpec::jacobi(0.0, 0.0, 1.0).unwrap());

static TABLE_LEGENDRE: Lazy<RecurrenceTable> =
    Lazy::new(|| build_recurrence(&SPEC_LEGENDRE, 200).expect("legendre table"));

/// Least-squares slope of log(err) against log(n).
fn fitted_slope(ns: &[usize], errs: &[f64]) -> f64 {
    assert_eq!(ns.len(), errs.len());
    let m = ns.len() as f64;
    let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|&e| e.max(1e-300).ln()).collect();
    let xbar = xs.iter().sum::<f64>() / m;
    let ybar = ys.iter().sum::<f64>() / m;
    let cov: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - xbar) * (y - ybar))
        .sum();
    let var: f64 = xs.iter().map(|x| (x - xbar).powi(2)).sum();
    cov / var
}

struct Criterion {
    label: &'static str,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Criterion {
            label,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: String) {
        if !ok {
            self.failures.push(what);
        }
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    fn finish(self) {
        for n in &self.notes {
            println!("    {n}");
        }
        if self.failures.is_empty() {
            println!("{}: PASS", self.label);
        } else {
            println!("{}: FAIL", self.label);
            for f in &self.failures {
                println!("    FAILED CLAUSE: {f}");
            }
            panic!("{} failed: {:?}", self.label, self.failures);
        }
    }
}

#[test]
fn criterion_01_recurrence_asymptotics() {
    let mut cr = Criterion::new("criterion 01 (recurrence-coefficient asymptotics)");
    let spec = &*SPEC_C2;
    let table = &*TABLE_C2;

    let mut e1a = Vec::new();
    let mut e0a = Vec::new();
    let mut e1b = Vec::new();
    let mut e0b = Vec::new();
    for &n in &SWEEP_PINNED {
        let (pa, pb) = recurrence_prediction(spec, n).unwrap();
        e1a.push((table.a(n) - pa).abs());
        e0a.push((table.a(n) - 0.5).abs());
        e1b.push((table.b(n) - pb).abs());
        e0b.push(table.b(n).abs());
    }
    let s1a = fitted_slope(&SWEEP_PINNED, &e1a);
    let s0a = fitted_slope(&SWEEP_PINNED, &e0a);
    let s1b = fitted_slope(&SWEEP_PINNED, &e1b);
    let s0b = fitted_slope(&SWEEP_PINNED, &e0b);
    cr.note(format!(
        "slopes: a order1 {s1a:.3}, a order0 {s0a:.3}, b order1 {s1b:.3}, b order0 {s0b:.3}"
    ));

    // the O(1/n^2) claim itself: scaled errors stay bounded
    let bn2: Vec<f64> = SWEEP_PINNED
        .iter()
        .zip(&e1b)
        .map(|(&n, e)| e * (n * n) as f64)
        .collect();
    cr.note(format!(
        "b-error * n^2 stays in [{:.3}, {:.3}] across the window (bounded; the oscillating \
         coefficient (log c/2pi)(cos theta + 2 log c sin theta / pi) drifts from a near-zero)",
        bn2.iter().cloned().fold(f64::INFINITY, f64::min),
        bn2.iter().cloned().fold(0.0, f64::max)
    ));

    cr.check(
        s1a <= -1.7,
        format!("slope |a_n - pred_a| = {s1a:.3} > -1.7"),
    );
    cr.check(
        s1b <= -1.7,
        format!("slope |b_n - pred_b| = {s1b:.3} > -1.7"),
    );
    cr.check(
        s0a <= -0.7,
        format!("leading-only slope for a = {s0a:.3} > -0.7"),
    );
    cr.check(
        s0b <= -0.7,
        format!("leading-only slope for b = {s0b:.3} > -0.7"),
    );
    cr.finish();
}

#[test]
fn criterion_02_magnus_reduction() {
    let mut cr = Criterion::new("criterion 02 (general conjecture reduces to the proven case)");
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5743_2026);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let c: f64 = rng.gen_range(0.2..5.0);
        let n: usize = rng.gen_range(1..=10_000);
        let spec = WeightSpec::jacobi(0.0, 0.0, c).unwrap();
        let (ra, rb) = recurrence_prediction(&spec, n).unwrap();
        let (ma, mb) =
            stepjacobi::asymptotics::magnus_prediction(0.0, 0.0, 0.0, 0.0, c * c, 1.0, n).unwrap();
        worst = worst.max((ra - ma).abs()).max((rb - mb).abs());
    }
    cr.note(format!(
        "worst deviation over 100 random (c, n) pairs: {worst:.2e}"
    ));
    cr.check(worst <= 1e-13, format!("deviation {worst:.2e} > 1e-13"));
    cr.finish();
}

#[test]
fn criterion_03_leading_coefficient() {
    let mut cr = Criterion::new("criterion 03 (leading coefficient expansion)");
    let spec = &*SPEC_C2;
    let table = &*TABLE_C2;

    let mut e1 = Vec::new();
    let mut e0 = Vec::new();
    for &n in &SWEEP_PINNED {
        let kn = table.leading_coeff(n);
        let p1 = leading_coeff_prediction(spec, n, Order::WithCorrection).unwrap();
        let p0 = leading_coeff_prediction(spec, n, Order::Leading).unwrap();
        e1.push((kn - p1).abs() / kn);
        e0.push((kn - p0).abs() / kn);
    }
    let s1 = fitted_slope(&SWEEP_PINNED, &e1);
    let s0 = fitted_slope(&SWEEP_PINNED, &e0);
    cr.note(format!(
        "slopes: with bracket {s1:.3}, leading only {s0:.3}"
    ));
    let e0n: Vec<f64> = SWEEP_PINNED
        .iter()
        .zip(&e0)
        .map(|(&n, e)| e * n as f64)
        .collect();
    cr.note(format!(
        "leading-only error * n stays in [{:.4}, {:.4}] (bounded oscillating coefficient \
         |1/8 - (log c/2pi)(log c/pi + sin theta_n+1)| dips near n = 33)",
        e0n.iter().cloned().fold(f64::INFINITY, f64::min),
        e0n.iter().cloned().fold(0.0, f64::max)
    ));
    cr.check(
        s1 <= -1.7,
        format!("bracketed relative-error slope {s1:.3} > -1.7"),
    );
    cr.check(
        s0 <= -0.7,
        format!("leading-only relative-error slope {s0:.3} > -0.7"),
    );
    cr.finish();
}

#[test]
fn criterion_04_outer_asymptotics() {
    let mut cr = Criterion::new("criterion 04 (outer asymptotics off the interval)");
    let spec = &*SPEC_C2;
    let table = &*TABLE_C2;
    for z in [Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.8)] {
        let mut e1 = Vec::new();
        let mut e0 = Vec::new();
        for &n in &SWEEP_FIELD {
            let numeric = outer_ratio_numeric(table, n, z).unwrap();
            e0.push((numeric - outer_prediction(spec, n, z, Order::Leading).unwrap()).norm());
            e1.push(
                (numeric - outer_prediction(spec, n, z, Order::WithCorrection).unwrap()).norm(),
            );
        }
        let s1 = fitted_slope(&SWEEP_FIELD, &e1);
        let s0 = fitted_slope(&SWEEP_FIELD, &e0);
        cr.note(format!(
            "z = {z}: order-1 slope {s1:.3}, order-0 slope {s0:.3}"
        ));
        cr.check(
            s1 <= -1.7,
            format!("order-1 slope at z = {z}: {s1:.3} > -1.7"),
        );
        cr.check(
            s0 <= -0.7,
            format!("order-0 slope at z = {z}: {s0:.3} > -0.7"),
        );
    }

    // Chebyshev control: the 1/n coefficient vanishes identically
    let cheb = WeightSpec::jacobi(-0.5, -0.5, 1.0).unwrap();
    let cheb_table = build_recurrence(&cheb, 32).unwrap();
    let z = Complex64::new(2.0, 0.0);
    let p0 = outer_prediction(&cheb, 32, z, Order::Leading).unwrap();
    let p1 = outer_prediction(&cheb, 32, z, Order::WithCorrection).unwrap();
    cr.check(
        (p0 - p1).norm() <= 1e-14 * p0.norm(),
        "H_n does not vanish for Chebyshev".into(),
    );
    let numeric = outer_ratio_numeric(&cheb_table, 32, z).unwrap();
    let rel = (numeric - p0).norm() / p0.norm();
    cr.note(format!(
        "Chebyshev control at n = 32: order-0 relative error {rel:.2e}"
    ));
    cr.check(
        rel < 1e-8,
        format!("Chebyshev order-0 relative error {rel:.2e} >= 1e-8"),
    );
    cr.finish();
}

#[test]
fn criterion_05_local_asymptotics() {
    let mut cr = Criterion::new("criterion 05 (local asymptotics at the jump)");
    let spec = &*SPEC_C2;
    let table = &*TABLE_C2;

    // unscaled point x = 0.1 against the full local expansion; the window
    // tops out where 2 n asin(x) meets the series domain cap
    let x = 0.1;
    let sweep_unscaled = [64usize, 91, 128, 181, 256, 362];
    let mut r1 = Vec::new();
    let mut r0 = Vec::new();
    for &n in &sweep_unscaled {
        let numeric = eval_monic(table, n, Complex64::new(x, 0.0)).unwrap().re;
        let p1 = local_prediction(spec, n, x, Order::WithCorrection).unwrap();
        let p0 = local_prediction(spec, n, x, Order::Leading).unwrap();
        r1.push((numeric - p1).abs() / numeric.abs());
        r0.push((numeric - p0).abs() / numeric.abs());
    }
    let s1 = fitted_slope(&sweep_unscaled, &r1);
    let s0 = fitted_slope(&sweep_unscaled, &r0);
    cr.note(format!(
        "x = 0.1: order-1 slope {s1:.3}, order-0 slope {s0:.3}"
    ));
    cr.check(
        s1 <= -1.7,
        format!("order-1 relative-error slope {s1:.3} > -1.7 at x = 0.1"),
    );
    cr.check(
        s0 <= -0.7,
        format!("order-0 relative-error slope {s0:.3} > -0.7 at x = 0.1"),
    );

    // scaled point x = 0.6 against the scaled limit form
    let xs = 0.6;
    let mut rs = Vec::new();
    for &n in &SWEEP_FIELD {
        let numeric = eval_monic(table, n, Complex64::new(PI * xs / n as f64, 0.0))
            .unwrap()
            .re;
        let pred = scaled_local_prediction(spec, n, xs).unwrap();
        rs.push((numeric - pred).abs() / numeric.abs());
    }
    let ss = fitted_slope(&SWEEP_FIELD, &rs);
    cr.note(format!("scaled x = 0.6: slope {ss:.3}"));
    cr.check(
        ss <= -0.7,
        format!("scaled relative-error slope {ss:.3} > -0.7"),
    );
    cr.finish();
}

#[test]
fn criterion_06_kernel_universality() {
    let mut cr = Criterion::new("criterion 06 (kernel limit at the jump)");
    let spec = &*SPEC_C2;
    let table = &*TABLE_C2;
    let (x, y) = (0.3, -0.2);
    let limit = k_infty(spec, x, y).unwrap();
    let mut errs = Vec::new();
    for &n in &SWEEP_KERNEL {
        let nf = n as f64;
        let numeric = PI / nf * cd_kernel(table, n, PI * x / nf, PI * y / nf).unwrap();
        errs.push((numeric - limit).abs());
    }
    let slope = fitted_slope(&SWEEP_KERNEL, &errs);
    cr.note(format!(
        "scaled-kernel error slope at (0.3, -0.2): {slope:.3}"
    ));
    cr.check(
        slope <= -0.7,
        format!("kernel error slope {slope:.3} > -0.7"),
    );

    // analytic diagonal value
    let diag = k_infty(spec, 0.0, 0.0).unwrap();
    let expect = 2.0 * 2f64.ln() / 3.0;
    cr.check(
        (diag - expect).abs() <= 1e-12,
        format!("K(0,0) = {diag:.15} vs 2 log2/3 = {expect:.15}"),
    );

    // near c = 1 the kernel collapses to the sine kernel
    let near_one = WeightSpec::jacobi(0.0, 0.0, 1.0 + 1e-7).unwrap();
    for (px, py) in [(0.3, -0.2), (1.1, 0.25), (0.6, -0.9)] {
        let v = k_infty(&near_one, px, py).unwrap();
        let sinc = (PI * (px - py)).sin() / (PI * (px - py));
        cr.check(
            (v - sinc).abs() < 1e-5,
            format!("sinc control at ({px},{py}): |{v:.8} - {sinc:.8}| >= 1e-5"),
        );
    }
    cr.finish();
}

#[test]
fn criterion_07_clock_breakdown() {
    let mut cr = Criterion::new("criterion 07 (clock behavior breaks at the jump)");
    let spec = &*SPEC_C2;
    let table = &*TABLE_C2_ZEROS;

    let report = spacing_report(spec, table, 200, -5, 5).unwrap();
    for row in &report.rows {
        // k = 0 is the gap straddling the jump itself, which the spacing
        // statement does not classify; it is reported but not asserted
        if row.k >= 1 {
            cr.check(
                row.normalized_spacing < 1.0 - 1e-3,
                format!(
                    "spacing at k = {} is {:.5}, not < 1 - 1e-3",
                    row.k, row.normalized_spacing
                ),
            );
        } else if row.k <= -1 {
            cr.check(
                row.normalized_spacing > 1.0 + 1e-3,
                format!(
                    "spacing at k = {} is {:.5}, not > 1 + 1e-3",
                    row.k, row.normalized_spacing
                ),
            );
        }
    }
    let right: Vec<f64> = report
        .rows
        .iter()
        .filter(|r| r.k >= 1)
        .map(|r| r.normalized_spacing)
        .collect();
    let left: Vec<f64> = report
        .rows
        .iter()
        .filter(|r| r.k <= -1)
        .map(|r| r.normalized_spacing)
        .collect();
    let straddle = report
        .rows
        .iter()
        .find(|r| r.k == 0)
        .map(|r| r.normalized_spacing);
    cr.note(format!("n = 200: spacings right of the jump {right:.5?}"));
    cr.note(format!("n = 200: spacings left of the jump {left:.5?}"));
    cr.note(format!(
        "n = 200: straddling gap {straddle:.5?} (not asserted)"
    ));

    // c = 1 control: clock behavior
    let control = spacing_report(&SPEC_LEGENDRE, &TABLE_LEGENDRE, 200, -5, 5).unwrap();
    for row in &control.rows {
        cr.check(
            (row.normalized_spacing - 1.0).abs() < 0.02,
            format!(
                "c = 1 spacing at k = {} is {:.5}",
                row.k, row.normalized_spacing
            ),
        );
    }

    // prediction agreement tightens from n = 100 to n = 400
    let agreement = |n: usize| -> f64 {
        let actual = enumerate_local_zeros(table, n, -5, 5).unwrap();
        let predicted = predicted_zeros(spec, n, -5, 5).unwrap();
        actual
            .iter()
            .zip(&predicted)
            .map(|((_, xk), (_, zk))| (n as f64 / PI * xk - zk).abs())
            .fold(0.0f64, f64::max)
    };
    let (a100, a400) = (agreement(100), agreement(400));
    cr.note(format!(
        "max |n/pi x_k - zeta_k| over |k| <= 5: {a100:.5} at n=100, {a400:.5} at n=400"
    ));
    cr.check(
        a400 < a100,
        format!("agreement did not improve: {a400:.5} !< {a100:.5}"),
    );
    cr.finish();
}

#[test]
fn criterion_08_confluent_property_suite() {
    let mut cr = Criterion::new("criterion 08 (confluent-hypergeometric properties)");
    let start = Instant::now();
    let checks = props::property_suite(2.0).unwrap();
    for check in &checks {
        cr.note(format!(
            "{}: {} points, worst margin {:.3e}",
            check.name, check.points, check.worst_margin
        ));
        cr.check(
            check.pass,
            format!("{} failed with margin {:e}", check.name, check.worst_margin),
        );
    }
    let elapsed = start.elapsed();
    cr.note(format!("suite runtime: {elapsed:.2?}"));
    cr.check(
        elapsed.as_secs() < 60,
        format!("suite took {elapsed:.2?} (budget 60 s)"),
    );
    cr.finish();
}

#[test]
fn criterion_09_szego_identities() {
    let mut cr = Criterion::new("criterion 09 (Szego identities)");
    let spec = WeightSpec::new(0.4, -0.3, 2.0, vec![0.1, 0.3]).unwrap();

    // boundary product law D_+ D_- = w_c at 100 points (limits + Richardson)
    let mut worst = 0.0f64;
    for side in [-1.0, 1.0] {
        for j in 0..50 {
            let x = side * (0.02 + 0.96 * (j as f64 + 0.5) / 50.0);
            let prod = |eps: f64| {
                let up = szego_full(&spec, Complex64::new(x, eps)).unwrap();
                let dn = szego_full(&spec, Complex64::new(x, -eps)).unwrap();
                (up * dn).re
            };
            let refined = 2.0 * prod(1e-9) - prod(2e-9);
            let rel = (refined - spec.wc(x)).abs() / spec.wc(x);
            worst = worst.max(rel);
        }
    }
    cr.note(format!(
        "worst boundary-product relative error over 100 points: {worst:.2e}"
    ));
    cr.check(
        worst < 1e-7,
        format!("boundary product law off by {worst:.2e} >= 1e-7"),
    );

    // two-path D_infinity
    let closed = d_infinity(&spec);
    let far = szego_full(&spec, Complex64::new(1e12, 0.0)).unwrap();
    let dev = (far - Complex64::new(closed, 0.0)).norm() / closed;
    cr.note(format!("two-path D_infinity deviation: {dev:.2e}"));
    cr.check(
        dev <= 1e-10,
        format!("D_infinity paths disagree by {dev:.2e}"),
    );

    // hbar closed form vs principal-value quadrature for h = e^x
    let expx = WeightSpec::new(0.0, 0.0, 1.0, vec![0.0, 1.0]).unwrap();
    let mut worst_h = 0.0f64;
    for j in 0..20 {
        let x = -0.9 + 1.8 * (j as f64 + 0.5) / 20.0;
        let closed = hbar(&expx, x).unwrap();
        let pv = hbar_pv_oracle(&expx, x, 40_000);
        worst_h = worst_h.max((closed - pv).abs());
    }
    cr.note(format!(
        "hbar closed form vs PV quadrature worst deviation: {worst_h:.2e}"
    ));
    cr.check(
        worst_h < 1e-8,
        format!("hbar oracle disagrees by {worst_h:.2e}"),
    );
    cr.finish();
}

/// Principal-value quadrature oracle: subtracting the singular-angle value
/// makes the integrand smooth, then the midpoint rule applies.
fn hbar_pv_oracle(spec: &WeightSpec, x: f64, n: usize) -> f64 {
    let tx = x.acos();
    let g = |t: f64| spec.log_h(t.cos());
    let gx = g(tx);
    let mut total = 0.0;
    for k in 0..n {
        let t = PI * (k as f64 + 0.5) / n as f64;
        let denom = t.cos() - x;
        if denom.abs() > 1e-13 {
            total += (g(t) - gx) / denom;
        }
    }
    (1.0 - x * x).sqrt() / (2.0 * PI) * total * PI / n as f64
}

#[test]
fn criterion_10_oracle_integrity() {
    let mut cr = Criterion::new("criterion 10 (oracle integrity)");

    // modified-Chebyshev cross-check on three specs
    let legendre = oracle_cross_check(&SPEC_LEGENDRE, 10).unwrap();
    let chebyshev = oracle_cross_check(&WeightSpec::jacobi(-0.5, -0.5, 1.0).unwrap(), 10).unwrap();
    let jumpy = oracle_cross_check(&WeightSpec::jacobi(0.5, -0.3, 2.0).unwrap(), 20).unwrap();
    cr.note(format!(
        "cross-check deviations: legendre {legendre:.2e}, chebyshev {chebyshev:.2e}, jump {jumpy:.2e}"
    ));
    cr.check(
        legendre < 1e-10,
        format!("legendre cross-check {legendre:.2e} >= 1e-10"),
    );
    cr.check(
        chebyshev < 1e-10,
        format!("chebyshev cross-check {chebyshev:.2e} >= 1e-10"),
    );
    cr.check(
        jumpy < 1e-8,
        format!("jump-weight cross-check {jumpy:.2e} >= 1e-8"),
    );

    // orthonormality defect of the shared table (covers n = 256 and beyond)
    let defect = TABLE_C2.ortho_defect;
    cr.note(format!(
        "orthonormality defect up to n = 1024: {defect:.2e}"
    ));
    cr.check(
        defect < 1e-8,
        format!("orthonormality defect {defect:.2e} >= 1e-8"),
    );

    // Gauss-Jacobi exactness against the moment recursion
    // I_{k+1} = (k I_{k-1} + (beta - alpha) I_k) / (k + alpha + beta + 2)
    let (alpha, beta, nrule) = (0.6, -0.3, 24usize);
    let rule = gauss_jacobi(nrule, alpha, beta).unwrap();
    let degree = 2 * nrule - 1;
    let mut moments = vec![0.0; degree + 1];
    moments[0] = stepjacobi::quadrature::jacobi_mass(alpha, beta);
    moments[1] = (beta - alpha) * moments[0] / (alpha + beta + 2.0);
    for k in 1..degree {
        moments[k + 1] = (k as f64 * moments[k - 1] + (beta - alpha) * moments[k])
            / (k as f64 + alpha + beta + 2.0);
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xacce_0010);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let coeffs: Vec<f64> = (0..=degree).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let exact: f64 = coeffs.iter().zip(&moments).map(|(c, m)| c * m).sum();
        let scale: f64 = coeffs
            .iter()
            .zip(&moments)
            .map(|(c, m)| (c * m).abs())
            .sum();
        let got: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&xn, &wn)| {
                let mut acc = 0.0;
                for &ck in coeffs.iter().rev() {
                    acc = acc * xn + ck;
                }
                wn * acc
            })
            .sum();
        worst = worst.max((got - exact).abs() / scale.max(exact.abs()));
    }
    cr.note(format!(
        "Gauss-Jacobi exactness worst relative error: {worst:.2e}"
    ));
    cr.check(
        worst < 1e-12,
        format!("exactness error {worst:.2e} >= 1e-12"),
    );
    cr.finish();
}

/// The composite rule built for the shared table integrates constants to
/// mu0 = 1 + c^2; a fast end-to-end sanity check on the fixtures.
#[test]
fn fixture_sanity() {
    assert!((TABLE_C2.mu0 - 5.0).abs() < 1e-12);
    assert!((TABLE_LEGENDRE.mu0 - 2.0).abs() < 1e-12);
    let rule = CompositeRule::build(&SPEC_C2, 64).unwrap();
    assert!((rule.mass() - 5.0).abs() < 1e-13);
}

/// Far from the jump the spacings drift back to the clock value 1: at
/// |k| = 12 and n = 400 they sit within 0.08 of it (not a numbered
/// criterion; supports the spacing-report contract).
#[test]
fn spacing_recovers_clock_far_from_jump() {
    let report = spacing_report(&SPEC_C2, &TABLE_C2_ZEROS, 400, -12, 12).unwrap();
    for row in report.rows.iter().filter(|r| r.k == 12 || r.k == -12) {
        assert!(
            (row.normalized_spacing - 1.0).abs() < 0.08,
            "spacing at k = {} is {:.4}",
            row.k,
            row.normalized_spacing
        );
    }
}

/// The scaled first nonnegative zero stays inside [0, t] and spreads over
/// at least 60% of it as n runs to 400.
#[test]
fn density_experiment_spread() {
    let n_list: Vec<usize> = (50..=400).collect();
    let report =
        stepjacobi::zerolab::x0_density_experiment(&SPEC_C2, &TABLE_C2_ZEROS, &n_list).unwrap();
    let t = report.t_endpoint;
    assert!(t > 0.0 && t < 1.0, "t = {t}");
    let lo = report
        .values
        .iter()
        .map(|v| v.1)
        .fold(f64::INFINITY, f64::min);
    let hi = report.values.iter().map(|v| v.1).fold(0.0f64, f64::max);
    assert!(lo >= 0.0 && hi <= t + 0.01);
    assert!(
        hi - lo >= 0.6 * t,
        "observed range [{lo:.4}, {hi:.4}] covers {:.0}% of [0, {t:.4}]",
        100.0 * (hi - lo) / t
    );
}
