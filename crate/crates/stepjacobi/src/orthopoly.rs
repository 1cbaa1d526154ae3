//! Ground-truth orthogonal polynomials for the step-modified weight:
//! recurrence coefficients by the discretized Stieltjes procedure, monic
//! and orthonormal evaluation, zeros, and the Christoffel-Darboux kernel.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{fsum, sym_tridiag_eigen};
use crate::quadrature::{CompositeRule, WeightSpec, MAX_NPTS_PER_HALF};

/// Recurrence data for P_{n+1}(z) = (z - b_n) P_n(z) - a_n^2 P_{n-1}(z),
/// with total mass mu0 and quadrature provenance.
#[derive(Clone, Debug)]
pub struct RecurrenceTable {
    pub mu0: f64,
    /// a_n^2 for n = 1..=n_max (index 0 holds a_1^2)
    pub a_sq: Vec<f64>,
    /// b_n for n = 0..n_max (index n holds b_n)
    pub b: Vec<f64>,
    pub n_max: usize,
    /// points per half of the converged composite rule
    pub quad_npts: usize,
    /// measured max |<p_i, p_j> - delta_ij| over i, j <= n_max
    pub ortho_defect: f64,
}

impl RecurrenceTable {
    /// a_n (n >= 1).
    pub fn a(&self, n: usize) -> f64 {
        self.a_sq[n - 1].sqrt()
    }

    /// a_n^2 (n >= 1).
    pub fn a_sq(&self, n: usize) -> f64 {
        self.a_sq[n - 1]
    }

    /// b_n (n >= 0).
    pub fn b(&self, n: usize) -> f64 {
        self.b[n]
    }

    /// Leading coefficient k_n of the orthonormal polynomial:
    /// k_n = 1 / (sqrt(mu0) a_1 ... a_n).
    pub fn leading_coeff(&self, n: usize) -> f64 {
        let mut k = 1.0 / self.mu0.sqrt();
        for j in 1..=n {
            k /= self.a(j);
        }
        k
    }
}

struct StieltjesOutcome {
    mu0: f64,
    a_sq: Vec<f64>,
    b: Vec<f64>,
}

/// One Stieltjes pass over a fixed discrete measure; no defect check here.
fn stieltjes_pass(rule: &CompositeRule, n_max: usize) -> StieltjesOutcome {
    let x = &rule.nodes;
    let w = &rule.weights;
    let m = x.len();
    let mu0 = rule.mass();

    let mut p_prev = vec![1.0 / mu0.sqrt(); m];
    let mut a_sq = Vec::with_capacity(n_max);
    let mut b = Vec::with_capacity(n_max);

    let mut scratch = vec![0.0; m];
    // b_0 and the first step
    let b0 = fsum((0..m).map(|i| w[i] * x[i] * p_prev[i] * p_prev[i]));
    b.push(b0);
    for i in 0..m {
        scratch[i] = (x[i] - b0) * p_prev[i];
    }
    let mut a2 = fsum((0..m).map(|i| w[i] * scratch[i] * scratch[i]));
    a_sq.push(a2);
    let mut p_cur: Vec<f64> = scratch.iter().map(|q| q / a2.sqrt()).collect();

    for _ in 1..n_max {
        let bk = fsum((0..m).map(|i| w[i] * x[i] * p_cur[i] * p_cur[i]));
        let ak = a2.sqrt();
        for i in 0..m {
            scratch[i] = (x[i] - bk) * p_cur[i] - ak * p_prev[i];
        }
        a2 = fsum((0..m).map(|i| w[i] * scratch[i] * scratch[i]));
        b.push(bk);
        a_sq.push(a2);
        let inv = 1.0 / a2.sqrt();
        for i in 0..m {
            let next = scratch[i] * inv;
            p_prev[i] = p_cur[i];
            p_cur[i] = next;
        }
    }
    StieltjesOutcome { mu0, a_sq, b }
}

/// Gram defect max |<p_i, p_j> - delta_ij| for i, j <= n_max on the rule.
fn orthogonality_defect(rule: &CompositeRule, out: &StieltjesOutcome, n_max: usize) -> f64 {
    let x = &rule.nodes;
    let w = &rule.weights;
    let m = x.len();
    // values matrix rows 0..=n_max
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![1.0 / out.mu0.sqrt(); m]);
    let mut prev: Vec<f64> = rows[0].clone();
    let mut cur: Vec<f64> = (0..m)
        .map(|i| (x[i] - out.b[0]) * prev[i] / out.a_sq[0].sqrt())
        .collect();
    rows.push(cur.clone());
    for k in 1..n_max {
        let ak = out.a_sq[k - 1].sqrt();
        let akp = out.a_sq[k].sqrt();
        let next: Vec<f64> = (0..m)
            .map(|i| ((x[i] - out.b[k]) * cur[i] - ak * prev[i]) / akp)
            .collect();
        prev = std::mem::take(&mut cur);
        cur = next;
        rows.push(cur.clone());
    }
    let mut defect = 0.0f64;
    for i in 0..=n_max {
        for j in i..=n_max {
            let g: f64 = (0..m).map(|l| w[l] * rows[i][l] * rows[j][l]).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            defect = defect.max((g - target).abs());
        }
    }
    defect
}

/// Build the recurrence table by the Stieltjes procedure on composite rules
/// of doubling size until two consecutive tables agree to 1e-12, then gate
/// on the orthonormality defect.
pub fn build_recurrence(spec: &WeightSpec, n_max: usize) -> Result<RecurrenceTable> {
    if n_max == 0 {
        return Err(Error::Domain("build_recurrence: n_max must be >= 1".into()));
    }
    spec.validate()?;
    // polynomial exactness for the degree-2 n_max inner products needs
    // n_max + 1 points per half; start a bit above that
    let mut npts = 256usize.max((n_max + 1).next_power_of_two());
    let mut rule = CompositeRule::build(spec, npts)?;
    let mut out = stieltjes_pass(&rule, n_max);
    loop {
        if 2 * npts > MAX_NPTS_PER_HALF {
            return Err(Error::QuadratureNonConvergence(format!(
                "recurrence table still moving at {npts} points per half"
            )));
        }
        npts *= 2;
        let rule2 = CompositeRule::build(spec, npts)?;
        let out2 = stieltjes_pass(&rule2, n_max);
        let dev = out
            .a_sq
            .iter()
            .zip(&out2.a_sq)
            .chain(out.b.iter().zip(&out2.b))
            .map(|(u, v)| (u - v).abs())
            .fold(0.0f64, f64::max);
        rule = rule2;
        out = out2;
        if dev <= 1e-12 {
            break;
        }
    }
    let defect = orthogonality_defect(&rule, &out, n_max);
    if defect > 1e-6 {
        return Err(Error::LossOfOrthogonality { defect });
    }
    Ok(RecurrenceTable {
        mu0: out.mu0,
        a_sq: out.a_sq,
        b: out.b,
        n_max,
        quad_npts: rule.npts_per_half,
        ortho_defect: defect,
    })
}

/// Monic P_n(z) by the forward recurrence.
pub fn eval_monic(table: &RecurrenceTable, n: usize, z: Complex64) -> Result<Complex64> {
    if n > table.n_max {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: table.n_max,
        });
    }
    let mut p_prev = Complex64::new(0.0, 0.0);
    let mut p_cur = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let next = (z - table.b[k]) * p_cur
            - if k >= 1 {
                table.a_sq[k - 1] * p_prev
            } else {
                Complex64::new(0.0, 0.0)
            };
        p_prev = p_cur;
        p_cur = next;
    }
    Ok(p_cur)
}

/// Orthonormal values (p_{n-1}(x), p_n(x)); stable for large n because the
/// orthonormal recurrence keeps values of order one on the interval.
fn orthonormal_pair(table: &RecurrenceTable, n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 0.0;
    let mut p_cur = 1.0 / table.mu0.sqrt();
    for k in 0..n {
        let ak = if k >= 1 {
            table.a_sq[k - 1].sqrt()
        } else {
            0.0
        };
        let akp = table.a_sq[k].sqrt();
        let next = ((x - table.b[k]) * p_cur - ak * p_prev) / akp;
        p_prev = p_cur;
        p_cur = next;
    }
    (p_prev, p_cur)
}

/// Orthonormal p_n(x) = k_n P_n(x).
pub fn eval_orthonormal(table: &RecurrenceTable, n: usize, x: f64) -> Result<f64> {
    if n > table.n_max {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: table.n_max,
        });
    }
    Ok(orthonormal_pair(table, n, x).1)
}

/// The n simple zeros, ascending, all inside (-1, 1).
#[derive(Clone, Debug)]
pub struct ZeroSet {
    pub n: usize,
    pub zeros: Vec<f64>,
}

/// Zeros of P_n as eigenvalues of the n x n Jacobi matrix, polished by one
/// Newton step on the orthonormal recurrence.
pub fn zeros(table: &RecurrenceTable, n: usize) -> Result<ZeroSet> {
    if n > table.n_max {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: table.n_max,
        });
    }
    if n == 0 {
        return Ok(ZeroSet {
            n: 0,
            zeros: Vec::new(),
        });
    }
    let mut d: Vec<f64> = table.b[..n].to_vec();
    let mut e: Vec<f64> = (1..n).map(|k| table.a_sq[k - 1].sqrt()).collect();
    sym_tridiag_eigen(&mut d, &mut e, None)?;
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());

    for z in d.iter_mut() {
        let (value, slope) = orthonormal_value_and_derivative(table, n, *z);
        if slope != 0.0 {
            let step = value / slope;
            if step.abs() < 1e-6 {
                *z -= step;
            }
        }
    }
    // gate: residual small relative to the neighbour polynomial's scale
    for &z in &d {
        let (pm, pn) = orthonormal_pair(table, n, z);
        if pn.abs() > 1e-8 * pm.abs().max(1e-300) {
            return Err(Error::Numeric(format!(
                "zero at {z} has residual {:.3e} relative to neighbour scale",
                pn.abs() / pm.abs()
            )));
        }
    }
    Ok(ZeroSet { n, zeros: d })
}

fn orthonormal_value_and_derivative(table: &RecurrenceTable, n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 0.0;
    let mut p_cur = 1.0 / table.mu0.sqrt();
    let mut d_prev = 0.0;
    let mut d_cur = 0.0;
    for k in 0..n {
        let ak = if k >= 1 {
            table.a_sq[k - 1].sqrt()
        } else {
            0.0
        };
        let akp = table.a_sq[k].sqrt();
        let next = ((x - table.b[k]) * p_cur - ak * p_prev) / akp;
        let dnext = ((x - table.b[k]) * d_cur + p_cur - ak * d_prev) / akp;
        p_prev = p_cur;
        p_cur = next;
        d_prev = d_cur;
        d_cur = dnext;
    }
    (p_cur, d_cur)
}

/// Christoffel-Darboux kernel K_n(x, y) = sum_{k < n} p_k(x) p_k(y); the CD
/// formula away from the diagonal, the direct sum near it.
pub fn cd_kernel(table: &RecurrenceTable, n: usize, x: f64, y: f64) -> Result<f64> {
    if n > table.n_max || n == 0 {
        return Err(Error::IndexOutOfRange {
            index: n,
            limit: table.n_max,
        });
    }
    if (x - y).abs() > 1e-6 {
        let (pxm, pxn) = orthonormal_pair(table, n, x);
        let (pym, pyn) = orthonormal_pair(table, n, y);
        // k_{n-1}/k_n = a_n
        Ok(table.a(n) * (pxn * pym - pyn * pxm) / (x - y))
    } else {
        let mut totals = 0.0;
        let mut px_prev = 0.0;
        let mut px = 1.0 / table.mu0.sqrt();
        let mut py_prev = 0.0;
        let mut py = px;
        totals += px * py;
        for k in 0..n - 1 {
            let ak = if k >= 1 {
                table.a_sq[k - 1].sqrt()
            } else {
                0.0
            };
            let akp = table.a_sq[k].sqrt();
            let nx = ((x - table.b[k]) * px - ak * px_prev) / akp;
            let ny = ((y - table.b[k]) * py - ak * py_prev) / akp;
            px_prev = px;
            px = nx;
            py_prev = py;
            py = ny;
            totals += px * py;
        }
        Ok(totals)
    }
}

/// Independent cross-check: rebuild the recurrence from modified Chebyshev
/// moments and report the worst |delta a_n^2|^(1/2)-style deviation
/// max(|a_n - a_n'| + |b_n - b_n'|) over n < n_small.
pub fn oracle_cross_check(spec: &WeightSpec, n_small: usize) -> Result<f64> {
    if n_small > 30 {
        return Err(Error::Domain(
            "oracle_cross_check: n_small must be <= 30".into(),
        ));
    }
    let table = build_recurrence(spec, n_small)?;

    // modified moments nu_l = integral of monic Chebyshev T^_l against w_c,
    // each by the converged composite rule
    let nmom = 2 * n_small;
    let rule = CompositeRule::build(spec, 256.max(2 * n_small))?;
    let rule2 = CompositeRule::build(spec, 2 * rule.npts_per_half)?;
    let mut nu = Vec::with_capacity(nmom);
    for l in 0..nmom {
        let monic_cheb = move |x: f64| -> f64 {
            if l == 0 {
                return 1.0;
            }
            // T^_l = 2^{1-l} T_l
            let mut tm = 1.0;
            let mut tc = x;
            for _ in 1..l {
                let tn = 2.0 * x * tc - tm;
                tm = tc;
                tc = tn;
            }
            2f64.powi(1 - l as i32) * tc
        };
        let v1 = rule.integrate(monic_cheb);
        let v2 = rule2.integrate(monic_cheb);
        if (v1 - v2).abs() > 1e-12 * v2.abs().max(1.0) {
            return Err(Error::QuadratureNonConvergence(format!(
                "modified moment {l} did not converge"
            )));
        }
        nu.push(v2);
    }

    // modified Chebyshev (Wheeler) algorithm with the monic Chebyshev
    // reference recurrence: alpha^_l = 0, beta^_1 = 1/2, beta^_l = 1/4
    let ref_beta = |l: usize| -> f64 {
        match l {
            0 => std::f64::consts::PI, // unused placeholder mass
            1 => 0.5,
            _ => 0.25,
        }
    };
    let n = n_small;
    let mut sigma_prev = vec![0.0; 2 * n]; // sigma_{k-1, l}
    let mut sigma = nu.clone(); // sigma_{0, l}
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    alpha.push(nu[1] / nu[0]);
    beta.push(nu[0]);
    for k in 1..n {
        let mut sigma_next = vec![0.0; 2 * n];
        for l in k..=(2 * n - k - 1) {
            let s_km1_lp1 = sigma[l + 1];
            let s_km1_l = sigma[l];
            let s_km2_l = sigma_prev[l];
            let s_km1_lm1 = if l >= 1 { sigma[l - 1] } else { 0.0 };
            sigma_next[l] = s_km1_lp1 - alpha[k - 1] * s_km1_l - beta[k - 1] * s_km2_l
                + ref_beta(l) * s_km1_lm1;
        }
        alpha.push(sigma_next[k + 1] / sigma_next[k] - sigma[k] / sigma[k - 1]);
        beta.push(sigma_next[k] / sigma[k - 1]);
        sigma_prev = std::mem::take(&mut sigma);
        sigma = sigma_next;
    }

    // beta[0] = mu0, beta[k] = a_k^2, alpha[k] = b_k
    let mut worst = (beta[0] - table.mu0).abs() / table.mu0;
    for k in 0..n {
        let db = (alpha[k] - table.b[k]).abs();
        let da = if k >= 1 {
            (beta[k].sqrt() - table.a(k)).abs()
        } else {
            0.0
        };
        worst = worst.max(da + db);
    }
    Ok(worst)
}
