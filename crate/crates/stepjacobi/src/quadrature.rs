//! Gauss-Jacobi rules and the composite rule that splits the interval at
//! the jump, turning integration against the step-modified weight into a
//! discrete measure.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{fsum, sym_tridiag_eigen};
use crate::specfun::log_gamma;

/// Parameters of the weight (1-x)^alpha (1+x)^beta h(x) Xi_c(x), with the
/// analytic factor stored as the cosine series of log h:
/// `log h(cos t) = sum_k logh_cheb[k] * cos(k t)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightSpec {
    pub alpha: f64,
    pub beta: f64,
    pub c: f64,
    #[serde(default)]
    pub logh_cheb: Vec<f64>,
}

impl WeightSpec {
    pub fn new(alpha: f64, beta: f64, c: f64, logh_cheb: Vec<f64>) -> Result<Self> {
        let spec = WeightSpec {
            alpha,
            beta,
            c,
            logh_cheb,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Pure Jacobi weight with a jump: h == 1.
    pub fn jacobi(alpha: f64, beta: f64, c: f64) -> Result<Self> {
        Self::new(alpha, beta, c, Vec::new())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > -1.0) || !self.alpha.is_finite() {
            return Err(Error::InvalidWeight(format!(
                "alpha must be > -1, got {}",
                self.alpha
            )));
        }
        if !(self.beta > -1.0) || !self.beta.is_finite() {
            return Err(Error::InvalidWeight(format!(
                "beta must be > -1, got {}",
                self.beta
            )));
        }
        if !(self.c > 0.0) || !self.c.is_finite() {
            return Err(Error::InvalidWeight(format!(
                "c must be > 0, got {}",
                self.c
            )));
        }
        if self.logh_cheb.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidWeight(
                "logh_cheb has non-finite entries".into(),
            ));
        }
        Ok(())
    }

    /// log h(x) via Clenshaw on the Chebyshev series.
    pub fn log_h(&self, x: f64) -> f64 {
        let cs = &self.logh_cheb;
        if cs.is_empty() {
            return 0.0;
        }
        let mut b1 = 0.0f64;
        let mut b2 = 0.0f64;
        for &ck in cs.iter().skip(1).rev() {
            let b = 2.0 * x * b1 - b2 + ck;
            b2 = b1;
            b1 = b;
        }
        x * b1 - b2 + cs[0]
    }

    /// The analytic factor h(x) = exp(sum_k c_k T_k(x)); strictly positive.
    pub fn h(&self, x: f64) -> f64 {
        self.log_h(x).exp()
    }

    /// The c = 1 weight (1-x)^alpha (1+x)^beta h(x).
    pub fn w1(&self, x: f64) -> f64 {
        (1.0 - x).powf(self.alpha) * (1.0 + x).powf(self.beta) * self.h(x)
    }

    /// The step factor: 1 left of the jump, c^2 on [0, 1].
    pub fn step(&self, x: f64) -> f64 {
        if x < 0.0 {
            1.0
        } else {
            self.c * self.c
        }
    }

    /// The full weight w_c(x) on (-1, 0) u (0, 1).
    pub fn wc(&self, x: f64) -> f64 {
        self.w1(x) * self.step(x)
    }

    /// lambda = i log(c) / pi.
    pub fn lambda(&self) -> Complex64 {
        Complex64::new(0.0, self.c.ln() / std::f64::consts::PI)
    }
}

/// An n-point Gauss-Jacobi rule for (1-x)^alpha (1+x)^beta on (-1, 1).
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub exactness_degree: usize,
}

/// Total Jacobi mass 2^{a+b+1} B(a+1, b+1).
pub fn jacobi_mass(alpha: f64, beta: f64) -> f64 {
    let lg = |v: f64| {
        log_gamma(Complex64::new(v, 0.0))
            .expect("positive argument")
            .re
    };
    ((alpha + beta + 1.0) * 2f64.ln() + lg(alpha + 1.0) + lg(beta + 1.0) - lg(alpha + beta + 2.0))
        .exp()
}

/// Build the n-point rule by Golub-Welsch: eigen-decompose the symmetric
/// Jacobi-polynomial recurrence matrix; weights come from the squared first
/// eigenvector components.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::Domain("gauss_jacobi: need at least one node".into()));
    }
    if !(alpha > -1.0 && alpha.is_finite()) || !(beta > -1.0 && beta.is_finite()) {
        return Err(Error::InvalidWeight(format!(
            "gauss_jacobi exponents must be > -1, got ({alpha}, {beta})"
        )));
    }
    let ab = alpha + beta;
    let mut d = Vec::with_capacity(n);
    let mut e = Vec::with_capacity(n.saturating_sub(1));
    d.push((beta - alpha) / (ab + 2.0));
    for k in 1..n {
        let kf = k as f64;
        let denom = 2.0 * kf + ab;
        d.push((beta * beta - alpha * alpha) / (denom * (denom + 2.0)));
        // k = 1 needs the cancellation-safe form: (k+a+b)/(2k+a+b-1) = 1 there
        let e2 = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab)
                / (denom * denom * (denom + 1.0) * (denom - 1.0))
        };
        e.push(e2.sqrt());
    }
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    sym_tridiag_eigen(&mut d, &mut e, Some(&mut z))?;

    let mu0 = jacobi_mass(alpha, beta);
    let mut pairs: Vec<(f64, f64)> = d
        .into_iter()
        .zip(z.into_iter().map(|v| mu0 * v * v))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    if alpha == beta && n % 2 == 1 {
        pairs[n / 2].0 = 0.0;
    }
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule {
        nodes,
        weights,
        exactness_degree: 2 * n - 1,
    })
}

/// The discrete measure realizing integration against w_c: nodes in
/// (-1, 0) u (0, 1), weights absorbing the smooth factors, the analytic
/// part h and the jump c^2.
#[derive(Clone, Debug)]
pub struct CompositeRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// points per half used to build this rule
    pub npts_per_half: usize,
}

impl CompositeRule {
    pub fn build(spec: &WeightSpec, npts_per_half: usize) -> Result<Self> {
        spec.validate()?;
        let n = npts_per_half;
        let mut nodes = Vec::with_capacity(2 * n);
        let mut weights = Vec::with_capacity(2 * n);

        // left half [-1, 0]: x = (u-1)/2; singular endpoint -1 carries beta
        let left = gauss_jacobi(n, 0.0, spec.beta)?;
        let lscale = 2f64.powf(-spec.beta - 1.0);
        for (&u, &v) in left.nodes.iter().zip(&left.weights) {
            let x = (u - 1.0) / 2.0;
            let smooth = ((3.0 - u) / 2.0).powf(spec.alpha) * spec.h(x);
            nodes.push(x);
            weights.push(v * lscale * smooth);
        }

        // right half [0, 1]: x = (u+1)/2; singular endpoint +1 carries alpha
        let right = gauss_jacobi(n, spec.alpha, 0.0)?;
        let rscale = 2f64.powf(-spec.alpha - 1.0) * spec.c * spec.c;
        for (&u, &v) in right.nodes.iter().zip(&right.weights) {
            let x = (u + 1.0) / 2.0;
            let smooth = ((3.0 + u) / 2.0).powf(spec.beta) * spec.h(x);
            nodes.push(x);
            weights.push(v * rscale * smooth);
        }
        Ok(CompositeRule {
            nodes,
            weights,
            npts_per_half: n,
        })
    }

    /// Integral of f against the discrete measure.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        fsum(
            self.nodes
                .iter()
                .zip(&self.weights)
                .map(|(&x, &w)| w * f(x)),
        )
    }

    /// Total mass mu_0 = integral of w_c.
    pub fn mass(&self) -> f64 {
        fsum(self.weights.iter().copied())
    }
}

/// Largest node count per half tried before giving up.
pub const MAX_NPTS_PER_HALF: usize = 1 << 14;

/// Integrate f against w_c, doubling the rule until two refinements agree
/// to 1e-13 relative (at most twice beyond the requested count).
pub fn integrate_wc<F: Fn(f64) -> f64>(spec: &WeightSpec, f: F, npts: usize) -> Result<f64> {
    let npts = npts.max(8);
    let mut n = npts;
    let mut prev = CompositeRule::build(spec, n)?.integrate(&f);
    for _ in 0..2 {
        if 2 * n > MAX_NPTS_PER_HALF {
            break;
        }
        n *= 2;
        let cur = CompositeRule::build(spec, n)?.integrate(&f);
        let scale = cur.abs().max(1.0);
        if (cur - prev).abs() <= 1e-13 * scale {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureNonConvergence(format!(
        "integrate_wc: no 1e-13 agreement after doubling from {npts} points per half"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn one_point_legendre_is_midpoint() {
        let r = gauss_jacobi(1, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(r.nodes[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.weights[0], 2.0, epsilon = 1e-14);
    }

    #[test]
    fn two_point_legendre_by_exactness() {
        // nodes +-1/sqrt(3), weights 1, 1: verified through exactness on 1, x, x^2, x^3
        let r = gauss_jacobi(2, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(r.nodes[0], -1.0 / 3f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(r.nodes[1], 1.0 / 3f64.sqrt(), epsilon = 1e-14);
        for (k, exact) in [(0, 2.0), (1, 0.0), (2, 2.0 / 3.0), (3, 0.0)] {
            let got: f64 = r
                .nodes
                .iter()
                .zip(&r.weights)
                .map(|(&x, &w)| w * x.powi(k))
                .sum();
            assert_abs_diff_eq!(got, exact, epsilon = 1e-14);
        }
    }

    #[test]
    fn chebyshev_mass_is_pi() {
        for n in [3, 8, 21] {
            let r = gauss_jacobi(n, -0.5, -0.5).unwrap();
            let total: f64 = r.weights.iter().sum();
            assert_abs_diff_eq!(total, PI, epsilon = 1e-13);
        }
    }

    #[test]
    fn classical_five_point_legendre_table() {
        let r = gauss_jacobi(5, 0.0, 0.0).unwrap();
        let x_should = [
            -0.906179845938664,
            -0.5384693101056831,
            0.0,
            0.5384693101056831,
            0.906179845938664,
        ];
        let w_should = [
            0.23692688505618908,
            0.47862867049936647,
            0.5688888888888889,
            0.47862867049936647,
            0.23692688505618908,
        ];
        for i in 0..5 {
            assert_abs_diff_eq!(r.nodes[i], x_should[i], epsilon = 1e-14);
            assert_abs_diff_eq!(r.weights[i], w_should[i], epsilon = 1e-14);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gauss_jacobi(0, 0.0, 0.0).is_err());
        assert!(gauss_jacobi(5, -1.0, 0.0).is_err());
        assert!(gauss_jacobi(5, 0.0, -1.5).is_err());
    }

    #[test]
    fn exactness_at_the_degenerate_recurrence_branch() {
        // alpha + beta = -1 zeroes a factor shared between the numerator
        // and denominator of the first off-diagonal entry; the safe form
        // must keep full exactness
        let (alpha, beta, n) = (-0.7, -0.3, 10usize);
        let rule = gauss_jacobi(n, alpha, beta).unwrap();
        let degree = 2 * n - 1;
        let mut m = vec![jacobi_mass(alpha, beta)];
        m.push((beta - alpha) * m[0] / (alpha + beta + 2.0));
        for k in 1..degree {
            m.push((k as f64 * m[k - 1] + (beta - alpha) * m[k]) / (k as f64 + alpha + beta + 2.0));
        }
        for (k, exact) in m.iter().enumerate() {
            let got: f64 = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(&x, &w)| w * x.powi(k as i32))
                .sum();
            assert!(
                (got - exact).abs() <= 1e-13 * m[0],
                "moment {k}: {got} vs {exact}"
            );
        }
    }

    #[test]
    fn weight_mass_piecewise_constant() {
        // alpha = beta = 0, h == 1: integral of w_c is 1 + c^2
        let spec = WeightSpec::jacobi(0.0, 0.0, 2.0).unwrap();
        let v = integrate_wc(&spec, |_| 1.0, 64).unwrap();
        assert_abs_diff_eq!(v, 5.0, epsilon = 1e-13);
    }

    #[test]
    fn arcsine_halves() {
        let spec = WeightSpec::jacobi(-0.5, -0.5, 3.0).unwrap();
        let v = integrate_wc(&spec, |_| 1.0, 64).unwrap();
        assert_abs_diff_eq!(v, PI / 2.0 * 10.0, epsilon = 1e-12);
    }

    #[test]
    fn monomial_against_legendre() {
        let spec = WeightSpec::jacobi(0.0, 0.0, 1.0).unwrap();
        let v = integrate_wc(&spec, |x| x * x, 64).unwrap();
        assert_abs_diff_eq!(v, 2.0 / 3.0, epsilon = 1e-14);
    }

    #[test]
    fn positivity() {
        let spec = WeightSpec::new(0.3, -0.4, 0.7, vec![0.1, 0.2]).unwrap();
        let v = integrate_wc(&spec, |x| 1.0 + x * x, 64).unwrap();
        assert!(v > 0.0);
        let rule = CompositeRule::build(&spec, 64).unwrap();
        assert!(rule.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn convergence_under_doubling() {
        let spec = WeightSpec::new(0.5, -0.3, 2.0, vec![0.0, 1.0]).unwrap();
        let a = CompositeRule::build(&spec, 128)
            .unwrap()
            .integrate(|x| (3.0 * x).cos());
        let b = CompositeRule::build(&spec, 256)
            .unwrap()
            .integrate(|x| (3.0 * x).cos());
        assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
    }

    #[test]
    fn spec_serde_roundtrip() {
        let spec = WeightSpec::new(0.5, -0.25, 2.0, vec![0.0, 1.0]).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        let back: WeightSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        // schema field names
        assert!(json.contains("\"alpha\"") && json.contains("\"logh_cheb\""));
    }

    #[test]
    fn h_clenshaw_matches_direct_cosine_series() {
        let spec = WeightSpec::new(0.0, 0.0, 1.0, vec![0.3, -0.2, 0.05]).unwrap();
        let x: f64 = 0.37;
        let t = x.acos();
        let direct = 0.3 + (-0.2) * t.cos() + 0.05 * (2.0 * t).cos();
        assert_abs_diff_eq!(spec.log_h(x), direct, epsilon = 1e-14);
        assert!(spec.h(x) > 0.0);
    }
}
