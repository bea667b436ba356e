//! Quadrature backends for the integral identities.
//!
//! Two schemes cover everything the crate needs:
//!
//! - `ExpWeighted`: composite 10-point Gauss-Legendre panels on
//!   `[0, upper_cutoff]` with the unit-rate weight `e^{-s}` kept explicitly
//!   in the integrand. Right for smooth integrands against `e^{-s} ds`,
//!   where a cutoff of 40 already leaves a tail below 1e-16.
//! - `Adaptive`: adaptive Simpson with Richardson acceptance on a set of
//!   initial panels whose edges cluster quadratically toward the left
//!   endpoint. The clustering matters: the Laplace-type integrands here
//!   concentrate near 0 as the rate grows, and uniform coarse panels can
//!   miss that mass entirely.

use crate::series::SeriesValue;
use alloc::vec::Vec;
#[allow(unused_imports)] // the standalone no_std build resolves f64 math through this trait
use num_traits::Float;

/// Which integration backend to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureScheme {
    /// Composite Gauss-Legendre against an explicit `e^{-s}` weight.
    ExpWeighted,
    /// Panel-seeded adaptive Simpson.
    Adaptive,
}

/// Quadrature configuration.
///
/// Built through the validating constructors; the fields stay public for
/// inspection and struct-update tweaks once a valid base exists.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub scheme: QuadratureScheme,
    /// Target number of function evaluations for the fixed rule, or the
    /// number of seed panels (one per 10 nodes) for the adaptive one.
    /// At least 16.
    pub node_count: u32,
    /// Where the half-infinite integral is cut; finite and positive.
    pub upper_cutoff: f64,
    /// Absolute tolerance for adaptive refinement and divergence checks.
    pub abs_tol: f64,
}

/// Errors from quadrature configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadError {
    InvalidNodeCount { node_count: u32 },
    InvalidCutoff,
    InvalidTolerance,
}

impl core::fmt::Display for QuadError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::InvalidNodeCount { node_count } => {
                write!(f, "node count {node_count} below the minimum of 16")
            }
            Self::InvalidCutoff => write!(f, "upper cutoff must be finite and positive"),
            Self::InvalidTolerance => write!(f, "absolute tolerance must be finite and positive"),
        }
    }
}

impl core::error::Error for QuadError {}

impl QuadratureSpec {
    fn validated(
        scheme: QuadratureScheme,
        node_count: u32,
        upper_cutoff: f64,
        abs_tol: f64,
    ) -> Result<Self, QuadError> {
        if node_count < 16 {
            return Err(QuadError::InvalidNodeCount { node_count });
        }
        if !(upper_cutoff.is_finite() && upper_cutoff > 0.0) {
            return Err(QuadError::InvalidCutoff);
        }
        if !(abs_tol.is_finite() && abs_tol > 0.0) {
            return Err(QuadError::InvalidTolerance);
        }
        Ok(Self {
            scheme,
            node_count,
            upper_cutoff,
            abs_tol,
        })
    }

    pub fn exp_weighted(
        node_count: u32,
        upper_cutoff: f64,
        abs_tol: f64,
    ) -> Result<Self, QuadError> {
        Self::validated(
            QuadratureScheme::ExpWeighted,
            node_count,
            upper_cutoff,
            abs_tol,
        )
    }

    pub fn adaptive(node_count: u32, upper_cutoff: f64, abs_tol: f64) -> Result<Self, QuadError> {
        Self::validated(
            QuadratureScheme::Adaptive,
            node_count,
            upper_cutoff,
            abs_tol,
        )
    }

    /// Default fixed rule: 200 nodes on `[0, 40]`, ample for unit-rate
    /// exponential weights.
    pub fn exp_weighted_default() -> Self {
        Self::exp_weighted(200, 40.0, 1e-10).expect("constants are valid")
    }

    /// Default adaptive rule on `[0, 50]`.
    pub fn adaptive_default() -> Self {
        Self::adaptive(250, 50.0, 1e-8).expect("constants are valid")
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self::exp_weighted_default()
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th root.
        let mut x = (core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by upward recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// `integral_0^cutoff f(s) e^{-s} ds` by composite 10-point Gauss-Legendre,
/// one panel per 10 requested nodes.
///
/// The reported `tail_bound` is a heuristic estimate of the omitted
/// `[cutoff, inf)` piece, sized from the integrand near the cutoff with
/// allowance for linear growth.
pub fn integrate_exp_weighted<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> SeriesValue {
    let panels = (spec.node_count.div_ceil(10)).max(1) as usize;
    let (xs, ws) = gauss_legendre(10);
    let h = spec.upper_cutoff / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = h * (p as f64 + 0.5);
        let half = 0.5 * h;
        let mut acc = 0.0;
        for i in 0..10 {
            let s = mid + half * xs[i];
            acc += ws[i] * f(s) * (-s).exp();
        }
        total += half * acc;
    }
    let c = spec.upper_cutoff;
    let edge = f(c).abs().max(f(0.95 * c).abs());
    SeriesValue {
        value: total,
        tail_bound: 2.0 * (edge + 1.0) * (-c).exp(),
    }
}

/// `integral_a^b f` by adaptive Simpson over `panels` initial panels whose
/// edges cluster quadratically toward `a`.
///
/// The tolerance is split evenly across panels; each panel refines with the
/// standard `(S_left + S_right - S_whole)/15` Richardson test.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    panels: usize,
) -> f64 {
    let panels = panels.max(1);
    let per_panel_tol = abs_tol / panels as f64;
    let mut total = 0.0;
    let mut left = a;
    for j in 1..=panels {
        let frac = j as f64 / panels as f64;
        let right = a + (b - a) * frac * frac;
        total += simpson_panel(f, left, right, per_panel_tol);
        left = right;
    }
    total
}

fn simpson_rule<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
}

fn simpson_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson_rule(f, a, fa, b, fb);
    simpson_recurse(f, a, fa, b, fb, m, fm, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    m: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let (left, lm, flm) = simpson_rule(f, a, fa, m, fm);
    let (right, rm, frm) = simpson_rule(f, m, fm, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
        + simpson_recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_10_point_rule_is_exact_to_degree_19() {
        let (xs, ws) = gauss_legendre(10);
        let wsum: f64 = ws.iter().sum();
        assert_relative_eq!(wsum, 2.0, max_relative = 1e-14);
        for i in 0..10 {
            assert_relative_eq!(xs[i], -xs[9 - i], max_relative = 1e-14);
        }
        // integral_{-1}^1 x^18 dx = 2/19, the hardest even power a 10-point
        // rule must still integrate exactly.
        let got: f64 = (0..10).map(|i| ws[i] * xs[i].powi(18)).sum();
        assert_relative_eq!(got, 2.0 / 19.0, max_relative = 1e-12);
    }

    #[test]
    fn exp_weighted_reproduces_known_laplace_values() {
        let spec = QuadratureSpec::exp_weighted_default();
        // integral_0^inf e^{-s} ds = 1
        let one = integrate_exp_weighted(|_| 1.0, &spec);
        assert_relative_eq!(one.value, 1.0, max_relative = 1e-13);
        // integral_0^inf cos(s) e^{-s} ds = 1/2
        let half = integrate_exp_weighted(|s| s.cos(), &spec);
        assert_relative_eq!(half.value, 0.5, max_relative = 1e-12);
        // integral_0^inf s^3 e^{-s} ds = 6
        let six = integrate_exp_weighted(|s| s.powi(3), &spec);
        assert_relative_eq!(six.value, 6.0, max_relative = 1e-12);
        assert!(one.tail_bound < 1e-15);
    }

    #[test]
    fn adaptive_handles_smooth_and_peaked_integrands() {
        // integral_0^pi sin = 2
        let s = integrate_adaptive(&|x: f64| x.sin(), 0.0, core::f64::consts::PI, 1e-12, 4);
        assert_relative_eq!(s, 2.0, max_relative = 1e-11);
        // Sharply decaying from the left edge: integral_0^50 40 e^{-40x} dx
        let d = integrate_adaptive(&|x: f64| 40.0 * (-40.0 * x).exp(), 0.0, 50.0, 1e-12, 25);
        assert_relative_eq!(d, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn spec_constructors_validate() {
        assert!(QuadratureSpec::exp_weighted(15, 40.0, 1e-10).is_err());
        assert!(QuadratureSpec::adaptive(16, 0.0, 1e-10).is_err());
        assert!(QuadratureSpec::adaptive(16, 40.0, 0.0).is_err());
        assert!(QuadratureSpec::adaptive(16, f64::INFINITY, 1e-8).is_err());
        assert!(QuadratureSpec::exp_weighted(16, 40.0, 1e-10).is_ok());
    }
}
