//! Laplace-transform identities closing the loop between the
//! Levy-Khintchine exponent and hyperbolic tangents.
//!
//! Three quantities computed here, all of which collapse to `tanh` in
//! closed form:
//!
//! - `random_integral_exponent(t)`: the characteristic exponent of the
//!   exponential random integral `integral_0^inf e^{-s} dX_s` of the
//!   compound Poisson process with the unit-mass atom family,
//!   `integral_0^inf E(st) e^{-s} ds`, which equals `-t*tanh(t)`.
//! - `exponent_laplace_lhs(t)`: `i t^2 integral_0^inf E(s) e^{-ts} ds`,
//!   which equals `tan(1/(it)) = -i*tanh(1/t)` for `t > 0`.
//! - `cosh_centered_laplace_lhs(w)`: the cosh-centered cosine transform
//!
//!   ```text
//!   (w^2-1) integral_0^inf e^{-wx} sum_k m({x_k}) (cos(x_k x) - cosh x) dx
//!   ```
//!
//!   over the finite family, which equals `-tanh(1/w)` for `w > 1`. The
//!   `cosh` centering makes each atom's contribution integrable only as a
//!   pair with the others; the sum must be formed per node, never term by
//!   term.
//!
//! `E` is `levy::levy_exponent` of the standard triple, so these evaluators
//! exercise the measure, exponent, and quadrature machinery end to end.

use crate::levy;
use crate::measure;
use crate::quad::{self, QuadratureScheme, QuadratureSpec};
use crate::series::{SeriesValue, TruncationSpec};
use num_complex::Complex64;
#[allow(unused_imports)] // the standalone no_std build resolves f64 math through this trait
use num_traits::Float;

/// Keep `cosh` arguments representable; `cosh(650)` is near the top of the
/// f64 range and anything past it would overflow to infinity.
const MAX_COSH_CUTOFF: f64 = 650.0;

/// Errors from the Laplace evaluators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LaplaceError {
    /// The transform rate (or the identity parameter `t`) must be positive.
    NonPositiveRate { rate: f64 },
    /// The cosh-centered identity only converges for `w > 1`.
    DomainError { w: f64 },
    /// The integrand had not decayed below tolerance by the cutoff, so the
    /// truncated integral certifies nothing.
    Divergent { at: f64, magnitude: f64 },
}

impl core::fmt::Display for LaplaceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::NonPositiveRate { rate } => {
                write!(f, "transform rate {rate} must be positive")
            }
            Self::DomainError { w } => {
                write!(f, "identity parameter w = {w} outside its domain w > 1")
            }
            Self::Divergent { at, magnitude } => {
                write!(
                    f,
                    "integrand still at {magnitude:e} near the cutoff {at}; integral not certified"
                )
            }
        }
    }
}

impl core::error::Error for LaplaceError {}

/// `integral_0^inf f(x) e^{-wx} dx` for `w > 0`.
///
/// With the `ExpWeighted` scheme the integral is mapped to unit rate by
/// substitution and handled by the fixed Gauss-Legendre rule; the cutoff
/// then lives in the substituted variable, so slow decay needs no special
/// care. With the `Adaptive` scheme the integrand is evaluated as given on
/// `[0, upper_cutoff]`, and a `Divergent` error is returned when it has not
/// decayed below `abs_tol` near the cutoff.
pub fn laplace_transform<F: Fn(f64) -> f64>(
    f: F,
    w: f64,
    spec: &QuadratureSpec,
) -> Result<SeriesValue, LaplaceError> {
    if !(w > 0.0) {
        return Err(LaplaceError::NonPositiveRate { rate: w });
    }
    match spec.scheme {
        QuadratureScheme::ExpWeighted => {
            let sub = quad::integrate_exp_weighted(|u| f(u / w), spec);
            Ok(SeriesValue {
                value: sub.value / w,
                tail_bound: sub.tail_bound / w,
            })
        }
        QuadratureScheme::Adaptive => {
            let c = spec.upper_cutoff;
            let h = |x: f64| f(x) * (-w * x).exp();
            let edge = h(c).abs().max(h(0.9 * c).abs());
            if !edge.is_finite() || edge > spec.abs_tol {
                return Err(LaplaceError::Divergent {
                    at: c,
                    magnitude: edge,
                });
            }
            let panels = (spec.node_count.div_ceil(10)).max(1) as usize;
            let value = quad::integrate_adaptive(&h, 0.0, c, spec.abs_tol, panels);
            Ok(SeriesValue {
                value,
                tail_bound: 2.0 * edge / w,
            })
        }
    }
}

/// Characteristic exponent of the exponential random integral
/// `integral_0^inf e^{-s} dX_s`:
///
/// ```text
/// integral_0^inf E(s t) e^{-s} ds   (= -t * tanh(t))
/// ```
///
/// where `E` is the Levy-Khintchine exponent of the unit-mass family at
/// truncation `trunc`. Even in `t` and exactly 0 at `t = 0`.
pub fn random_integral_exponent(t: f64, trunc: &TruncationSpec, spec: &QuadratureSpec) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let triple = levy::standard_triple(trunc);
    let g = |s: f64| levy::levy_exponent(&triple, s * t, trunc).re;
    match spec.scheme {
        QuadratureScheme::ExpWeighted => quad::integrate_exp_weighted(g, spec).value,
        QuadratureScheme::Adaptive => {
            let panels = (spec.node_count.div_ceil(10)).max(1) as usize;
            quad::integrate_adaptive(
                &|s: f64| g(s) * (-s).exp(),
                0.0,
                spec.upper_cutoff,
                spec.abs_tol,
                panels,
            )
        }
    }
}

/// Left side of the exponent transform identity,
///
/// ```text
/// i t^2 integral_0^inf E(s) e^{-ts} ds   (= tan(1/(it)) = -i tanh(1/t))
/// ```
///
/// for `t > 0`. Purely imaginary by construction (the real part is exactly
/// 0). For the `Adaptive` scheme the cutoff is stretched to at least `40/t`
/// so slow decay at small `t` stays covered.
pub fn exponent_laplace_lhs(
    t: f64,
    trunc: &TruncationSpec,
    spec: &QuadratureSpec,
) -> Result<Complex64, LaplaceError> {
    if !(t > 0.0) {
        return Err(LaplaceError::NonPositiveRate { rate: t });
    }
    let mut spec = *spec;
    if spec.scheme == QuadratureScheme::Adaptive {
        spec.upper_cutoff = spec.upper_cutoff.max(40.0 / t);
    }
    let triple = levy::standard_triple(trunc);
    let lap = laplace_transform(|s| levy::levy_exponent(&triple, s, trunc).re, t, &spec)?;
    Ok(Complex64::new(0.0, t * t * lap.value))
}

/// Left side of the cosh-centered cosine transform identity,
///
/// ```text
/// (w^2 - 1) integral_0^inf e^{-wx}
///     [ sum_{k<=N} 2 m({x_k})(cos(x_k x) - cosh x)
///       + tail_mass (1 - cosh x) ] dx        (= -tanh(1/w))
/// ```
///
/// for `w > 1`, over the finite family at truncation `trunc`. The omitted
/// atoms' mass rides on the `cos -> 1` limit of the bracket when the tail
/// correction is enabled. Always integrated adaptively; the cutoff is
/// stretched to at least `30/(w-1)` (capped where `cosh` would overflow,
/// which surfaces as `Divergent` for `w` extremely close to 1).
pub fn cosh_centered_laplace_lhs(
    w: f64,
    trunc: &TruncationSpec,
    spec: &QuadratureSpec,
) -> Result<f64, LaplaceError> {
    if !(w > 1.0) {
        return Err(LaplaceError::DomainError { w });
    }
    let m = measure::representing_measure(trunc);
    let pairs: alloc::vec::Vec<(f64, f64)> = m.positive_atoms_outward().collect();
    let tail_mass = if trunc.tail_correction {
        measure::finite_family_mass_tail(trunc.num_terms)
    } else {
        0.0
    };
    let g = move |x: f64| {
        let ch = x.cosh();
        let mut acc = tail_mass * (1.0 - ch);
        for &(loc, mass) in &pairs {
            acc += 2.0 * mass * ((loc * x).cos() - ch);
        }
        acc
    };
    let mut spec = QuadratureSpec {
        scheme: QuadratureScheme::Adaptive,
        ..*spec
    };
    spec.upper_cutoff = spec
        .upper_cutoff
        .max(30.0 / (w - 1.0))
        .min(MAX_COSH_CUTOFF.max(spec.upper_cutoff));
    let lap = laplace_transform(g, w, &spec)?;
    Ok((w * w - 1.0) * lap.value)
}
