//! The Pick-type transform of a discrete measure and the closed form
//! `tan(1/z)` it reproduces for the built-in finite family.
//!
//! For a finite measure `m`,
//!
//! ```text
//! P[m](z) = sum_x m({x}) * (1 + z*x) / (z - x)
//! ```
//!
//! With the built-in finite family (masses `x^2/(1+x^2)` at the reciprocal
//! pole locations) this converges to `tan(1/z)` as the truncation deepens.
//! One sign convention matters and is easy to get backwards: each kernel
//! term has `Im = -m({x})*(1+x^2)*Im(z)/|z-x|^2`, so on the upper half-plane
//! the transform takes values in the closed *lower* half-plane. It is the
//! negative of a Herglotz function, exactly as `tan(1/z)` itself is:
//! `Im tan(1/(0.1+i)) = -0.76...`. The half-plane check below asserts that
//! orientation.

use crate::measure::{self, AtomFamily, DiscreteMeasure};
use num_complex::Complex64;
#[allow(unused_imports)] // the standalone no_std build resolves f64 math through this trait
use num_traits::Float;

/// No evaluation is allowed closer than this to an atom of the measure.
pub const ATOM_EXCLUSION_RADIUS: f64 = 1e-6;

/// No evaluation of the closed form is allowed when `1/z` is closer than
/// this to a pole of the tangent.
pub const POLE_EXCLUSION_RADIUS: f64 = 1e-8;

/// Rounding grace for the half-plane orientation check.
const HALF_PLANE_GRACE: f64 = 1e-12;

/// Errors from transform evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PickError {
    /// `z = 0` is outside the domain of both the transform normalization
    /// and `tan(1/z)`.
    ZeroArgument,
    /// The argument is too close to a singular point to evaluate stably;
    /// `nearest` is that singular point.
    PoleProximity { nearest: f64 },
    /// The orientation check only applies to `Im z > 0`.
    NotUpperHalfPlane { im: f64 },
}

impl core::fmt::Display for PickError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::ZeroArgument => write!(f, "evaluation at z = 0 is undefined"),
            Self::PoleProximity { nearest } => {
                write!(f, "argument too close to the singular point at {nearest}")
            }
            Self::NotUpperHalfPlane { im } => {
                write!(f, "half-plane check requires Im z > 0, got {im}")
            }
        }
    }
}

impl core::error::Error for PickError {}

/// Evaluate the transform `sum m({x}) (1 + z*x)/(z - x)`.
///
/// For the built-in finite family with tail correction enabled, the omitted
/// atom pairs are added in closed form, `2 P_2/z + 2 P_4/z^3` with
/// `P_p = sum_{k>N} x_k^p`, provided the truncation is deep enough relative
/// to `|z|` (first omitted atom within `0.1|z|`); otherwise the expansion
/// would not converge and the correction is skipped.
pub fn pick_eval(m: &DiscreteMeasure, z: Complex64) -> Result<Complex64, PickError> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(PickError::ZeroArgument);
    }
    if z.im.abs() < ATOM_EXCLUSION_RADIUS {
        if let Some(nearest) = nearest_atom(m, z.re) {
            let d = (z - Complex64::new(nearest, 0.0)).norm();
            if d < ATOM_EXCLUSION_RADIUS {
                return Err(PickError::PoleProximity { nearest });
            }
        }
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for a in m.atoms() {
        let x = a.location;
        acc += a.mass * (1.0 + z * x) / (z - x);
    }
    if m.truncation().tail_correction && m.family() == AtomFamily::ReciprocalPolesFinite {
        let n = m.truncation().num_terms;
        let first_omitted = 2.0 / ((2 * n + 1) as f64 * core::f64::consts::PI);
        if first_omitted <= 0.1 * z.norm() {
            // Omitted pair at +-x sums to 2 z x^2/(z^2 - x^2) (the unit
            // masses of the kernel numerator survive; the x^2/(1+x^2) mass
            // against (1+x^2) cancels); expand in x/z to two orders.
            let p2 = measure::location_power_tail(n, 2);
            let p4 = measure::location_power_tail(n, 4);
            let inv = z.inv();
            acc += 2.0 * p2 * inv + 2.0 * p4 * inv * inv * inv;
        }
    }
    Ok(acc)
}

/// The closed form `tan(1/z)`, with the same domain policing as the
/// transform: rejects `z = 0` and arguments whose reciprocal falls within
/// `POLE_EXCLUSION_RADIUS` of a tangent pole `(2k-1)pi/2`.
pub fn tan_reciprocal(z: Complex64) -> Result<Complex64, PickError> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(PickError::ZeroArgument);
    }
    let w = z.inv();
    // Nearest odd multiple of pi/2 to Re(w).
    let r = w.re / core::f64::consts::FRAC_PI_2;
    let odd = 2.0 * ((r - 1.0) / 2.0).round() + 1.0;
    let pole = odd * core::f64::consts::FRAC_PI_2;
    if (w - Complex64::new(pole, 0.0)).norm() < POLE_EXCLUSION_RADIUS {
        return Err(PickError::PoleProximity { nearest: pole });
    }
    Ok(w.tan())
}

/// Orientation check: for `Im z > 0`, does the transform land in the closed
/// lower half-plane (up to rounding grace)?
///
/// Returns an error for arguments outside the open upper half-plane and
/// propagates evaluation errors.
pub fn upper_half_plane_check(m: &DiscreteMeasure, z: Complex64) -> Result<bool, PickError> {
    if !(z.im > 0.0) {
        return Err(PickError::NotUpperHalfPlane { im: z.im });
    }
    let v = pick_eval(m, z)?;
    Ok(v.im <= HALF_PLANE_GRACE)
}

fn nearest_atom(m: &DiscreteMeasure, re: f64) -> Option<f64> {
    let atoms = m.atoms();
    if atoms.is_empty() {
        return None;
    }
    let i = atoms.partition_point(|a| a.location < re);
    let mut best = f64::INFINITY;
    let mut nearest = None;
    for j in [i.wrapping_sub(1), i] {
        if let Some(a) = atoms.get(j) {
            let d = (re - a.location).abs();
            if d < best {
                best = d;
                nearest = Some(a.location);
            }
        }
    }
    nearest
}
