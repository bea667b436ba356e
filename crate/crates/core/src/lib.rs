//! Numerical realization of the discrete Pick-function representation of
//! `tan(1/z)` and of the infinitely divisible law attached to it.
//!
//! The function `tan(1/z)` is, up to sign, a Pick (Nevanlinna-Herglotz)
//! function of a special kind: it can be written as
//!
//! ```text
//! tan(1/z) = integral (1 + z*x) / (z - x) m(dx)
//! ```
//!
//! where `m` is a purely atomic probability-like measure sitting on the
//! reciprocals of the poles of the tangent, `x = +-2/((2k-1)*pi)`, with
//! masses `x^2/(1+x^2)` and total mass `tanh(1)`. Replacing the masses by 1
//! gives the Levy measure `M` of a symmetric compound Poisson law whose
//! characteristic exponent, Laplace transforms, and exponential random
//! integrals close back onto hyperbolic tangents. The crate computes every
//! side of those identities independently so they can be checked against
//! each other at controlled tolerances:
//!
//! - [`series`]: tail-corrected partial-fraction series for `tanh`, power
//!   tails, and modified Bessel functions `I_k`.
//! - [`measure`]: the atomic measures, their truncations, and closed-form
//!   tail corrections.
//! - [`levy`]: characteristic functions and Levy-Khintchine exponents of
//!   the associated laws.
//! - [`pick`]: the transform `z -> integral (1+z*x)/(z-x) m(dx)` and the
//!   closed form `tan(1/z)` it must reproduce.
//! - [`quad`]: Gauss-Legendre and adaptive Simpson quadrature used by the
//!   integral identities.
//! - [`laplace`]: Laplace-transform identities linking the exponent to
//!   `tanh`, including the characteristic exponent of the exponential
//!   random integral, `t -> -t*tanh(t)`.
//! - [`sample`]: reproducible samplers (Skellam, compound Poisson, the
//!   series-defined random variable `X`) and empirical characteristic
//!   functions.
//!
//! The crate is `no_std` (with `alloc`); transcendentals come from libm via
//! `num-traits`, so results are identical across platforms.

#![no_std]
#![forbid(unsafe_code)]
// Guards like `!(w > 0.0)` are deliberate: they reject NaN along with the
// out-of-domain values, which `w <= 0.0` would wave through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod laplace;
pub mod levy;
pub mod measure;
pub mod pick;
pub mod quad;
pub mod sample;
pub mod series;

pub use num_complex::Complex64;

pub use measure::{Atom, AtomFamily, DiscreteMeasure, LevyTriple, MeasureError};
pub use series::{SeriesValue, TruncationSpec};
