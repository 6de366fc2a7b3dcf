//! Numerical toolkit for Fourier frames and spectral gaps.
//!
//! The crate evaluates exponential frame functionals of the unit-interval
//! Lebesgue measure with Hurwitz-zeta truncation tails, computes gap and
//! density statistics of periodic frequency sets, checks the gap/frame-bound
//! inequalities on explicit witnesses, and builds (or refuses to build)
//! orthogonal exponential bases for additive measures of Lebesgue type.
//!
//! Module map:
//! - [`specfun`]: sinc, `ζ(2, x)`, its inverse, `x·ζ(2, x)`, the tangent fixed point
//! - [`measures`]: closed-form Fourier transforms and zero-set membership
//! - [`pointsets`]: exact frequency-set descriptors and gap statistics
//! - [`frames`]: frame functionals, probe bounds, spectrum verification
//! - [`theorems`]: executable gap/frame-bound inequality checks
//! - [`additive`]: spectra of additive measures and the Plus-space report
//! - [`cli`]: descriptor parsing and deterministic CSV/JSON output

#![forbid(unsafe_code)]
// `!(x > 0.0)` style guards also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// tests compare against published decimal values
#![cfg_attr(test, allow(clippy::approx_constant))]

pub mod additive;
pub mod cli;
pub mod error;
pub mod frames;
pub mod measures;
pub mod pointsets;
pub mod rng;
pub mod roots;
pub mod specfun;
pub mod sum;
pub mod theorems;

pub use error::{Error, Result};
pub use measures::{Complex, Measure};
pub use pointsets::{GapStats, PointSet1D, PointSet2D};
pub use specfun::EvalPolicy;
