//! Scalar fields, polynomials and exact linear algebra shared by the rest of
//! the workspace.
//!
//! Three scalar types cover every computation in the pipeline:
//!
//! * [`Rat`] — exact rationals (GMP-backed),
//! * [`Qi`] — Gaussian rationals `ℚ(i)`, the default exact field,
//! * [`BigC`] — arbitrary-precision complex floats (MPFR-backed).
//!
//! All of them implement the [`Field`] trait so the polynomial and linear
//! algebra layers can be written once and instantiated both exactly and
//! numerically.

pub use rug;

pub mod bigc;
pub mod factor;
pub mod field;
pub mod gauss;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod recognize;
pub mod roots;

pub use bigc::BigC;
pub use field::Field;
pub use gauss::Qi;
pub use poly::{BiPoly, UniPoly};
pub use rat::Rat;
