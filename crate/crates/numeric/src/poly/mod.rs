//! Dense univariate and bivariate polynomials over a generic field.

mod bi;
mod uni;

pub use bi::BiPoly;
pub use uni::UniPoly;
