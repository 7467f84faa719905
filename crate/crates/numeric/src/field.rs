use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Common interface of the scalar domains used throughout the workspace.
///
/// Exact fields report zero exactly; floating fields report "negligible
/// relative to a scale" so that rank decisions in the shared linear algebra
/// stay meaningful.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Coarse magnitude used for pivot selection; exactness not required.
    fn approx_mag(&self) -> f64;
    /// Zero test relative to a scale. Exact fields ignore the scale.
    fn is_negligible(&self, scale: f64) -> bool;
    /// True for exact arithmetic (rationals), false for floats.
    const EXACT: bool;
}

/// Sum of a sequence of field elements.
pub fn sum<F: Field>(it: impl IntoIterator<Item = F>) -> F {
    it.into_iter().fold(F::zero(), |a, b| a + b)
}

/// Product of a sequence of field elements.
pub fn product<F: Field>(it: impl IntoIterator<Item = F>) -> F {
    it.into_iter().fold(F::one(), |a, b| a * b)
}
