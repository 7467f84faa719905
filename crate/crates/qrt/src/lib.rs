//! QRT pencils of bi-quadratic curves on `P¹×P¹`: base points, the
//! half map `σ_xy ∘ r_y`, conserved pencil values, reduction to Weierstrass
//! normal form, and singular-fiber location and typing.

pub mod base_points;
pub mod fibers;
pub mod field_ext;
pub mod half_map;
pub mod ratmap;
pub mod types;
pub mod weierstrass;

pub use base_points::base_points;
pub use fibers::{fiber_components, singular_fibers, FiberComponent, FiberReport, Kodaira};
pub use field_ext::PencilField;
pub use half_map::half_map;
pub use ratmap::{FactorTerm, FactoredCoordinate, FactoredRationalMap};
pub use types::{example_pencil, BiForm, BiQuadratic, P1Value, Pencil, ProjPoint};
pub use weierstrass::{schwartz_reduce, SchwartzReduction, WeierstrassForm};

/// Errors surfaced by pencil computations.
#[derive(Debug, thiserror::Error)]
pub enum PencilError {
    #[error("pencil is degenerate: {0}")]
    Degenerate(String),
    #[error("base point configuration is infinitely near (x-multiplicity {mult} exceeds the {count} transversal points found)")]
    InfinitelyNear { mult: usize, count: usize },
    #[error("fewer than 8 distinct base points")]
    TooFewBasePoints,
    #[error("roots required for this operation lie outside the exact field; use a floating instantiation")]
    RootsOutsideField,
    #[error("point is a base point; the pencil value is indeterminate there")]
    IndeterminatePencilValue,
    #[error("curve has no usable normalization points (finite points on y=0 and y=∞ are required)")]
    NormalizationPointsUnavailable,
    #[error("curve is degenerate for the normal-form reduction: {0}")]
    DegenerateReduction(String),
    #[error("unsupported Kodaira type at {at}: discriminant order {ord}")]
    UnsupportedKodaira { at: String, ord: usize },
    #[error("could not classify fiber at {0}: no factorization and no node found")]
    UnclassifiedFiber(String),
    #[error("root finding failed: residual {0:e}")]
    RootFinding(f64),
}
