//! Exact integer arithmetic on the Picard lattice of an 8-point blowup of
//! `P¹×P¹`: the rank-10 lattice `Z·Hx ⊕ Z·Hy ⊕ Z·E1..E8` with intersection
//! pairing `Hx•Hy = 1`, `Ei•Ej = −δij`, everything else zero.
//!
//! The crate provides divisor classes, roots (simple and composite),
//! lattice isometries, named affine root bases with their diagram
//! automorphisms, translation detection, and greedy Weyl-word decomposition.

pub mod actions;
pub mod basis;
pub mod isometry;
pub mod root;
pub mod word;

pub use basis::{root_basis, BasisLabel, RootBasis};
pub use isometry::{Direction, LatticeIsometry};
pub use root::{reflect, Root};
pub use word::{classify_translation, decompose_word, Letter, TranslationClass, Word};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Errors surfaced by lattice operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix does not preserve the intersection pairing")]
    NotIsometry,
    #[error("matrix does not fix the anticanonical class")]
    MovesAnticanonical,
    #[error("composite root is missing its orthogonal split")]
    MissingSplit,
    #[error("composite root split is invalid: {0}")]
    BadSplit(String),
    #[error("unknown root basis label {0:?}")]
    UnknownLabel(String),
    #[error("isometry does not stabilize the span of the root basis")]
    DoesNotStabilize,
    #[error("word reduction did not terminate")]
    ReductionDiverged,
    #[error("residual isometry is not a diagram automorphism of the basis")]
    NotInExtendedGroup,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("lattice coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("lattice coefficient overflow")
}

/// Divisor class `d_x·Hx + d_y·Hy + m_1·E1 + … + m_8·E8`, stored as the
/// signed coefficient vector `(d_x, d_y, m_1, …, m_8)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass(pub [i64; 10]);

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass([0; 10]);

    pub fn new(dx: i64, dy: i64, m: [i64; 8]) -> Self {
        let mut v = [0i64; 10];
        v[0] = dx;
        v[1] = dy;
        v[2..].copy_from_slice(&m);
        DivisorClass(v)
    }

    pub fn hx() -> Self {
        Self::basis(0)
    }

    pub fn hy() -> Self {
        Self::basis(1)
    }

    /// The exceptional class `E_i`, 1-based to match the usual labels.
    pub fn e(i: usize) -> Self {
        assert!((1..=8).contains(&i), "exceptional index out of range");
        Self::basis(i + 1)
    }

    pub fn basis(idx: usize) -> Self {
        let mut v = [0i64; 10];
        v[idx] = 1;
        DivisorClass(v)
    }

    pub fn dx(&self) -> i64 {
        self.0[0]
    }

    pub fn dy(&self) -> i64 {
        self.0[1]
    }

    /// Coefficient of `E_i` (1-based).
    pub fn m(&self, i: usize) -> i64 {
        self.0[i + 1]
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut v = [0i64; 10];
        for (o, a) in v.iter_mut().zip(self.0.iter()) {
            *o = checked_mul(*a, k);
        }
        DivisorClass(v)
    }

    /// Intersection pairing with the fixed Gram form.
    pub fn intersect(&self, other: &DivisorClass) -> i64 {
        let mut acc = checked_add(
            checked_mul(self.0[0], other.0[1]),
            checked_mul(self.0[1], other.0[0]),
        );
        for i in 2..10 {
            acc = checked_add(acc, -checked_mul(self.0[i], other.0[i]));
        }
        acc
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    /// Is this a multiple `c·(−K)`? Returns `c` if so.
    pub fn as_anticanonical_multiple(&self) -> Option<i64> {
        let k = anticanonical();
        if self.0[0] % 2 != 0 {
            return None;
        }
        let c = self.0[0] / 2;
        if *self == k.scaled(c) {
            Some(c)
        } else {
            None
        }
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            "Hx", "Hy", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8",
        ];
        let mut first = true;
        for (c, n) in self.0.iter().zip(names.iter()) {
            if *c == 0 {
                continue;
            }
            if first {
                if *c == 1 {
                    write!(f, "{n}")?;
                } else if *c == -1 {
                    write!(f, "-{n}")?;
                } else {
                    write!(f, "{c}{n}")?;
                }
                first = false;
            } else if *c == 1 {
                write!(f, "+{n}")?;
            } else if *c == -1 {
                write!(f, "-{n}")?;
            } else if *c > 0 {
                write!(f, "+{c}{n}")?;
            } else {
                write!(f, "{c}{n}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        let mut v = [0i64; 10];
        for i in 0..10 {
            v[i] = checked_add(self.0[i], rhs.0[i]);
        }
        DivisorClass(v)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scaled(-1)
    }
}

/// The anticanonical class `−K = 2Hx + 2Hy − E1 − … − E8`.
pub fn anticanonical() -> DivisorClass {
    DivisorClass::new(2, 2, [-1; 8])
}

/// The Gram matrix of the intersection form in the standard basis.
pub fn gram_matrix() -> [[i64; 10]; 10] {
    let mut g = [[0i64; 10]; 10];
    g[0][1] = 1;
    g[1][0] = 1;
    for (i, row) in g.iter_mut().enumerate().skip(2) {
        row[i] = -1;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_table() {
        assert_eq!(DivisorClass::hx().intersect(&DivisorClass::hy()), 1);
        assert_eq!(DivisorClass::hx().intersect(&DivisorClass::hx()), 0);
        assert_eq!(DivisorClass::e(1).intersect(&DivisorClass::e(1)), -1);
        assert_eq!(DivisorClass::e(1).intersect(&DivisorClass::e(2)), 0);
        assert_eq!(DivisorClass::hx().intersect(&DivisorClass::e(3)), 0);
    }

    #[test]
    fn anticanonical_class() {
        let k = anticanonical();
        assert_eq!(k, DivisorClass::new(2, 2, [-1; 8]));
        assert_eq!(k.intersect(&k), 0);
    }
}
