use crate::{anticanonical, gram_matrix, DivisorClass, LatticeError};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Pullback,
    Pushforward,
}

/// An isometry of the Picard lattice: a 10×10 integer matrix acting on
/// coefficient vectors, preserving the intersection pairing and fixing the
/// anticanonical class. The direction tag records whether the matrix is
/// meant as a pull-back or push-forward action; the two are mutually
/// inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeIsometry {
    m: [[i64; 10]; 10],
    pub direction: Direction,
}

impl LatticeIsometry {
    pub fn identity(direction: Direction) -> Self {
        let mut m = [[0i64; 10]; 10];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        LatticeIsometry { m, direction }
    }

    /// Build from the images of the ten basis classes
    /// `(Hx, Hy, E1, …, E8)`; image `j` becomes column `j`.
    pub fn from_images(images: &[DivisorClass; 10], direction: Direction) -> Result<Self, LatticeError> {
        let mut m = [[0i64; 10]; 10];
        for (j, img) in images.iter().enumerate() {
            for i in 0..10 {
                m[i][j] = img.0[i];
            }
        }
        let iso = LatticeIsometry { m, direction };
        iso.validate()?;
        Ok(iso)
    }

    pub fn from_matrix(m: [[i64; 10]; 10], direction: Direction) -> Result<Self, LatticeError> {
        let iso = LatticeIsometry { m, direction };
        iso.validate()?;
        Ok(iso)
    }

    /// Unchecked constructor for internal compositions known to be valid.

    pub fn matrix(&self) -> &[[i64; 10]; 10] {
        &self.m
    }

    pub fn apply(&self, d: &DivisorClass) -> DivisorClass {
        let mut v = [0i64; 10];
        for (i, row) in self.m.iter().enumerate() {
            let mut acc = 0i64;
            for (j, c) in row.iter().enumerate() {
                acc = crate::checked_add(acc, crate::checked_mul(*c, d.0[j]));
            }
            v[i] = acc;
        }
        DivisorClass(v)
    }

    pub fn compose(&self, rhs: &LatticeIsometry) -> LatticeIsometry {
        let mut m = [[0i64; 10]; 10];
        for i in 0..10 {
            for j in 0..10 {
                let mut acc = 0i64;
                for (k, rrow) in rhs.m.iter().enumerate() {
                    acc = crate::checked_add(acc, crate::checked_mul(self.m[i][k], rrow[j]));
                }
                m[i][j] = acc;
            }
        }
        LatticeIsometry { m, direction: self.direction }
    }

    pub fn pow(&self, e: u32) -> LatticeIsometry {
        let mut acc = LatticeIsometry::identity(self.direction);
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    /// Inverse via `M⁻¹ = G Mᵀ G` (the Gram matrix is an involution).
    /// Flips the direction tag: the inverse of a pull-back is the
    /// push-forward.
    pub fn inverse(&self) -> LatticeIsometry {
        let g = gram_matrix();
        let mut gt = [[0i64; 10]; 10];
        // gt = G · Mᵀ
        for i in 0..10 {
            for j in 0..10 {
                let mut acc = 0;
                for k in 0..10 {
                    acc += g[i][k] * self.m[j][k];
                }
                gt[i][j] = acc;
            }
        }
        let mut inv = [[0i64; 10]; 10];
        for i in 0..10 {
            for j in 0..10 {
                let mut acc = 0;
                for k in 0..10 {
                    acc += gt[i][k] * g[k][j];
                }
                inv[i][j] = acc;
            }
        }
        LatticeIsometry {
            m: inv,
            direction: match self.direction {
                Direction::Pullback => Direction::Pushforward,
                Direction::Pushforward => Direction::Pullback,
            },
        }
    }

    /// Checks `MᵀGM = G` and `M(−K) = −K`.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let g = gram_matrix();
        for a in 0..10 {
            for b in a..10 {
                let ea = DivisorClass::basis(a);
                let eb = DivisorClass::basis(b);
                let lhs = self.apply(&ea).intersect(&self.apply(&eb));
                if lhs != g[a][b] {
                    return Err(LatticeError::NotIsometry);
                }
            }
        }
        let k = anticanonical();
        if self.apply(&k) != k {
            return Err(LatticeError::MovesAnticanonical);
        }
        Ok(())
    }
}

/// JSON schema: `{"matrix": [[10×10 ints]], "direction": "pullback"|"pushforward"}`.
impl Serialize for LatticeIsometry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            matrix: &'a [[i64; 10]; 10],
            direction: Direction,
        }
        Repr { matrix: &self.m, direction: self.direction }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticeIsometry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            matrix: Vec<Vec<i64>>,
            direction: Direction,
        }
        let r = Repr::deserialize(d)?;
        if r.matrix.len() != 10 || r.matrix.iter().any(|row| row.len() != 10) {
            return Err(D::Error::custom("matrix must be 10×10"));
        }
        let mut m = [[0i64; 10]; 10];
        for (i, row) in r.matrix.iter().enumerate() {
            m[i].copy_from_slice(row);
        }
        LatticeIsometry::from_matrix(m, r.direction).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_isometry() {
        let id = LatticeIsometry::identity(Direction::Pullback);
        assert!(id.validate().is_ok());
        assert_eq!(id.inverse().direction, Direction::Pushforward);
    }

    #[test]
    fn serde_roundtrip() {
        let id = LatticeIsometry::identity(Direction::Pushforward);
        let js = serde_json::to_string(&id).unwrap();
        assert!(js.contains("\"direction\":\"pushforward\""));
        let back: LatticeIsometry = serde_json::from_str(&js).unwrap();
        assert_eq!(back, id);
    }
}
