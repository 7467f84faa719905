use crate::{DivisorClass, LatticeError};

/// A root of the lattice: either a simple `(−2)`-class orthogonal to `−K`,
/// or a composite `(−4)`-class carrying an explicit orthogonal split into
/// two `(−2)`-classes (splits are not unique, so they are stored, not
/// inferred).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub class: DivisorClass,
    pub split: Option<(DivisorClass, DivisorClass)>,
}

impl Root {
    pub fn simple(class: DivisorClass) -> Result<Self, LatticeError> {
        let r = Root { class, split: None };
        r.validate()?;
        Ok(r)
    }

    pub fn composite(
        class: DivisorClass,
        split: (DivisorClass, DivisorClass),
    ) -> Result<Self, LatticeError> {
        let r = Root {
            class,
            split: Some(split),
        };
        r.validate()?;
        Ok(r)
    }

    pub fn is_composite(&self) -> bool {
        self.split.is_some()
    }

    pub fn validate(&self) -> Result<(), LatticeError> {
        let k = crate::anticanonical();
        if self.class.intersect(&k) != 0 {
            return Err(LatticeError::BadSplit(format!(
                "{} is not orthogonal to -K",
                self.class
            )));
        }
        match &self.split {
            None => {
                if self.class.self_intersection() != -2 {
                    return Err(LatticeError::BadSplit(format!(
                        "simple root {} must have self-intersection -2",
                        self.class
                    )));
                }
            }
            Some((a, b)) => {
                if self.class.self_intersection() != -4 {
                    return Err(LatticeError::BadSplit(format!(
                        "composite root {} must have self-intersection -4",
                        self.class
                    )));
                }
                if *a + *b != self.class {
                    return Err(LatticeError::BadSplit("split does not sum to the root".into()));
                }
                if a.self_intersection() != -2 || b.self_intersection() != -2 {
                    return Err(LatticeError::BadSplit("split parts must be (-2)-classes".into()));
                }
                if a.intersect(b) != 0 {
                    return Err(LatticeError::BadSplit("split parts must be orthogonal".into()));
                }
            }
        }
        Ok(())
    }
}

/// Reflection of a divisor class in a root.
///
/// Simple: `D ↦ D + (r•D)·r`. Composite with split `r = r₁ + r₂`:
/// the product of the two commuting simple reflections,
/// `D ↦ D + (r₁•D)·r₁ + (r₂•D)·r₂`.
pub fn reflect(r: &Root, d: &DivisorClass) -> Result<DivisorClass, LatticeError> {
    match &r.split {
        None => {
            let c = r.class.intersect(d);
            Ok(*d + r.class.scaled(c))
        }
        Some((a, b)) => {
            let ca = a.intersect(d);
            let cb = b.intersect(d);
            Ok(*d + a.scaled(ca) + b.scaled(cb))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DivisorClass as D;

    #[test]
    fn reflect_transposition() {
        // r = E2 − E3 swaps E2 and E3.
        let r = Root::simple(D::e(2) - D::e(3)).unwrap();
        assert_eq!(reflect(&r, &D::e(2)).unwrap(), D::e(3));
        assert_eq!(reflect(&r, &D::e(3)).unwrap(), D::e(2));
        assert_eq!(reflect(&r, &D::e(5)).unwrap(), D::e(5));
    }

    #[test]
    fn reflect_in_conic_root() {
        // r = Hy − E1 − E2 sends Hx to Hx + Hy − E1 − E2.
        let r = Root::simple(D::hy() - D::e(1) - D::e(2)).unwrap();
        assert_eq!(
            reflect(&r, &D::hx()).unwrap(),
            D::hx() + D::hy() - D::e(1) - D::e(2)
        );
    }

    #[test]
    fn reflect_composite() {
        // 2Hy − E1 − E2 − E5 − E6 with split (Hy−E1−E2) + (Hy−E5−E6).
        let class = D::new(0, 2, [-1, -1, 0, 0, -1, -1, 0, 0]);
        let split = (
            D::hy() - D::e(1) - D::e(2),
            D::hy() - D::e(5) - D::e(6),
        );
        let r = Root::composite(class, split).unwrap();
        let img = reflect(&r, &D::hx()).unwrap();
        assert_eq!(img, D::new(1, 2, [-1, -1, 0, 0, -1, -1, 0, 0]));
        // Involution.
        assert_eq!(reflect(&r, &img).unwrap(), D::hx());
    }

    #[test]
    fn composite_without_split_rejected() {
        let class = D::new(0, 2, [-1, -1, 0, 0, -1, -1, 0, 0]);
        assert!(Root::simple(class).is_err());
    }
}
