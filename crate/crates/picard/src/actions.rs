//! Lattice actions of the running QRT half-map examples, used as fixtures
//! across the workspace and exposed to the CLI.

use crate::isometry::{Direction, LatticeIsometry};
use crate::DivisorClass;

fn d(dx: i64, dy: i64, m: [i64; 8]) -> DivisorClass {
    DivisorClass::new(dx, dy, m)
}

/// Pull-back action of the symmetric-pencil half map on the Picard lattice:
/// `H̄x ↦ 2Hx+Hy−E3−E4−E7−E8, H̄y ↦ Hx, Ē1 ↦ Hx−E3, …`.
pub fn half_map_pullback() -> LatticeIsometry {
    let hx = DivisorClass::hx();
    let e = DivisorClass::e;
    let images = [
        d(2, 1, [0, 0, -1, -1, 0, 0, -1, -1]),
        hx,
        hx - e(3),
        hx - e(4),
        e(2),
        e(1),
        hx - e(7),
        hx - e(8),
        e(6),
        e(5),
    ];
    LatticeIsometry::from_images(&images, Direction::Pullback).expect("tabulated isometry")
}

/// Push-forward action of the symmetric-pencil half map (the inverse of
/// [`half_map_pullback`]): `Hx ↦ Hy, Hy ↦ Hx+2Hy−E1−E2−E5−E6, E1 ↦ E4, …`.
pub fn half_map_pushforward() -> LatticeIsometry {
    let hy = DivisorClass::hy();
    let e = DivisorClass::e;
    let images = [
        hy,
        d(1, 2, [-1, -1, 0, 0, -1, -1, 0, 0]),
        e(4),
        e(3),
        hy - e(1),
        hy - e(2),
        e(8),
        e(7),
        hy - e(5),
        hy - e(6),
    ];
    LatticeIsometry::from_images(&images, Direction::Pushforward).expect("tabulated isometry")
}

/// Pull-back action of the half map of a generic QRT pencil:
/// `H̄x ↦ 4Hx+Hy−ΣEi, H̄y ↦ Hx, Ēi ↦ Hx−Ei`.
pub fn generic_half_map_pullback() -> LatticeIsometry {
    let hx = DivisorClass::hx();
    let mut images = [DivisorClass::ZERO; 10];
    images[0] = d(4, 1, [-1; 8]);
    images[1] = hx;
    for i in 1..=8 {
        images[i + 1] = hx - DivisorClass::e(i);
    }
    LatticeIsometry::from_images(&images, Direction::Pullback).expect("tabulated isometry")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pullback_pushforward_inverse() {
        let pb = half_map_pullback();
        let pf = half_map_pushforward();
        assert_eq!(pb.inverse(), pf);
        assert_eq!(pf.inverse(), pb);
    }

    #[test]
    fn generic_action_is_isometry() {
        let g = generic_half_map_pullback();
        assert!(g.validate().is_ok());
        // Its square is a genuine translation on the full lattice roots.
        let sq = g.pow(2);
        let basis = crate::basis::root_basis(crate::basis::BasisLabel::E8);
        let cls = crate::word::classify_translation(&sq, &basis, 8);
        assert!(matches!(cls, crate::word::TranslationClass::Translation(_)));
    }
}
