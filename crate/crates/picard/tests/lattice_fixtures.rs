//! Fixture checks for the running half-map actions: isometry validation,
//! translation vectors on each root basis, published word compositions, and
//! randomized structural properties.

use picard_lattice::actions::{generic_half_map_pullback, half_map_pullback, half_map_pushforward};
use picard_lattice::basis::{root_basis, BasisLabel};
use picard_lattice::{
    anticanonical, classify_translation, decompose_word, reflect, DivisorClass, Direction,
    LatticeIsometry, Root, TranslationClass,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn compose(parts: &[LatticeIsometry]) -> LatticeIsometry {
    let mut acc = LatticeIsometry::identity(Direction::Pushforward);
    for p in parts {
        acc = acc.compose(p);
    }
    acc
}

#[test]
fn half_map_action_is_isometry() {
    let pb = half_map_pullback();
    assert!(pb.validate().is_ok());
    let pf = half_map_pushforward();
    assert!(pf.validate().is_ok());
    assert_eq!(pb.inverse().matrix(), pf.matrix());
    assert_eq!(pb.apply(&anticanonical()), anticanonical());
}

#[test]
fn translation_vectors() {
    let pb = half_map_pullback();
    let e8 = root_basis(BasisLabel::E8);
    assert_eq!(
        classify_translation(&pb, &e8, 8),
        TranslationClass::TranslationAfterPower(4, vec![0, 2, -2, 1, 0, -1, 0, 1, 0])
    );
    let d5 = root_basis(BasisLabel::D5);
    assert_eq!(
        classify_translation(&pb, &d5, 8),
        TranslationClass::TranslationAfterPower(2, vec![0, 0, -1, 1, 0, 0])
    );
    let d6 = root_basis(BasisLabel::D6);
    let pb2 = pb.compose(&pb);
    assert_eq!(
        classify_translation(&pb2, &d6, 8),
        TranslationClass::Translation(vec![0, 0, -1, 1, 0, 0, 0])
    );
    let e7 = root_basis(BasisLabel::E7);
    assert_eq!(
        classify_translation(&pb, &e7, 8),
        TranslationClass::TranslationAfterPower(4, vec![2, 1, -1, 1, -2, 1, -1, 1])
    );
    // The generic half map squares to a genuine lattice translation.
    let gsq = generic_half_map_pullback().pow(2);
    assert!(matches!(
        classify_translation(&gsq, &e8, 8),
        TranslationClass::Translation(_)
    ));
}

/// The 31-letter reduced word for the push-forward on the nine-root basis,
/// composed outermost-first in the written order.
#[test]
fn word_e8_reproduces_pushforward() {
    let b = root_basis(BasisLabel::E8);
    let letters = [
        6, 5, 4, 3, 2, 0, 3, 4, 5, 6, 7, 8, 5, 4, 3, 2, 0, 3, 4, 5, 6, 7, 6, 0, 2, 3, 4, 0, 3, 1,
        0,
    ];
    let ms: Vec<LatticeIsometry> = letters.iter().map(|&i| b.reflection(i)).collect();
    assert_eq!(compose(&ms).matrix(), half_map_pushforward().matrix());
}

/// Reduced word on the eight-root basis: the diagram flip followed by
/// fifteen reflections (reflection letters composed innermost-first
/// relative to the printed order).
#[test]
fn word_e7_reproduces_pushforward() {
    let b = root_basis(BasisLabel::E7);
    let sigma = b.automorphisms[0].iso.clone();
    let printed = [1, 2, 3, 2, 0, 5, 4, 3, 7, 6, 5, 6, 4, 3, 2];
    let mut parts = vec![sigma];
    parts.extend(printed.iter().rev().map(|&i| b.reflection(i)));
    assert_eq!(compose(&parts).matrix(), half_map_pushforward().matrix());
}

/// Reduced word on the six-root basis: eight reflections then the inverse
/// of the stored 4-cycle automorphism.
#[test]
fn word_d5_reproduces_pushforward() {
    let b = root_basis(BasisLabel::D5);
    let printed = [5, 4, 2, 1, 0, 2, 1, 0];
    let mut parts: Vec<LatticeIsometry> = printed.iter().map(|&i| b.reflection(i)).collect();
    let sigma_inv = b.automorphisms[0].iso.pow(3);
    parts.push(sigma_inv);
    assert_eq!(compose(&parts).matrix(), half_map_pushforward().matrix());
}

/// Reduced words on the seven-root basis for the map and its square.
#[test]
fn words_d6_reproduce_pushforwards() {
    let b = root_basis(BasisLabel::D6);
    let s1 = b.automorphisms[0].iso.clone();
    // Map itself: printed reflections innermost-first, then one 4-cycle.
    let printed = [6, 5, 3, 2, 1, 0, 2, 1, 0];
    let mut parts: Vec<LatticeIsometry> =
        printed.iter().rev().map(|&i| b.reflection(i)).collect();
    parts.push(s1.clone());
    let pf = half_map_pushforward();
    assert_eq!(compose(&parts).matrix(), pf.matrix());
    // Square: flip automorphism outermost, printed reflections
    // innermost-first.
    let printed2 = [3, 4, 6, 5, 4, 3, 2, 1, 0, 2];
    let mut parts2 = vec![s1.pow(2)];
    parts2.extend(printed2.iter().rev().map(|&i| b.reflection(i)));
    assert_eq!(compose(&parts2).matrix(), pf.compose(&pf).matrix());
}

/// On the three-A1 basis the pull-back action factors through the swap
/// automorphism composed with the composite reflection in the first root.
#[test]
fn a1x3_pullback_factorization() {
    let b = root_basis(BasisLabel::A1x3);
    let sigma = b.automorphisms[0].iso.clone();
    let w0 = b.reflection(0);
    let m = sigma.compose(&w0);
    assert_eq!(m.matrix(), half_map_pullback().matrix());
}

#[test]
fn decompose_half_map_on_all_bases() {
    let pf = half_map_pushforward();
    for label in [
        BasisLabel::E8,
        BasisLabel::E7,
        BasisLabel::D5,
        BasisLabel::D6,
        BasisLabel::A1x3,
    ] {
        let b = root_basis(label);
        let w = decompose_word(&pf, &b).unwrap_or_else(|e| panic!("{label}: {e}"));
        assert_eq!(w.compose(&b).matrix(), pf.matrix(), "{label}");
    }
}

fn random_class(rng: &mut StdRng) -> DivisorClass {
    let dx = rng.gen_range(-3..=3);
    let dy = rng.gen_range(-3..=3);
    let mut m = [0i64; 8];
    for v in &mut m {
        *v = rng.gen_range(-3..=3);
    }
    DivisorClass::new(dx, dy, m)
}

/// Every sampled reflection preserves the pairing exactly and is an
/// involution.
#[test]
fn reflections_preserve_pairing() {
    let mut rng = StdRng::seed_from_u64(7);
    let bases: Vec<_> = [
        BasisLabel::E8,
        BasisLabel::E7,
        BasisLabel::D5,
        BasisLabel::D6,
        BasisLabel::A1x3,
    ]
    .iter()
    .map(|&l| root_basis(l))
    .collect();
    for trial in 0..100 {
        let b = &bases[trial % bases.len()];
        let i = rng.gen_range(0..b.rank());
        let r = &b.roots[i];
        let d1 = random_class(&mut rng);
        let d2 = random_class(&mut rng);
        let rd1 = reflect(r, &d1).unwrap();
        let rd2 = reflect(r, &d2).unwrap();
        assert_eq!(rd1.intersect(&rd2), d1.intersect(&d2));
        assert_eq!(reflect(r, &rd1).unwrap(), d1);
    }
}

/// Random words over the extended group recompose after decomposition.
#[test]
fn random_words_recompose() {
    let mut rng = StdRng::seed_from_u64(2024);
    let bases: Vec<_> = [
        BasisLabel::E8,
        BasisLabel::E7,
        BasisLabel::D5,
        BasisLabel::D6,
        BasisLabel::A1x3,
    ]
    .iter()
    .map(|&l| root_basis(l))
    .collect();
    for trial in 0..100 {
        let b = &bases[trial % bases.len()];
        let len = rng.gen_range(0..=12);
        let mut m = LatticeIsometry::identity(Direction::Pushforward);
        for _ in 0..len {
            if !b.automorphisms.is_empty() && rng.gen_ratio(1, 5) {
                let g = rng.gen_range(0..b.automorphisms.len());
                m = m.compose(&b.automorphisms[g].iso);
            } else {
                let i = rng.gen_range(0..b.rank());
                m = m.compose(&b.reflection(i));
            }
        }
        let w = decompose_word(&m, b).unwrap_or_else(|e| panic!("{}: {e}", b.label));
        assert_eq!(w.compose(b).matrix(), m.matrix(), "{} trial {trial}", b.label);
    }
}

/// An isometry moving the root span out of itself is rejected.
#[test]
fn decompose_rejects_non_stabilizing() {
    // Reflection in an E8-basis root does not stabilize the D5 span.
    let e8 = root_basis(BasisLabel::E8);
    let d5 = root_basis(BasisLabel::D5);
    let m = e8.reflection(3);
    let err = decompose_word(&m, &d5);
    assert!(err.is_err());
}

#[test]
fn isometry_json_schema() {
    let pb = half_map_pullback();
    let js = serde_json::to_value(&pb).unwrap();
    assert_eq!(js["direction"], "pullback");
    assert_eq!(js["matrix"].as_array().unwrap().len(), 10);
    let back: LatticeIsometry = serde_json::from_value(js).unwrap();
    assert_eq!(back, pb);
}

#[test]
fn anticanonical_orthogonal_to_roots() {
    let k = anticanonical();
    let e8 = root_basis(BasisLabel::E8);
    for r in &e8.roots {
        assert_eq!(k.intersect(&r.class), 0);
    }
    // A couple of the tabulated reflection examples.
    let alpha3 = Root::simple(DivisorClass::e(2) - DivisorClass::e(3)).unwrap();
    assert_eq!(reflect(&alpha3, &DivisorClass::e(2)).unwrap(), DivisorClass::e(3));
    let alpha2 =
        Root::simple(DivisorClass::hy() - DivisorClass::e(1) - DivisorClass::e(2)).unwrap();
    assert_eq!(
        reflect(&alpha2, &DivisorClass::hx()).unwrap(),
        DivisorClass::hx() + DivisorClass::hy() - DivisorClass::e(1) - DivisorClass::e(2)
    );
}
