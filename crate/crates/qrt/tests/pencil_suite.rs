//! Oracle-backed integration checks: base points against the dual
//! projection, conserved pencil values along orbits, discriminant order
//! sums on random pencils, and the reduction certificate at two precisions.

use numeric::{BigC, Field, Qi, Rat};
use picard_lattice::anticanonical;
use qrt_core::fibers::fiber_class_sum_numeric;
use qrt_core::half_map::{half_map, horizontal_involution, vertical_involution};
use qrt_core::weierstrass::{schwartz_reduce, y_on_curve};
use qrt_core::{base_points, example_pencil, singular_fibers, BiQuadratic, P1Value, Pencil, ProjPoint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_pencil(rng: &mut StdRng) -> Pencil<Qi> {
    let mut draw = || {
        let mut m = [[Qi::zero(), Qi::zero(), Qi::zero()], [Qi::zero(), Qi::zero(), Qi::zero()], [
            Qi::zero(),
            Qi::zero(),
            Qi::zero(),
        ]];
        for row in m.iter_mut() {
            for c in row.iter_mut() {
                *c = Qi::from_int(rng.gen_range(-9i64..=9));
            }
        }
        BiQuadratic::new(m)
    };
    Pencil::new(draw(), draw())
}

fn transpose(b: &BiQuadratic<Qi>) -> BiQuadratic<Qi> {
    let mut a = b.a.clone();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let t = a[i][j].clone();
            a[i][j] = a[j][i].clone();
            a[j][i] = t;
        }
    }
    BiQuadratic::new(a)
}

/// Dual-projection oracle: solve for base points by eliminating `x` instead
/// of `y` (transpose both matrices, swap coordinates back).
#[test]
fn base_points_match_dual_projection() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut done = 0;
    while done < 8 {
        let p = random_pencil(&mut rng);
        let pb = p.map_coeffs(|c| BigC::from_qi_p(c, 256));
        let Ok(direct) = base_points(&pb) else { continue };
        let swapped = Pencil::new(transpose(&p.a), transpose(&p.b))
            .map_coeffs(|c| BigC::from_qi_p(c, 256));
        let Ok(dual_raw) = base_points(&swapped) else { continue };
        let dual: Vec<ProjPoint<BigC>> = dual_raw
            .into_iter()
            .map(|q| ProjPoint { x: q.y, y: q.x })
            .collect();
        assert_eq!(direct.len(), 8);
        assert_eq!(dual.len(), 8);
        for d in &direct {
            assert!(
                dual.iter().any(|q| q.same_as(d)),
                "point {d} missing from dual projection"
            );
        }
        done += 1;
    }
}

#[test]
fn example_points_annihilate_both_forms_exactly() {
    for a in [Rat::from_int(2), Rat::new(7, 3), Rat::from_int(-5)] {
        let p = example_pencil(a);
        let pts = base_points(&p).unwrap();
        assert_eq!(pts.len(), 8);
        let fa = qrt_core::BiForm::new(p.a.to_poly(), (2, 2));
        let fb = qrt_core::BiForm::new(p.b.to_poly(), (2, 2));
        for pt in &pts {
            assert!(fa.eval_point(pt).is_zero());
            assert!(fb.eval_point(pt).is_zero());
        }
    }
}

/// The pencil value is exactly conserved along the half-map orbit.
#[test]
fn pencil_value_conserved_along_orbit() {
    let p = example_pencil(Rat::from_int(2));
    let m = half_map(&p).unwrap();
    let mut pt = ProjPoint::affine(Qi::from_int(3), Qi::from_int(5));
    let k0 = p.value_at(&pt).unwrap();
    for _ in 0..50 {
        pt = m.apply(&pt).expect("no indeterminacy on this orbit");
        assert_eq!(p.value_at(&pt).unwrap(), k0);
    }
}

/// Sampled points on members reproduce their own parameter.
#[test]
fn member_points_have_member_value() {
    let p = example_pencil(Rat::from_int(2));
    let prec = 192;
    let pb = p.map_coeffs(|c| BigC::from_qi_p(c, prec));
    for t in 1..6 {
        let k = BigC::from_f64_p(0.3 * t as f64 + 0.1, 0.2, prec);
        let member = pb.member_proj(&k, &BigC::from_i64_p(1, prec));
        let x = BigC::from_f64_p(0.7 + 0.13 * t as f64, -0.4, prec);
        let Some(y) = y_on_curve(&member.poly, &x) else {
            continue;
        };
        let got = pb.value_at(&ProjPoint::affine(x, y)).unwrap();
        if let P1Value::Finite(kv) = got {
            assert!((kv - k).approx_mag() < 1e-40);
        } else {
            panic!("finite member expected");
        }
    }
}

/// Discriminant orders over randomized pencils always sum to 12, and
/// single-component fibers carry the anticanonical class.
#[test]
fn random_pencil_fiber_orders_and_classes() {
    let mut rng = StdRng::seed_from_u64(41);
    let mut done = 0;
    while done < 10 {
        let p = random_pencil(&mut rng);
        let Ok(reports) = singular_fibers(&p) else {
            continue;
        };
        let total: usize = reports.iter().map(|r| r.ord_disc).sum();
        assert_eq!(total, 12);
        // Generic random pencils: all twelve fibers are nodal 1-cycles.
        let pb = p.map_coeffs(|c| BigC::from_qi_p(c, 256));
        let Ok(pts) = base_points(&pb) else { continue };
        for r in &reports {
            if r.ord_disc == 1 {
                let (re, im) = r.k_numeric.expect("finite singular value");
                let k = BigC::from_f64_p(re, im, 256);
                let cls = fiber_class_sum_numeric(&p, &k, &pts).unwrap();
                assert_eq!(cls, anticanonical());
            }
        }
        done += 1;
    }
}

/// Reduction certificate at 128 bits: residual far below 1e−30; and a
/// double-precision instantiation stays below 1e−10.
#[test]
fn reduction_certificate_precisions() {
    let p = example_pencil(Rat::from_int(2));
    for (prec, tol) in [(128u32, 1e-30f64), (64u32, 1e-10)] {
        let k = BigC::from_f64_p(1.25, 0.0, prec);
        let member = p
            .map_coeffs(|c| BigC::from_qi_p(c, prec))
            .member_proj(&k, &BigC::from_i64_p(1, prec));
        let red = schwartz_reduce(&member.poly).unwrap();
        let mut samples = 0;
        for t in 1..60 {
            if samples >= 20 {
                break;
            }
            let x = BigC::from_f64_p(0.11 * t as f64 - 2.5, 0.07 * t as f64, prec);
            let Some(y) = y_on_curve(&member.poly, &x) else {
                continue;
            };
            let res = red.certificate_residual(&x, &y).approx_mag();
            if res.is_finite() {
                assert!(res < tol, "residual {res:e} at prec {prec}");
                samples += 1;
            }
        }
        assert!(samples >= 10);
    }
}

/// Cross-check the two Weierstrass routes through the j-invariant: the
/// invariant-based (g2, g3) and the reduction-based ones agree projectively
/// (they differ by a Möbius scaling λ⁴, λ⁶).
#[test]
fn j_invariant_route_agreement() {
    let p = example_pencil(Rat::from_int(2));
    let prec = 256;
    for t in [1i64, 3, -2] {
        let kq = Qi::from_int(t);
        let member_exact = p.member_proj(&kq, &Qi::one());
        let (g2a, g3a, da) = qrt_core::fibers::member_invariants(&member_exact.poly);
        assert!(!da.is_zero());
        let member_num = p
            .map_coeffs(|c| BigC::from_qi_p(c, prec))
            .member_proj(&BigC::from_qi_p(&kq, prec), &BigC::from_i64_p(1, prec));
        let red = schwartz_reduce(&member_num.poly).unwrap();
        let g2b = red.weierstrass.g2.clone();
        let g3b = red.weierstrass.g3.clone();
        let db = red.weierstrass.discriminant.clone();
        let ja = BigC::from_qi_p(&(g2a.clone() * g2a.clone() * g2a / da), prec);
        let jb = g2b.clone() * g2b.clone() * g2b / db;
        assert!(
            (ja.clone() - jb.clone()).approx_mag() < 1e-45 * ja.approx_mag().max(1.0),
            "j mismatch at k={t}: {ja} vs {jb}"
        );
    }
}

/// The involution oracles agree with the map squared on random rational
/// points (exact equality).
#[test]
fn half_map_square_oracle_100_points() {
    let p = example_pencil(Rat::from_int(2));
    let m = half_map(&p).unwrap();
    let mut rng = StdRng::seed_from_u64(9);
    let mut checked = 0;
    while checked < 100 {
        let x0 = Qi::new(
            Rat::new(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=9)),
            Rat::zero(),
        );
        let y0 = Qi::new(
            Rat::new(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=9)),
            Rat::zero(),
        );
        let Some(ybar) = vertical_involution(&p, &x0, &y0) else {
            continue;
        };
        let Some(xbar) = horizontal_involution(&p, &x0, &ybar) else {
            continue;
        };
        let p1 = m.apply(&ProjPoint::affine(x0.clone(), y0.clone()));
        let (Some(p1), ) = (p1, ) else { continue };
        let Some(p2) = m.apply(&p1) else { continue };
        assert!(p2.same_as(&ProjPoint::affine(xbar, ybar)));
        checked += 1;
    }
}
