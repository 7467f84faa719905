use crate::field_ext::PencilField;
use crate::types::{P1Value, Pencil, ProjPoint};
use crate::PencilError;
use numeric::poly::UniPoly;
use numeric::Field;

/// The eight base points of a pencil: common zeros of the two bi-quadratic
/// forms, required to be transversal (no infinitely-near configurations).
///
/// The x-coordinates come from the resultant in `y` of the two forms (a
/// degree-8 binary form in `x`, with degree drop counting roots at `x=∞`);
/// `y`-coordinates are recovered from the gcd of the two restricted
/// `y`-quadratics on each vertical line.
pub fn base_points<F: PencilField>(pencil: &Pencil<F>) -> Result<Vec<ProjPoint<F>>, PencilError> {
    if pencil.a.is_zero() || pencil.b.is_zero() {
        return Err(PencilError::Degenerate("a pencil generator is zero".into()));
    }
    let fa = pencil.a.y_quadratic();
    let fb = pencil.b.y_quadratic();
    let res = resultant_of_quadratics(&fa, &fb);
    if res.is_zero() {
        return Err(PencilError::Degenerate(
            "the two forms share a common component".into(),
        ));
    }
    let affine_deg = res.degree().unwrap_or(0);
    if affine_deg > 8 {
        return Err(PencilError::Degenerate("resultant degree exceeds 8".into()));
    }
    let inf_mult = 8 - affine_deg;
    let roots = F::poly_roots(&res).ok_or(PencilError::RootsOutsideField)?;
    let mut points: Vec<ProjPoint<F>> = Vec::new();
    for (x0, mult) in roots {
        let found = points_on_vertical(pencil, &P1Value::Finite(x0), &mut points)?;
        if found != mult {
            return Err(PencilError::InfinitelyNear { mult, count: found });
        }
    }
    if inf_mult > 0 {
        let found = points_on_vertical(pencil, &P1Value::Infinity, &mut points)?;
        if found != inf_mult {
            return Err(PencilError::InfinitelyNear {
                mult: inf_mult,
                count: found,
            });
        }
    }
    if points.len() != 8 {
        return Err(PencilError::TooFewBasePoints);
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].same_as(&points[j]) {
                return Err(PencilError::TooFewBasePoints);
            }
        }
    }
    Ok(points)
}

/// Common `y`-roots of the two forms restricted to a vertical line; pushes
/// the points found and returns how many there were.
fn points_on_vertical<F: PencilField>(
    pencil: &Pencil<F>,
    x0: &P1Value<F>,
    out: &mut Vec<ProjPoint<F>>,
) -> Result<usize, PencilError> {
    let (hx0, hx1) = x0.homogeneous();
    let restrict = |q: &[UniPoly<F>; 3]| -> UniPoly<F> {
        // Coefficients of y², y, 1 evaluated homogeneously at [X0:X1].
        UniPoly::new(vec![
            q[2].eval_proj(&hx0, &hx1, 2),
            q[1].eval_proj(&hx0, &hx1, 2),
            q[0].eval_proj(&hx0, &hx1, 2),
        ])
    };
    let qa = restrict(&pencil.a.y_quadratic());
    let qb = restrict(&pencil.b.y_quadratic());
    // A generator may contain the whole line (a degenerate member); the
    // base points on it are then cut by the other generator alone.
    let (g, inf_common) = if qa.is_zero() && qb.is_zero() {
        return Err(PencilError::Degenerate(
            "a vertical line lies in the base locus".into(),
        ));
    } else if qa.is_zero() {
        (qb.monic(), 2 - qb.degree().unwrap())
    } else if qb.is_zero() {
        (qa.monic(), 2 - qa.degree().unwrap())
    } else {
        // Common roots at y = ∞: both restricted quadratics drop degree.
        let inf = (2 - qa.degree().unwrap()).min(2 - qb.degree().unwrap());
        (gcd_with_tolerance(&qa, &qb), inf)
    };
    let mut count = 0usize;
    if let Some(d) = g.degree() {
        if d > 0 {
            let roots = F::poly_roots(&g).ok_or(PencilError::RootsOutsideField)?;
            for (y0, m) in roots {
                if m > 1 {
                    // A repeated common root means tangency, i.e. an
                    // infinitely-near configuration.
                    return Err(PencilError::InfinitelyNear { mult: m, count: 1 });
                }
                out.push(ProjPoint::from_values(x0.clone(), P1Value::Finite(y0)));
                count += 1;
            }
        }
    }
    if inf_common > 0 {
        out.push(ProjPoint::from_values(x0.clone(), P1Value::Infinity));
        count += inf_common;
    }
    Ok(count)
}

/// Euclidean gcd that treats negligible remainders as zero (exact fields
/// are unaffected).
fn gcd_with_tolerance<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
    let scale = a
        .coeffs
        .iter()
        .chain(b.coeffs.iter())
        .map(|c| c.approx_mag())
        .fold(1e-30, f64::max);
    let clean = |p: UniPoly<F>| -> UniPoly<F> {
        let mut c = p.coeffs;
        while c.last().is_some_and(|v| v.is_negligible(scale)) {
            c.pop();
        }
        UniPoly::new(c)
    };
    let mut x = clean(a.clone());
    let mut y = clean(b.clone());
    while !y.is_zero() {
        let (_, r) = x.divrem(&y);
        x = y;
        y = clean(r);
    }
    if x.is_zero() {
        x
    } else {
        x.monic()
    }
}

/// Resultant in `y` of two `y`-quadratics with polynomial coefficients:
/// the 4×4 Sylvester determinant, expanded by permutations over the
/// coefficient ring `F[x]`. Inputs are ordered `[coeff of y², y, 1]`.
fn resultant_of_quadratics<F: Field>(u: &[UniPoly<F>; 3], v: &[UniPoly<F>; 3]) -> UniPoly<F> {
    // y-quadratic f = f2 y² + f1 y + f0 with f2 = u[0], f1 = u[1], f0 = u[2].
    let (f2, f1, f0) = (&u[0], &u[1], &u[2]);
    let (g2, g1, g0) = (&v[0], &v[1], &v[2]);
    let zero = UniPoly::<F>::zero();
    let rows = [
        [f2.clone(), f1.clone(), f0.clone(), zero.clone()],
        [zero.clone(), f2.clone(), f1.clone(), f0.clone()],
        [g2.clone(), g1.clone(), g0.clone(), zero.clone()],
        [zero.clone(), g2.clone(), g1.clone(), g0.clone()],
    ];
    det4(&rows)
}

fn det4<F: Field>(m: &[[UniPoly<F>; 4]; 4]) -> UniPoly<F> {
    // Permutation expansion: 24 terms of degree ≤ 8.
    const PERMS: [([usize; 4], i64); 24] = [
        ([0, 1, 2, 3], 1),
        ([0, 1, 3, 2], -1),
        ([0, 2, 1, 3], -1),
        ([0, 2, 3, 1], 1),
        ([0, 3, 1, 2], 1),
        ([0, 3, 2, 1], -1),
        ([1, 0, 2, 3], -1),
        ([1, 0, 3, 2], 1),
        ([1, 2, 0, 3], 1),
        ([1, 2, 3, 0], -1),
        ([1, 3, 0, 2], -1),
        ([1, 3, 2, 0], 1),
        ([2, 0, 1, 3], 1),
        ([2, 0, 3, 1], -1),
        ([2, 1, 0, 3], -1),
        ([2, 1, 3, 0], 1),
        ([2, 3, 0, 1], 1),
        ([2, 3, 1, 0], -1),
        ([3, 0, 1, 2], -1),
        ([3, 0, 2, 1], 1),
        ([3, 1, 0, 2], 1),
        ([3, 1, 2, 0], -1),
        ([3, 2, 0, 1], -1),
        ([3, 2, 1, 0], 1),
    ];
    let mut acc = UniPoly::zero();
    for (perm, sign) in PERMS {
        let mut term = UniPoly::constant(F::from_i64(sign));
        for (r, &c) in perm.iter().enumerate() {
            if m[r][c].is_zero() {
                term = UniPoly::zero();
                break;
            }
            term = term * m[r][c].clone();
        }
        acc = acc + term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{example_base_points, example_pencil};
    use numeric::{Qi, Rat};

    #[test]
    fn example_base_points_found() {
        let p = example_pencil(Rat::from_int(2));
        let pts = base_points(&p).unwrap();
        assert_eq!(pts.len(), 8);
        let expected = example_base_points(Rat::from_int(2));
        for e in &expected {
            assert!(pts.iter().any(|q| q.same_as(e)), "missing {e}");
        }
    }

    #[test]
    fn resultant_matches_product_formula() {
        // f = (y-1)(y-2) = y² -3y + 2, g = (y-1)(y-5): common root → Res = 0.
        let c = |n: i64| UniPoly::constant(Qi::from_int(n));
        let f = [c(1), c(-3), c(2)];
        let g = [c(1), c(-6), c(5)];
        let r = resultant_of_quadratics(&f, &g);
        assert!(r.is_zero());
        // Disjoint roots → nonzero.
        let g2 = [c(1), c(-7), c(12)];
        let r2 = resultant_of_quadratics(&f, &g2);
        assert!(!r2.is_zero());
    }
}
