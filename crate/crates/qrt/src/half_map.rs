use crate::base_points::base_points;
use crate::ratmap::{FactorTerm, FactoredCoordinate, FactoredRationalMap};
use crate::types::{BiForm, Pencil, ProjPoint};
use crate::PencilError;
use numeric::factor::factor_bi;
use numeric::poly::{BiPoly, UniPoly};
use numeric::{Field, Qi};
use picard_lattice::DivisorClass;

/// The half map `φ = σ_xy ∘ r_y` of a pencil, in factored form:
/// `x̄ = (f1(x) − f2(x)·y) / (f2(x) − f3(x)·y)`, `ȳ = x`, where
/// `[f1, f2, f3] = (xᵀA) × (xᵀB)`. Common factors of the two coordinates
/// are cancelled and every irreducible factor is tagged with its divisor
/// class when the base points are transversal.
pub fn half_map(pencil: &Pencil<Qi>) -> Result<FactoredRationalMap<Qi>, PencilError> {
    let pts = base_points(pencil).ok();
    half_map_impl(pencil, pts.as_deref())
}

/// [`half_map`] with an explicit base-point labeling `p1..p8`, so factor
/// class tags use the caller's exceptional-divisor indexing.
pub fn half_map_with_points(
    pencil: &Pencil<Qi>,
    pts: &[ProjPoint<Qi>],
) -> Result<FactoredRationalMap<Qi>, PencilError> {
    half_map_impl(pencil, Some(pts))
}

fn half_map_impl(
    pencil: &Pencil<Qi>,
    pts: Option<&[ProjPoint<Qi>]>,
) -> Result<FactoredRationalMap<Qi>, PencilError> {
    let u = pencil.a.y_quadratic();
    let v = pencil.b.y_quadratic();
    // Cross product with components ordered [y², y, 1].
    let f1 = u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone();
    let f2 = u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone();
    let f3 = u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone();
    let y = BiPoly::y();
    let num = BiPoly::from_unipoly_x(&f1) - BiPoly::from_unipoly_x(&f2) * y.clone();
    let den = BiPoly::from_unipoly_x(&f2) - BiPoly::from_unipoly_x(&f3) * y;
    if den.is_zero() {
        return Err(PencilError::Degenerate(
            "half-map denominator vanishes identically".into(),
        ));
    }
    if num.is_zero() {
        return Err(PencilError::Degenerate(
            "half-map numerator vanishes identically".into(),
        ));
    }
    let x = cancelled_coordinate(&num, &den, pts);
    let y_coord = FactoredCoordinate {
        constant: Some(Qi::one()),
        numerator: vec![term_with_class(BiForm::new(BiPoly::x(), (1, 0)), 1, pts)],
        denominator: vec![],
    };
    Ok(FactoredRationalMap { x, y: y_coord })
}

/// Factor numerator and denominator, cancel shared irreducible factors and
/// tag classes against the base points.
fn cancelled_coordinate(
    num: &BiPoly<Qi>,
    den: &BiPoly<Qi>,
    pts: Option<&[ProjPoint<Qi>]>,
) -> FactoredCoordinate<Qi> {
    let fn_ = factor_bi(num);
    let fd = factor_bi(den);
    let mut nterms: Vec<(BiPoly<Qi>, usize)> = fn_.factors.clone();
    if fn_.x_power > 0 {
        nterms.push((BiPoly::x(), fn_.x_power));
    }
    if fn_.y_power > 0 {
        nterms.push((BiPoly::y(), fn_.y_power));
    }
    let mut dterms: Vec<(BiPoly<Qi>, usize)> = fd.factors.clone();
    if fd.x_power > 0 {
        dterms.push((BiPoly::x(), fd.x_power));
    }
    if fd.y_power > 0 {
        dterms.push((BiPoly::y(), fd.y_power));
    }
    // Cancel common irreducible factors.
    for (np, nm) in nterms.iter_mut() {
        for (dp, dm) in dterms.iter_mut() {
            if *nm > 0 && *dm > 0 && np == dp {
                let c = (*nm).min(*dm);
                *nm -= c;
                *dm -= c;
            }
        }
    }
    let build = |terms: &[(BiPoly<Qi>, usize)]| -> Vec<FactorTerm<Qi>> {
        terms
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(p, m)| term_with_class(BiForm::of_poly(p.clone()), *m, pts))
            .collect()
    };
    FactoredCoordinate {
        constant: Some(fn_.unit / fd.unit),
        numerator: build(&nterms),
        denominator: build(&dterms),
    }
}

fn term_with_class(
    form: BiForm<Qi>,
    mult: usize,
    pts: Option<&[ProjPoint<Qi>]>,
) -> FactorTerm<Qi> {
    match pts {
        Some(pts) => {
            let class = curve_class(&form, pts);
            FactorTerm::with_class(form, mult, class)
        }
        None => FactorTerm::new(form, mult),
    }
}

/// Divisor class of a curve through (some of) the blowup centers:
/// `d1·Hx + d2·Hy − Σ mult_i·Ei`.
pub fn curve_class(form: &BiForm<Qi>, pts: &[ProjPoint<Qi>]) -> DivisorClass {
    let mut m = [0i64; 8];
    for (i, p) in pts.iter().enumerate().take(8) {
        m[i] = -(form.multiplicity_at(p) as i64);
    }
    DivisorClass::new(form.bidegree.0 as i64, form.bidegree.1 as i64, m)
}

/// Independent involution oracle: `r_y` sends `(x, y)` to `(x, ȳ)` where
/// `ȳ` is the second root of the member through the point restricted to the
/// vertical line; by Vieta `ȳ = C(x)/(A(x)·y)` for member `Ay² + By + C`.
/// Returns `None` at points where the quadratic degenerates.
pub fn vertical_involution(pencil: &Pencil<Qi>, x: &Qi, y: &Qi) -> Option<Qi> {
    let k = pencil
        .value_at(&ProjPoint::affine(x.clone(), y.clone()))
        .ok()?;
    let member = pencil.member(&k);
    let cols: Vec<UniPoly<Qi>> = member.poly.y_coefficients();
    if cols.len() < 3 {
        return None;
    }
    let a = cols[2].eval(x);
    let c = cols[0].eval(x);
    if a.is_zero() || y.is_zero() {
        return None;
    }
    Some(c / (a * y.clone()))
}

/// The horizontal involution, by symmetry.
pub fn horizontal_involution(pencil: &Pencil<Qi>, x: &Qi, y: &Qi) -> Option<Qi> {
    let swapped = Pencil {
        a: transpose(&pencil.a),
        b: transpose(&pencil.b),
    };
    vertical_involution(&swapped, y, x)
}

fn transpose(b: &crate::types::BiQuadratic<Qi>) -> crate::types::BiQuadratic<Qi> {
    let mut a = b.a.clone();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let t = a[i][j].clone();
            a[i][j] = a[j][i].clone();
            a[j][i] = t;
        }
    }
    crate::types::BiQuadratic::new(a)
}
