use crate::base_points::base_points;
use crate::field_ext::PencilField;
use crate::half_map::curve_class;
use crate::types::{BiForm, P1Value, Pencil, ProjPoint};
use crate::PencilError;
use numeric::factor::factor_bi;
use numeric::linalg::Mat;
use numeric::poly::{BiPoly, UniPoly};
use numeric::recognize::recognize_qi;
use numeric::roots::roots_of_qi_poly;
use numeric::{BigC, Field, Qi};
use picard_lattice::{anticanonical, DivisorClass};
use serde::Serialize;

/// Kodaira types occurring in this family of pencils. Anything else is an
/// error rather than a guess.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Kodaira {
    I1,
    I2,
    I4,
    II,
}

impl Kodaira {
    fn from_cycle(n: usize) -> Option<Kodaira> {
        match n {
            1 => Some(Kodaira::I1),
            2 => Some(Kodaira::I2),
            4 => Some(Kodaira::I4),
            _ => None,
        }
    }
}

impl std::fmt::Display for Kodaira {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kodaira::I1 => write!(f, "I1"),
            Kodaira::I2 => write!(f, "I2"),
            Kodaira::I4 => write!(f, "I4"),
            Kodaira::II => write!(f, "II"),
        }
    }
}

/// One irreducible component of a singular fiber.
#[derive(Clone, Debug)]
pub struct FiberComponent {
    /// Defining polynomial over `ℚ(i)` (the constant 1 for boundary lines),
    /// with its nominal bidegree.
    pub form: BiForm<Qi>,
    pub multiplicity: usize,
    pub class: DivisorClass,
}

/// Report for one singular value of the pencil parameter.
#[derive(Clone, Debug)]
pub struct FiberReport {
    /// Exact location when recognized (e.g. `9/4`, `10*i`, `inf`).
    pub k_exact: Option<P1Value<Qi>>,
    /// Numeric location (`None` for the fiber at infinity).
    pub k_numeric: Option<(f64, f64)>,
    pub ord_disc: usize,
    pub kodaira: Kodaira,
    pub components: Vec<FiberComponent>,
    /// Pairings `D_i • D_j` between the component classes.
    pub intersection_edges: Vec<Vec<i64>>,
}

impl FiberReport {
    pub fn location_string(&self) -> String {
        match (&self.k_exact, &self.k_numeric) {
            (Some(k), _) => k.to_string(),
            (None, Some((re, im))) => format!("{re}{im:+}i"),
            (None, None) => "?".into(),
        }
    }
}

/// Serializable projection of a report (components as coefficient strings).
#[derive(Serialize)]
pub struct FiberReportJson {
    pub k: String,
    pub exact: bool,
    pub ord: usize,
    pub kodaira: String,
    pub components: Vec<ComponentJson>,
    pub intersection_edges: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct ComponentJson {
    pub coeffs: Vec<Vec<String>>,
    pub bidegree: (usize, usize),
    pub multiplicity: usize,
    pub class: [i64; 10],
}

impl From<&FiberReport> for FiberReportJson {
    fn from(r: &FiberReport) -> Self {
        FiberReportJson {
            k: r.location_string(),
            exact: r.k_exact.is_some(),
            ord: r.ord_disc,
            kodaira: r.kodaira.to_string(),
            components: r
                .components
                .iter()
                .map(|c| ComponentJson {
                    coeffs: c
                        .form
                        .poly
                        .coeffs
                        .iter()
                        .map(|row| row.iter().map(|v| v.to_string()).collect())
                        .collect(),
                    bidegree: c.form.bidegree,
                    multiplicity: c.multiplicity,
                    class: c.class.0,
                })
                .collect(),
            intersection_edges: r.intersection_edges.clone(),
        }
    }
}

/// Binary-quartic invariants of `q = a x⁴ + b x³ + c x² + d x + e`:
/// `I = 12ae − 3bd + c²`, `J = 72ace + 9bcd − 27ad² − 27b²e − 2c³`,
/// calibrated so that for `Y² = q(x)` the Jacobian is
/// `Y² = 4X³ − (I/12)X − (J/432)`.
fn quartic_invariants<F: Field>(q: &UniPoly<F>) -> (F, F) {
    let a = q.coeff(4);
    let b = q.coeff(3);
    let c = q.coeff(2);
    let d = q.coeff(1);
    let e = q.coeff(0);
    let i = F::from_i64(12) * a.clone() * e.clone() - F::from_i64(3) * b.clone() * d.clone()
        + c.clone() * c.clone();
    let j = F::from_i64(72) * a.clone() * c.clone() * e.clone()
        + F::from_i64(9) * b.clone() * c.clone() * d.clone()
        - F::from_i64(27) * a.clone() * d.clone() * d.clone()
        - F::from_i64(27) * b.clone() * b.clone() * e.clone()
        - F::from_i64(2) * c.clone() * c.clone() * c.clone();
    (i, j)
}

/// The branch quartic of a member: `B(x)² − 4A(x)C(x)` for the member
/// written as `A(x)y² + B(x)y + C(x)`.
pub fn branch_quartic<F: Field>(member: &BiPoly<F>) -> UniPoly<F> {
    let cols = member.y_coefficients();
    let at = |j: usize| cols.get(j).cloned().unwrap_or_else(UniPoly::zero);
    let (a, b, c) = (at(2), at(1), at(0));
    b.clone() * b - UniPoly::constant(F::from_i64(4)) * a * c
}

/// `(g2, g3, Δ)` of a single member via the invariants of its branch
/// quartic.
pub fn member_invariants<F: Field>(member: &BiPoly<F>) -> (F, F, F) {
    let q = branch_quartic(member);
    let (i, j) = quartic_invariants(&q);
    let g2 = i / F::from_i64(12);
    let g3 = j / F::from_i64(432);
    let disc = g2.clone() * g2.clone() * g2.clone() - F::from_i64(27) * g3.clone() * g3.clone();
    (g2, g3, disc)
}

/// Exact fiber discriminant `Δ(k)` of the pencil (member `k·A + B`),
/// recovered by interpolation: `Δ` has degree ≤ 12 in `k`, so 13 exact
/// evaluations determine it.
pub fn discriminant_polynomial(pencil: &Pencil<Qi>) -> UniPoly<Qi> {
    let mut xs = Vec::with_capacity(13);
    let mut ys = Vec::with_capacity(13);
    for t in -6i64..=6 {
        let k = Qi::from_int(t);
        let member = pencil.member_proj(&k, &Qi::one());
        let (_, _, disc) = member_invariants(&member.poly);
        xs.push(k);
        ys.push(disc);
    }
    interpolate(&xs, &ys)
}

/// Exact `g2(k)` (degree ≤ 4 in `k`) by the same interpolation device.
fn g2_polynomial(pencil: &Pencil<Qi>) -> UniPoly<Qi> {
    let mut xs = Vec::with_capacity(5);
    let mut ys = Vec::with_capacity(5);
    for t in -2i64..=2 {
        let k = Qi::from_int(t);
        let member = pencil.member_proj(&k, &Qi::one());
        let (g2, _, _) = member_invariants(&member.poly);
        xs.push(k);
        ys.push(g2);
    }
    interpolate(&xs, &ys)
}

fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> UniPoly<F> {
    // Lagrange interpolation.
    let mut acc = UniPoly::zero();
    for (i, xi) in xs.iter().enumerate() {
        let mut term = UniPoly::constant(ys[i].clone());
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi.clone() - xj.clone();
            term = term * UniPoly::linear_root(xj.clone()).scale(&denom.inv());
        }
        acc = acc + term;
    }
    acc
}

/// Locate and type all singular fibers of an exact pencil.
///
/// The discriminant is computed exactly and square-free decomposed, so
/// orders are exact integers; roots are recognized in `ℚ(i)` (including
/// quadratic splits) where possible and reported numerically otherwise.
/// Typing rule: order `m` with `g2(k0) ≠ 0` is the `m`-cycle `I_m`;
/// `g2(k0) = 0` with order 2 is a cusp (type II).
pub fn singular_fibers(pencil: &Pencil<Qi>) -> Result<Vec<FiberReport>, PencilError> {
    // Reject non-transversal configurations up front.
    let pts = base_points(pencil)?;
    let disc = discriminant_polynomial(pencil);
    if disc.is_zero() {
        return Err(PencilError::Degenerate(
            "the fiber discriminant vanishes identically".into(),
        ));
    }
    let g2poly = g2_polynomial(pencil);
    let deg = disc.degree().unwrap_or(0);
    let mut reports: Vec<FiberReport> = Vec::new();
    let mut total = 0usize;

    for (factor, mult) in disc.squarefree_decomposition() {
        // Exact roots first.
        let (roots, rest) = numeric::factor::qi_roots(&factor);
        for (k0, m) in &roots {
            debug_assert_eq!(*m, 1);
            total += mult;
            reports.push(typed_report(
                pencil,
                &pts,
                Some(P1Value::Finite(k0.clone())),
                Some(BigC::from_qi_p(k0, 256).to_f64_pair()),
                mult,
                &g2poly,
            )?);
        }
        if let Some(d) = rest.degree() {
            if d > 0 {
                for r in roots_of_qi_poly(&rest, 320) {
                    total += mult;
                    let exact = recognize_qi(&r, 96).and_then(|cand| {
                        let v = rest.eval(&cand);
                        if v.is_zero() {
                            Some(P1Value::Finite(cand))
                        } else {
                            None
                        }
                    });
                    reports.push(typed_report(
                        pencil,
                        &pts,
                        exact,
                        Some(r.to_f64_pair()),
                        mult,
                        &g2poly,
                    )?);
                }
            }
        }
    }
    // Fiber at infinity from the degree drop of the binary form.
    let inf_ord = 12 - deg;
    if inf_ord > 0 {
        total += inf_ord;
        let member = pencil.member(&P1Value::Infinity);
        let (g2, _, _) = member_invariants(&member.poly);
        let kod = classify(inf_ord, g2.is_zero(), "inf")?;
        reports.push(FiberReport {
            k_exact: Some(P1Value::Infinity),
            k_numeric: None,
            ord_disc: inf_ord,
            kodaira: kod,
            components: vec![],
            intersection_edges: vec![],
        });
    }
    debug_assert_eq!(total, 12, "discriminant orders must sum to 12");
    // Stable order: by order descending then location string.
    reports.sort_by(|a, b| {
        a.location_string()
            .len()
            .cmp(&b.location_string().len())
            .then(a.location_string().cmp(&b.location_string()))
    });
    Ok(reports)
}

fn typed_report(
    pencil: &Pencil<Qi>,
    pts: &[ProjPoint<Qi>],
    k_exact: Option<P1Value<Qi>>,
    k_numeric: Option<(f64, f64)>,
    ord: usize,
    g2poly: &UniPoly<Qi>,
) -> Result<FiberReport, PencilError> {
    let g2_zero = match &k_exact {
        Some(P1Value::Finite(k0)) => g2poly.eval(k0).is_zero(),
        Some(P1Value::Infinity) => unreachable!("infinity handled separately"),
        None => {
            let (re, im) = k_numeric.expect("numeric location present");
            let prec = 256;
            let kb = BigC::from_f64_p(re, im, prec);
            let g2b = UniPoly::new(
                g2poly
                    .coeffs
                    .iter()
                    .map(|c| BigC::from_qi_p(c, prec))
                    .collect(),
            );
            let scale = g2b
                .coeffs
                .iter()
                .map(|c| c.approx_mag())
                .fold(1e-30, f64::max)
                * (1.0 + kb.approx_mag()).powi(4);
            // Numeric roots carry f64-level location error, so the zero
            // test here is coarse by design.
            g2b.eval(&kb).approx_mag() < scale * 1e-9
        }
    };
    let at = k_exact
        .as_ref()
        .map(|k| k.to_string())
        .or_else(|| k_numeric.map(|(re, im)| format!("{re}{im:+}i")))
        .unwrap_or_else(|| "?".into());
    let kod = classify(ord, g2_zero, &at)?;
    let _ = (pencil, pts);
    Ok(FiberReport {
        k_exact,
        k_numeric,
        ord_disc: ord,
        kodaira: kod,
        components: vec![],
        intersection_edges: vec![],
    })
}

fn classify(ord: usize, g2_zero: bool, at: &str) -> Result<Kodaira, PencilError> {
    if !g2_zero {
        Kodaira::from_cycle(ord).ok_or(PencilError::UnsupportedKodaira {
            at: at.into(),
            ord,
        })
    } else if ord == 2 {
        Ok(Kodaira::II)
    } else {
        Err(PencilError::UnsupportedKodaira { at: at.into(), ord })
    }
}

/// Factor the member at an exact singular value into irreducible
/// components, compute their classes against the base points, and locate
/// the node when the member is irreducible.
pub fn fiber_components(
    pencil: &Pencil<Qi>,
    k0: &P1Value<Qi>,
    pts: &[ProjPoint<Qi>],
) -> Result<(Vec<FiberComponent>, Vec<Vec<i64>>), PencilError> {
    let member = pencil.member(k0);
    let f = factor_bi(&member.poly);
    if !f.complete {
        return Err(PencilError::UnclassifiedFiber(k0.to_string()));
    }
    let mut comps: Vec<FiberComponent> = Vec::new();
    // Boundary lines from the bidegree padding.
    let (dx, dy) = member.poly.bidegree();
    let x_inf_mult = 2 - dx;
    let y_inf_mult = 2 - dy;
    if x_inf_mult > 0 {
        let form = BiForm::new(BiPoly::constant(Qi::one()), (1, 0));
        let class = curve_class(&form, pts);
        comps.push(FiberComponent {
            form,
            multiplicity: x_inf_mult,
            class,
        });
    }
    if y_inf_mult > 0 {
        let form = BiForm::new(BiPoly::constant(Qi::one()), (0, 1));
        let class = curve_class(&form, pts);
        comps.push(FiberComponent {
            form,
            multiplicity: y_inf_mult,
            class,
        });
    }
    if f.x_power > 0 {
        let form = BiForm::new(BiPoly::x(), (1, 0));
        let class = curve_class(&form, pts);
        comps.push(FiberComponent {
            form,
            multiplicity: f.x_power,
            class,
        });
    }
    if f.y_power > 0 {
        let form = BiForm::new(BiPoly::y(), (0, 1));
        let class = curve_class(&form, pts);
        comps.push(FiberComponent {
            form,
            multiplicity: f.y_power,
            class,
        });
    }
    for (poly, mult) in &f.factors {
        let form = BiForm::of_poly(poly.clone());
        let class = curve_class(&form, pts);
        comps.push(FiberComponent {
            form,
            multiplicity: *mult,
            class,
        });
    }
    // Irreducible member: certify the node.
    if comps.len() == 1 && comps[0].multiplicity == 1 && comps[0].form.bidegree == (2, 2) {
        let node = locate_node(&member.poly)?;
        let scale = member
            .poly
            .coeffs
            .iter()
            .flatten()
            .map(|c| BigC::from_qi_p(c, 256).approx_mag())
            .fold(1e-30, f64::max);
        let (p, px, py) = node_residuals(&member.poly, &node);
        let tol = scale * 1e-40;
        if p > tol || px > tol || py > tol {
            return Err(PencilError::UnclassifiedFiber(format!(
                "{k0}: node residuals ({p:e}, {px:e}, {py:e})"
            )));
        }
    }
    // Classes must sum to −K with multiplicities.
    let mut sum = DivisorClass::ZERO;
    for c in &comps {
        sum = sum + c.class.scaled(c.multiplicity as i64);
    }
    if sum != anticanonical() {
        return Err(PencilError::UnclassifiedFiber(format!(
            "{k0}: component classes sum to {sum}, not -K"
        )));
    }
    let edges: Vec<Vec<i64>> = comps
        .iter()
        .map(|a| comps.iter().map(|b| a.class.intersect(&b.class)).collect())
        .collect();
    Ok((comps, edges))
}

/// Node of an irreducible nodal member: the double root of the branch
/// quartic gives the x-coordinate (exactly when it lies in the field);
/// the y-coordinate follows from the vertex of the y-quadratic. Both are
/// then polished and certified numerically.
fn locate_node(member: &BiPoly<Qi>) -> Result<(BigC, BigC), PencilError> {
    let prec = 256;
    for swapped in [false, true] {
        let m = if swapped {
            member.swap_xy()
        } else {
            member.clone()
        };
        let q = branch_quartic(&m);
        if q.is_zero() {
            continue;
        }
        let sq = q.gcd(&q.derivative());
        let Some(d) = sq.degree() else { continue };
        if d == 0 {
            continue;
        }
        // Roots of the repeated part.
        let candidates: Vec<BigC> = {
            let (roots, rest) = numeric::factor::qi_roots(&sq);
            let mut v: Vec<BigC> = roots
                .iter()
                .map(|(r, _)| BigC::from_qi_p(r, prec))
                .collect();
            if rest.degree().is_some_and(|d| d > 0) {
                v.extend(roots_of_qi_poly(&rest, prec));
            }
            v
        };
        let cols = m.y_coefficients();
        let mb = |p: &UniPoly<Qi>| UniPoly::new(p.coeffs.iter().map(|c| BigC::from_qi_p(c, prec)).collect());
        let a2 = mb(cols.get(2).cloned().as_ref().unwrap_or(&UniPoly::zero()));
        let a1 = mb(cols.get(1).cloned().as_ref().unwrap_or(&UniPoly::zero()));
        for xr in candidates {
            let av = a2.eval(&xr);
            if av.is_negligible(1.0) {
                continue;
            }
            let y0 = -a1.eval(&xr) / (BigC::from_i64_p(2, prec) * av);
            // Newton polish on (p_x, p_y).
            if let Some(node) = newton_polish(member, (xr.clone(), y0)) {
                let from = if swapped {
                    (node.1.clone(), node.0.clone())
                } else {
                    node
                };
                return Ok(from);
            }
        }
    }
    Err(PencilError::UnclassifiedFiber("no node found".into()))
}

fn newton_polish(member: &BiPoly<Qi>, start: (BigC, BigC)) -> Option<(BigC, BigC)> {
    let prec = 256;
    let pm = BiPoly::new(
        member
            .coeffs
            .iter()
            .map(|row| row.iter().map(|c| BigC::from_qi_p(c, prec)).collect())
            .collect(),
    );
    let px = pm.partial_x();
    let py = pm.partial_y();
    let pxx = px.partial_x();
    let pxy = px.partial_y();
    let pyy = py.partial_y();
    let (mut x, mut y) = start;
    for _ in 0..80 {
        let fx = px.eval(&x, &y);
        let fy = py.eval(&x, &y);
        let a = pxx.eval(&x, &y);
        let b = pxy.eval(&x, &y);
        let c = pyy.eval(&x, &y);
        let det = a.clone() * c.clone() - b.clone() * b.clone();
        if det.is_negligible(1e-6) {
            return None;
        }
        let dx = (fx.clone() * c - fy.clone() * b.clone()) / det.clone();
        let dy = (fy * a - fx * b) / det;
        x = x - dx.clone();
        y = y - dy.clone();
        if dx.approx_mag() < 1e-60 && dy.approx_mag() < 1e-60 {
            break;
        }
    }
    Some((x, y))
}

fn node_residuals(member: &BiPoly<Qi>, node: &(BigC, BigC)) -> (f64, f64, f64) {
    let prec = 256;
    let pm = BiPoly::new(
        member
            .coeffs
            .iter()
            .map(|row| row.iter().map(|c| BigC::from_qi_p(c, prec)).collect())
            .collect(),
    );
    let p = pm.eval(&node.0, &node.1).approx_mag();
    let px = pm.partial_x().eval(&node.0, &node.1).approx_mag();
    let py = pm.partial_y().eval(&node.0, &node.1).approx_mag();
    (p, px, py)
}

/// Numeric component check for fibers at non-exact singular values: the
/// member is treated at floating precision, its class is computed from the
/// numeric base points, and the node is certified when the fiber is an
/// irreducible 1-cycle.
pub fn fiber_class_sum_numeric(
    pencil: &Pencil<Qi>,
    k0: &BigC,
    pts: &[ProjPoint<BigC>],
) -> Result<DivisorClass, PencilError> {
    let prec = k0.prec().max(192);
    let pb = pencil.map_coeffs(|c| BigC::from_qi_p(c, prec));
    let member = pb.member_proj(k0, &BigC::from_i64_p(1, prec));
    let mut m = [0i64; 8];
    for (i, p) in pts.iter().enumerate().take(8) {
        m[i] = -(member.multiplicity_at(p) as i64);
    }
    Ok(DivisorClass::new(
        member.bidegree.0 as i64,
        member.bidegree.1 as i64,
        m,
    ))
}

/// Pretty singular-value table entry for tests and the CLI.
pub fn report_summary(r: &FiberReport) -> String {
    format!("k = {}: ord {} type {}", r.location_string(), r.ord_disc, r.kodaira)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::example_pencil;
    use numeric::Rat;

    #[test]
    fn invariant_calibration() {
        // For q = 4x³ − g2·x − g3 the calibrated invariants return
        // (g2, g3) themselves.
        let g2 = Qi::from_int(5);
        let g3 = Qi::from_int(-7);
        let q = UniPoly::new(vec![-g3.clone(), -g2.clone(), Qi::zero(), Qi::from_int(4)]);
        let (i, j) = quartic_invariants(&q);
        assert_eq!(i / Qi::from_int(12), g2);
        assert_eq!(j / Qi::from_int(432), g3);
    }

    #[test]
    fn example_discriminant_roots() {
        let p = example_pencil(Rat::from_int(2));
        let disc = discriminant_polynomial(&p);
        // Singular at k = 0 (ord 2), ±10i (ord 1), ±9/4 (ord 2); plus ord 4
        // at infinity: affine degree must be 8.
        assert_eq!(disc.degree(), Some(8));
        for (k, _) in [
            (Qi::zero(), 2),
            (Qi::from_ints(0, 10), 1),
            (Qi::from_ints(0, -10), 1),
            (Qi::from_rat(Rat::new(9, 4)), 2),
            (Qi::from_rat(Rat::new(-9, 4)), 2),
        ] {
            assert!(disc.eval(&k).is_zero(), "Δ({k}) ≠ 0");
        }
        // Regular elsewhere.
        assert!(!disc.eval(&Qi::one()).is_zero());
    }

    #[test]
    fn example_fiber_table() {
        let p = example_pencil(Rat::from_int(2));
        let reports = singular_fibers(&p).unwrap();
        let mut found: Vec<(String, usize, Kodaira)> = reports
            .iter()
            .map(|r| (r.location_string(), r.ord_disc, r.kodaira))
            .collect();
        found.sort();
        let mut expected = vec![
            ("0".to_string(), 2, Kodaira::I2),
            ("10*i".to_string(), 1, Kodaira::I1),
            ("-10*i".to_string(), 1, Kodaira::I1),
            ("9/4".to_string(), 2, Kodaira::I2),
            ("-9/4".to_string(), 2, Kodaira::I2),
            ("inf".to_string(), 4, Kodaira::I4),
        ];
        expected.sort();
        assert_eq!(found, expected);
        let total: usize = reports.iter().map(|r| r.ord_disc).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn example_components_k0() {
        let p = example_pencil(Rat::from_int(2));
        let pts = crate::types::example_base_points(Rat::from_int(2));
        let (comps, edges) = fiber_components(&p, &P1Value::Finite(Qi::zero()), &pts).unwrap();
        assert_eq!(comps.len(), 2);
        let classes: Vec<DivisorClass> = comps.iter().map(|c| c.class).collect();
        let d0 = DivisorClass::new(1, 1, [-1, 0, -1, 0, 0, -1, 0, -1]);
        let d1 = DivisorClass::new(1, 1, [0, -1, 0, -1, -1, 0, -1, 0]);
        assert!(classes.contains(&d0), "{classes:?}");
        assert!(classes.contains(&d1));
        // The two components meet twice (a double bond).
        assert_eq!(edges[0][1], 2);
    }

    #[test]
    fn example_components_infinity() {
        let p = example_pencil(Rat::from_int(2));
        let pts = crate::types::example_base_points(Rat::from_int(2));
        let (comps, _) = fiber_components(&p, &P1Value::Infinity, &pts).unwrap();
        assert_eq!(comps.len(), 4);
        let classes: Vec<DivisorClass> = comps.iter().map(|c| c.class).collect();
        for expect in [
            DivisorClass::new(1, 0, [-1, -1, 0, 0, 0, 0, 0, 0]),
            DivisorClass::new(0, 1, [0, 0, -1, -1, 0, 0, 0, 0]),
            DivisorClass::new(1, 0, [0, 0, 0, 0, -1, -1, 0, 0]),
            DivisorClass::new(0, 1, [0, 0, 0, 0, 0, 0, -1, -1]),
        ] {
            assert!(classes.contains(&expect), "missing {expect}");
        }
    }

    #[test]
    fn example_nodal_component() {
        let p = example_pencil(Rat::from_int(2));
        let pts = crate::types::example_base_points(Rat::from_int(2));
        let k = P1Value::Finite(Qi::from_ints(0, 10));
        let (comps, _) = fiber_components(&p, &k, &pts).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].class, anticanonical());
    }
}
