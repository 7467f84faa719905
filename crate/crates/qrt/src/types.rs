use numeric::poly::{BiPoly, UniPoly};
use numeric::{Field, Qi, Rat};

/// A bi-quadratic form `Σ a_ij x^{2−i} y^{2−j}` given by its 3×3
/// coefficient matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct BiQuadratic<F: Field> {
    pub a: [[F; 3]; 3],
}

impl<F: Field> BiQuadratic<F> {
    pub fn new(a: [[F; 3]; 3]) -> Self {
        BiQuadratic { a }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().flatten().all(|c| c.is_zero())
    }

    /// As a polynomial in `(x, y)`: coefficient of `x^p y^q` is `a[2−p][2−q]`.
    pub fn to_poly(&self) -> BiPoly<F> {
        let mut coeffs = vec![vec![F::zero(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                coeffs[2 - i][2 - j] = self.a[i][j].clone();
            }
        }
        BiPoly::new(coeffs)
    }

    /// The coefficients of `y^2, y, 1` as polynomials in `x`
    /// (the row vector `xᵀA` in the matrix notation).
    pub fn y_quadratic(&self) -> [UniPoly<F>; 3] {
        let col = |j: usize| {
            UniPoly::new(vec![
                self.a[2][j].clone(),
                self.a[1][j].clone(),
                self.a[0][j].clone(),
            ])
        };
        [col(0), col(1), col(2)]
    }
}

/// A pencil `α·(xᵀAy) + β·(xᵀBy)` of bi-quadratic curves; the member at
/// `k = α/β` is `k·(xᵀAy) + (xᵀBy)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Pencil<F: Field> {
    pub a: BiQuadratic<F>,
    pub b: BiQuadratic<F>,
}

impl<F: Field> Pencil<F> {
    pub fn new(a: BiQuadratic<F>, b: BiQuadratic<F>) -> Self {
        Pencil { a, b }
    }

    /// Member at `[α:β]` as a `(2,2)` form.
    pub fn member_proj(&self, alpha: &F, beta: &F) -> BiForm<F> {
        let pa = self.a.to_poly().scale(alpha);
        let pb = self.b.to_poly().scale(beta);
        BiForm::new(pa + pb, (2, 2))
    }

    pub fn member(&self, k: &P1Value<F>) -> BiForm<F> {
        match k {
            P1Value::Finite(k) => self.member_proj(k, &F::one()),
            P1Value::Infinity => self.member_proj(&F::one(), &F::zero()),
        }
    }

    /// Conserved pencil value `[α:β] = [xᵀBy : −xᵀAy]` at a point.
    pub fn value_at(&self, pt: &ProjPoint<F>) -> Result<P1Value<F>, crate::PencilError> {
        let fa = BiForm::new(self.a.to_poly(), (2, 2));
        let fb = BiForm::new(self.b.to_poly(), (2, 2));
        let va = fa.eval_point(pt);
        let vb = fb.eval_point(pt);
        let scale = va.approx_mag().max(vb.approx_mag()).max(1.0);
        if va.is_negligible(scale) && vb.is_negligible(scale) {
            return Err(crate::PencilError::IndeterminatePencilValue);
        }
        if va.is_negligible(scale) {
            return Ok(P1Value::Infinity);
        }
        Ok(P1Value::Finite(vb / (-va)))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> Pencil<G> {
        let conv = |m: &[[F; 3]; 3]| {
            let g = |i: usize, j: usize| f(&m[i][j]);
            [
                [g(0, 0), g(0, 1), g(0, 2)],
                [g(1, 0), g(1, 1), g(1, 2)],
                [g(2, 0), g(2, 1), g(2, 2)],
            ]
        };
        Pencil {
            a: BiQuadratic::new(conv(&self.a.a)),
            b: BiQuadratic::new(conv(&self.b.a)),
        }
    }
}

/// A point of `P¹` (finite value or infinity).
#[derive(Clone, PartialEq, Debug)]
pub enum P1Value<F: Field> {
    Finite(F),
    Infinity,
}

impl<F: Field> P1Value<F> {
    pub fn homogeneous(&self) -> (F, F) {
        match self {
            P1Value::Finite(v) => (v.clone(), F::one()),
            P1Value::Infinity => (F::one(), F::zero()),
        }
    }

    pub fn finite(&self) -> Option<&F> {
        match self {
            P1Value::Finite(v) => Some(v),
            P1Value::Infinity => None,
        }
    }
}

impl<F: Field> std::fmt::Display for P1Value<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            P1Value::Finite(v) => write!(f, "{v}"),
            P1Value::Infinity => write!(f, "inf"),
        }
    }
}

/// A point of `P¹×P¹` in homogeneous coordinates `([X0:X1], [Y0:Y1])`.
#[derive(Clone, Debug)]
pub struct ProjPoint<F: Field> {
    pub x: (F, F),
    pub y: (F, F),
}

impl<F: Field> ProjPoint<F> {
    pub fn affine(x: F, y: F) -> Self {
        ProjPoint {
            x: (x, F::one()),
            y: (y, F::one()),
        }
    }

    pub fn from_values(x: P1Value<F>, y: P1Value<F>) -> Self {
        ProjPoint {
            x: x.homogeneous(),
            y: y.homogeneous(),
        }
    }

    pub fn x_value(&self) -> P1Value<F> {
        if self.x.1.is_negligible(self.x.0.approx_mag().max(1.0)) {
            P1Value::Infinity
        } else {
            P1Value::Finite(self.x.0.clone() / self.x.1.clone())
        }
    }

    pub fn y_value(&self) -> P1Value<F> {
        if self.y.1.is_negligible(self.y.0.approx_mag().max(1.0)) {
            P1Value::Infinity
        } else {
            P1Value::Finite(self.y.0.clone() / self.y.1.clone())
        }
    }

    /// Projective equality; exact for exact fields, tolerance-based
    /// otherwise.
    pub fn same_as(&self, other: &ProjPoint<F>) -> bool {
        let cx = self.x.0.clone() * other.x.1.clone() - self.x.1.clone() * other.x.0.clone();
        let cy = self.y.0.clone() * other.y.1.clone() - self.y.1.clone() * other.y.0.clone();
        let sx = [&self.x.0, &self.x.1, &other.x.0, &other.x.1]
            .iter()
            .map(|v| v.approx_mag())
            .fold(1e-30, f64::max);
        let sy = [&self.y.0, &self.y.1, &other.y.0, &other.y.1]
            .iter()
            .map(|v| v.approx_mag())
            .fold(1e-30, f64::max);
        cx.is_negligible(sx * sx) && cy.is_negligible(sy * sy)
    }
}

impl<F: Field> std::fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x_value(), self.y_value())
    }
}

/// A bi-homogeneous form: an affine polynomial together with its nominal
/// bidegree. Padding degrees represent boundary factors — the form of the
/// constant polynomial 1 with bidegree (1,0) is the line `x = ∞`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiForm<F: Field> {
    pub poly: BiPoly<F>,
    pub bidegree: (usize, usize),
}

impl<F: Field> BiForm<F> {
    pub fn new(poly: BiPoly<F>, bidegree: (usize, usize)) -> Self {
        debug_assert!(poly.deg_x() <= bidegree.0 && poly.deg_y() <= bidegree.1);
        BiForm { poly, bidegree }
    }

    pub fn of_poly(poly: BiPoly<F>) -> Self {
        let d = poly.bidegree();
        BiForm { poly, bidegree: d }
    }

    pub fn eval_point(&self, pt: &ProjPoint<F>) -> F {
        self.poly.eval_proj(
            self.bidegree.0,
            self.bidegree.1,
            &pt.x.0,
            &pt.x.1,
            &pt.y.0,
            &pt.y.1,
        )
    }

    /// The affine polynomial in the chart containing the given point;
    /// infinite coordinates flip to the reciprocal chart by reversing
    /// coefficients against the nominal bidegree.
    pub fn chart_poly(&self, x_inf: bool, y_inf: bool) -> BiPoly<F> {
        let (dx, dy) = self.bidegree;
        let mut coeffs = vec![vec![F::zero(); dy + 1]; dx + 1];
        for i in 0..=dx {
            for j in 0..=dy {
                let si = if x_inf { dx - i } else { i };
                let sj = if y_inf { dy - j } else { j };
                coeffs[i][j] = self.poly.coeff(si, sj);
            }
        }
        BiPoly::new(coeffs)
    }

    /// Vanishing multiplicity at a projective point.
    pub fn multiplicity_at(&self, pt: &ProjPoint<F>) -> usize {
        let x_inf = matches!(pt.x_value(), P1Value::Infinity);
        let y_inf = matches!(pt.y_value(), P1Value::Infinity);
        let q = self.chart_poly(x_inf, y_inf);
        let xv = if x_inf {
            self.poly_scale_div(&pt.x.1, &pt.x.0)
        } else {
            self.poly_scale_div(&pt.x.0, &pt.x.1)
        };
        let yv = if y_inf {
            self.poly_scale_div(&pt.y.1, &pt.y.0)
        } else {
            self.poly_scale_div(&pt.y.0, &pt.y.1)
        };
        let scale = q
            .coeffs
            .iter()
            .flatten()
            .map(|c| c.approx_mag())
            .fold(1e-30, f64::max)
            * (1.0 + xv.approx_mag()).powi(self.bidegree.0 as i32)
            * (1.0 + yv.approx_mag()).powi(self.bidegree.1 as i32);
        q.multiplicity_at(&xv, &yv, scale)
    }

    fn poly_scale_div(&self, num: &F, den: &F) -> F {
        num.clone() / den.clone()
    }

    pub fn swap_xy(&self) -> Self {
        BiForm {
            poly: self.poly.swap_xy(),
            bidegree: (self.bidegree.1, self.bidegree.0),
        }
    }
}

impl<F: Field> std::fmt::Display for BiForm<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn qi_rat(n: i64, d: i64) -> Qi {
    Qi::from_rat(Rat::new(n, d))
}

/// The running symmetric example: `A` has a single central entry and `B`
/// carries the parameter `a` through `s = a + 1/a`.
pub fn example_pencil(a: Rat) -> Pencil<Qi> {
    assert!(!a.is_zero(), "parameter must be nonzero");
    let ai = a.inv();
    let s = Qi::from_rat(a.clone() + ai);
    let z = Qi::zero;
    let one = Qi::one;
    let a_mat = BiQuadratic::new([
        [z(), z(), z()],
        [z(), one(), z()],
        [z(), z(), z()],
    ]);
    let b_mat = BiQuadratic::new([
        [one(), s.clone(), one()],
        [s.clone(), z(), -s.clone()],
        [one(), -s, one()],
    ]);
    Pencil::new(a_mat, b_mat)
}

/// Base points of the running example: `(0, a), (0, 1/a), (a, 0), (1/a, 0),
/// (∞, −a), (∞, −1/a), (−a, ∞), (−1/a, ∞)`.
pub fn example_base_points(a: Rat) -> Vec<ProjPoint<Qi>> {
    let ar = Qi::from_rat(a.clone());
    let ai = Qi::from_rat(a.inv());
    let fin = |x: Qi, y: Qi| ProjPoint::affine(x, y);
    let xinf = |y: Qi| ProjPoint {
        x: (Qi::one(), Qi::zero()),
        y: (y, Qi::one()),
    };
    let yinf = |x: Qi| ProjPoint {
        x: (x, Qi::one()),
        y: (Qi::one(), Qi::zero()),
    };
    vec![
        fin(Qi::zero(), ar.clone()),
        fin(Qi::zero(), ai.clone()),
        fin(ar.clone(), Qi::zero()),
        fin(ai.clone(), Qi::zero()),
        xinf(-ar.clone()),
        xinf(-ai.clone()),
        yinf(-ar),
        yinf(-ai),
    ]
}

/// `k` values of the singular members of the running example:
/// `0, ±4i(a+1/a), ±(a−1/a)², ∞`.
pub fn example_singular_values(a: Rat) -> Vec<P1Value<Qi>> {
    let s = a.clone() + a.inv();
    let t = a.clone() - a.inv();
    let four_i_s = Qi::new(Rat::zero(), Rat::from_int(4) * s);
    let t2 = Qi::from_rat(t.clone() * t);
    vec![
        P1Value::Finite(Qi::zero()),
        P1Value::Finite(four_i_s.clone()),
        P1Value::Finite(-four_i_s),
        P1Value::Finite(t2.clone()),
        P1Value::Finite(-t2),
        P1Value::Infinity,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_pencil_value() {
        let p = example_pencil(Rat::from_int(2));
        let pt = ProjPoint::affine(Qi::from_int(1), Qi::from_int(1));
        let k = p.value_at(&pt).unwrap();
        assert_eq!(k, P1Value::Finite(Qi::from_int(-4)));
    }

    #[test]
    fn base_points_lie_on_both_forms() {
        let p = example_pencil(Rat::from_int(2));
        let fa = BiForm::new(p.a.to_poly(), (2, 2));
        let fb = BiForm::new(p.b.to_poly(), (2, 2));
        for pt in example_base_points(Rat::from_int(2)) {
            assert!(fa.eval_point(&pt).is_zero(), "{pt}");
            assert!(fb.eval_point(&pt).is_zero(), "{pt}");
        }
    }

    #[test]
    fn boundary_form_multiplicity() {
        // The (1,0)-form "1" is the line x = ∞; it vanishes exactly at
        // points with infinite x.
        let inf_line = BiForm::new(BiPoly::constant(Qi::one()), (1, 0));
        let at_inf = ProjPoint {
            x: (Qi::one(), Qi::zero()),
            y: (Qi::from_int(3), Qi::one()),
        };
        assert_eq!(inf_line.multiplicity_at(&at_inf), 1);
        let finite = ProjPoint::affine(Qi::from_int(2), Qi::from_int(3));
        assert_eq!(inf_line.multiplicity_at(&finite), 0);
        let _ = qi_rat(1, 2);
    }
}
