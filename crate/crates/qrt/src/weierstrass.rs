use crate::field_ext::PencilField;
use crate::types::{BiForm, P1Value};
use crate::PencilError;
use numeric::poly::BiPoly;
use numeric::Field;

/// Weierstrass data `Y² = 4X³ − g2·X − g3` with `Δ = g2³ − 27g3²`.
#[derive(Clone, Debug)]
pub struct WeierstrassForm<F: Field> {
    pub g2: F,
    pub g3: F,
    pub discriminant: F,
}

impl<F: Field> WeierstrassForm<F> {
    pub fn new(g2: F, g3: F) -> Self {
        let d = g2.clone() * g2.clone() * g2.clone()
            - F::from_i64(27) * g3.clone() * g3.clone();
        WeierstrassForm { g2, g3, discriminant: d }
    }
}

/// Full output of the normal-form reduction: the Möbius normalization used,
/// the intermediate coefficients, and the Weierstrass data.
#[derive(Clone, Debug)]
pub struct SchwartzReduction<F: Field> {
    /// Finite points `(a1, 0)` and `(a2, ∞)` chosen on the curve.
    pub points: (F, P1Value<F>),
    /// Intermediate normal form `ax² + bxy + cy² + dx + ey = ux²y + vxy²`
    /// as `(a, b, c, d, e, u, v)`.
    pub normal_form: [F; 7],
    /// Coefficients of `Y² = 4X³ + AX² + BX + C` before the shift.
    pub cubic: [F; 3],
    pub weierstrass: WeierstrassForm<F>,
}

impl<F: PencilField> SchwartzReduction<F> {
    /// Residual of a sampled point of the *original* curve pushed through
    /// the reduction: `|Y² − (4X'³ − g2·X' − g3)|` with `X' = X + A/12`.
    pub fn certificate_residual(&self, x_orig: &F, y: &F) -> F {
        // Möbius normalization x̃ = (x−a1)/(x−a2).
        let a1 = &self.points.0;
        let x = match &self.points.1 {
            P1Value::Finite(a2) => {
                (x_orig.clone() - a1.clone()) / (x_orig.clone() - a2.clone())
            }
            P1Value::Infinity => x_orig.clone() - a1.clone(),
        };
        let x = &x;
        let [a, b, c, d, e, u, v] = self.normal_form.clone();
        let cx = c.clone() - v.clone() * x.clone();
        let xx = -(a.clone() * c.clone() * c.clone()
            + c.clone() * d.clone() * v.clone()
            - c.clone() * c.clone() * u.clone() * y.clone()
            + b.clone() * c.clone() * v.clone() * y.clone()
            + e.clone() * v.clone() * v.clone() * y.clone())
            / cx.clone();
        let yy = (-(c.clone() * c.clone() * d.clone() * u.clone())
            + b.clone() * c.clone() * d.clone() * v.clone()
            - a.clone() * c.clone() * e.clone() * v.clone()
            + (-(F::from_i64(2) * a.clone() * c.clone() * c.clone() * u.clone())
                + a.clone() * b.clone() * c.clone() * v.clone()
                - c.clone() * d.clone() * u.clone() * v.clone()
                + a.clone() * e.clone() * v.clone() * v.clone())
                * x.clone()
            + (-(b.clone() * c.clone() * c.clone() * u.clone())
                + b.clone() * b.clone() * c.clone() * v.clone()
                - F::from_i64(2) * a.clone() * c.clone() * c.clone() * v.clone()
                - F::from_i64(2) * c.clone() * d.clone() * v.clone() * v.clone()
                + b.clone() * e.clone() * v.clone() * v.clone())
                * y.clone()
            + F::from_i64(2)
                * (c.clone() * c.clone() * u.clone() * u.clone()
                    - b.clone() * c.clone() * u.clone() * v.clone()
                    - e.clone() * u.clone() * v.clone() * v.clone())
                * x.clone()
                * y.clone()
            + F::from_i64(2)
                * (c.clone() * c.clone() * u.clone() * v.clone()
                    - b.clone() * c.clone() * v.clone() * v.clone()
                    - e.clone() * v.clone() * v.clone() * v.clone())
                * y.clone()
                * y.clone())
            / cx;
        let a12 = self.cubic[0].clone() / F::from_i64(12);
        let xs = xx + a12;
        let w = &self.weierstrass;
        yy.clone() * yy
            - (F::from_i64(4) * xs.clone() * xs.clone() * xs.clone()
                - w.g2.clone() * xs.clone()
                - w.g3.clone())
    }
}

/// Reduce a bi-quadratic curve to Weierstrass normal form.
///
/// A finite point `(a1, 0)` is taken from the roots of the `y⁰` edge
/// restriction and `(a2, ∞)` from the `y²` edge; the Möbius change
/// `x̃ = (x−a1)/(x−a2)` moves them to `(0,0)` and `(∞,∞)`, after which the
/// curve takes the seven-coefficient normal form and the classical cubic
/// substitution applies.
pub fn schwartz_reduce<F: PencilField>(curve: &BiPoly<F>) -> Result<SchwartzReduction<F>, PencilError> {
    let cols = BiForm::new(curve.clone(), (2, 2));
    let ycols = cols.poly.y_coefficients();
    let c0 = ycols.first().cloned().unwrap_or_default_poly();
    let c2 = ycols.get(2).cloned().unwrap_or_default_poly();
    // Roots of the y=0 edge.
    let r0 = F::poly_roots(&c0).ok_or(PencilError::RootsOutsideField)?;
    let r2 = F::poly_roots(&c2).ok_or(PencilError::RootsOutsideField)?;
    if r0.is_empty() {
        return Err(PencilError::NormalizationPointsUnavailable);
    }
    if r2.is_empty() {
        return Err(PencilError::NormalizationPointsUnavailable);
    }
    // Prefer a pair (a1, a2) of distinct finite roots; the substitution is
    // singular when a1 = a2.
    let mut chosen = None;
    'search: for (a1, _) in &r0 {
        for (a2, _) in &r2 {
            if a1 != a2 {
                chosen = Some((a1.clone(), a2.clone()));
                break 'search;
            }
        }
    }
    let (a1, a2) = chosen.ok_or(PencilError::NormalizationPointsUnavailable)?;
    // x = (a2·x̃ − a1)/(x̃ − 1): substitute homogeneously and clear (x̃−1)².
    let nx = BiPoly::x().scale(&a2) - BiPoly::constant(a1.clone());
    let dx = BiPoly::x() - BiPoly::constant(F::one());
    let ny = BiPoly::y();
    let dy = BiPoly::one();
    let tilde = curve.compose_cleared(&nx, &dx, &ny, &dy);
    let scale = tilde
        .coeffs
        .iter()
        .flatten()
        .map(|c| c.approx_mag())
        .fold(1e-30, f64::max);
    if !tilde.coeff(0, 0).is_negligible(scale) || !tilde.coeff(2, 2).is_negligible(scale) {
        return Err(PencilError::DegenerateReduction(
            "normalized curve misses (0,0) or (∞,∞)".into(),
        ));
    }
    let a = tilde.coeff(2, 0);
    let b = tilde.coeff(1, 1);
    let c = tilde.coeff(0, 2);
    let d = tilde.coeff(1, 0);
    let e = tilde.coeff(0, 1);
    let u = -tilde.coeff(2, 1);
    let v = -tilde.coeff(1, 2);
    if c.is_negligible(scale) && v.is_negligible(scale) {
        return Err(PencilError::DegenerateReduction(
            "the pivot c − v·x vanishes identically".into(),
        ));
    }
    let four = F::from_i64(4);
    let two = F::from_i64(2);
    let big_a = b.clone() * b.clone()
        + F::from_i64(8) * a.clone() * c.clone()
        + four.clone() * e.clone() * u.clone()
        + four.clone() * d.clone() * v.clone();
    let big_b = four.clone()
        * (a.clone() * a.clone() * c.clone() * c.clone()
            + a.clone() * c.clone() * e.clone() * u.clone()
            + a.clone() * c.clone() * d.clone() * v.clone()
            + d.clone() * e.clone() * u.clone() * v.clone())
        + two.clone()
            * (a.clone() * b.clone() * b.clone() * c.clone()
                + b.clone() * c.clone() * d.clone() * u.clone()
                + a.clone() * b.clone() * e.clone() * v.clone());
    let big_c_root = a.clone() * b.clone() * c.clone()
        + c.clone() * d.clone() * u.clone()
        + a.clone() * e.clone() * v.clone();
    let big_c = big_c_root.clone() * big_c_root;
    let twelve = F::from_i64(12);
    let g2 = -big_b.clone() + big_a.clone() * big_a.clone() / twelve.clone();
    let g3 = -big_c.clone() + big_a.clone() * big_b.clone() / twelve
        - big_a.clone() * big_a.clone() * big_a.clone() / F::from_i64(216);
    Ok(SchwartzReduction {
        points: (a1, P1Value::Finite(a2)),
        normal_form: [a, b, c, d, e, u, v],
        cubic: [big_a, big_b, big_c],
        weierstrass: WeierstrassForm::new(g2, g3),
    })
}

trait OrDefaultPoly<F: Field> {
    fn unwrap_or_default_poly(self) -> numeric::UniPoly<F>;
}

impl<F: Field> OrDefaultPoly<F> for Option<numeric::UniPoly<F>> {
    fn unwrap_or_default_poly(self) -> numeric::UniPoly<F> {
        self.unwrap_or_else(numeric::UniPoly::zero)
    }
}

/// Solve the curve for `y` at a given `x`, for sampling certificate points.
pub fn y_on_curve<F: PencilField>(curve: &BiPoly<F>, x: &F) -> Option<F> {
    let cols = curve.y_coefficients();
    let at = |j: usize| cols.get(j).map(|p| p.eval(x)).unwrap_or_else(F::zero);
    let (a, b, c) = (at(2), at(1), at(0));
    if a.is_zero() {
        if b.is_zero() {
            return None;
        }
        return Some(-c / b);
    }
    let disc = b.clone() * b.clone() - F::from_i64(4) * a.clone() * c;
    let s = disc.sqrt()?;
    Some((-b + s) / (F::from_i64(2) * a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{example_pencil, P1Value};
    use numeric::{BigC, Qi, Rat};

    #[test]
    fn reducible_member_has_zero_discriminant() {
        // The k = 0 member of the running example factors, so Δ = 0 exactly.
        let p = example_pencil(Rat::from_int(2));
        let member = p.member(&P1Value::Finite(Qi::zero()));
        let red = schwartz_reduce(&member.poly).unwrap();
        assert!(red.weierstrass.discriminant.is_zero());
    }

    #[test]
    fn smooth_member_nonzero_discriminant() {
        let p = example_pencil(Rat::from_int(2));
        let member = p.member(&P1Value::Finite(Qi::one()));
        let red = schwartz_reduce(&member.poly).unwrap();
        assert!(!red.weierstrass.discriminant.is_zero());
    }

    #[test]
    fn certificate_on_random_curves() {
        // Random rational bi-quadratics, reduced numerically; sampled curve
        // points must satisfy the Weierstrass equation to 1e−10 at 64-bit
        // precision and far better at 192 bits.
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        let prec = 192;
        let mut tested = 0;
        while tested < 6 {
            let mut coeffs = vec![vec![BigC::zero_p(prec); 3]; 3];
            for row in coeffs.iter_mut() {
                for c in row.iter_mut() {
                    *c = BigC::from_i64_p(rng.gen_range(-9i64..=9), prec);
                }
            }
            let curve = BiPoly::new(coeffs);
            let Ok(red) = schwartz_reduce(&curve) else {
                continue;
            };
            let mut samples = 0;
            let mut worst = 0f64;
            for t in 1..40 {
                if samples >= 20 {
                    break;
                }
                let x = BigC::from_f64_p(0.17 * t as f64 - 2.0, 0.05 * t as f64, prec);
                let Some(y) = y_on_curve(&curve, &x) else {
                    continue;
                };
                // Skip points too close to the reduction pivot.
                let res = red.certificate_residual(&x, &y);
                let mag = res.approx_mag();
                if mag.is_finite() {
                    worst = worst.max(mag);
                    samples += 1;
                }
            }
            if samples >= 10 {
                assert!(worst < 1e-30, "residual {worst:e}");
                tested += 1;
            }
        }
    }
}
