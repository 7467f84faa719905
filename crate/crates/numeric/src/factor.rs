//! Exact factorization over the Gaussian rationals, scoped to the low
//! bidegrees that arise from bi-quadratic pencils and their pull-backs.

use crate::bigc::BigC;
use crate::field::Field;
use crate::gauss::Qi;
use crate::poly::{BiPoly, UniPoly};
use crate::recognize::recognize_qi;
use crate::roots::roots_of_qi_poly;

const ROOT_PREC: u32 = 320;
const DEN_BITS: u32 = 96;

/// A factorization `unit · Π factor_i^{mult_i}`. `complete` is false when a
/// residual piece resisted the implemented splitting patterns.
#[derive(Clone, Debug)]
pub struct UniFactorization {
    pub unit: Qi,
    pub factors: Vec<(UniPoly<Qi>, usize)>,
    pub complete: bool,
}

/// Roots in `ℚ(i)` of a univariate polynomial, with multiplicities, plus the
/// unsplit remainder (monic, possibly constant 1).
pub fn qi_roots(p: &UniPoly<Qi>) -> (Vec<(Qi, usize)>, UniPoly<Qi>) {
    let f = factor_uni(p);
    let mut roots = Vec::new();
    let mut rest = UniPoly::constant(Qi::one());
    for (g, m) in f.factors {
        if g.degree() == Some(1) {
            let root = -g.coeff(0) / g.coeff(1);
            roots.push((root, m));
        } else {
            for _ in 0..m {
                rest = rest * g.clone();
            }
        }
    }
    (roots, rest)
}

/// Factor a univariate polynomial over `ℚ(i)`.
///
/// Strategy: Yun square-free decomposition, then per square-free part root
/// subsets are matched against numeric Durand–Kerner roots: a subset of
/// numeric roots whose elementary symmetric functions are recognized as
/// Gaussian rationals and verified by exact division yields a factor.
/// Degree ≤ 2 parts are handled by the exact quadratic formula.
pub fn factor_uni(p: &UniPoly<Qi>) -> UniFactorization {
    let mut out = UniFactorization {
        unit: Qi::one(),
        factors: vec![],
        complete: true,
    };
    if p.is_zero() {
        out.unit = Qi::zero();
        return out;
    }
    out.unit = p.leading();
    if p.degree() == Some(0) {
        return out;
    }
    for (part, mult) in p.squarefree_decomposition() {
        let (fs, complete) = factor_squarefree(&part);
        out.complete &= complete;
        for f in fs {
            out.factors.push((f, mult));
        }
    }
    // Deterministic order.
    out.factors
        .sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| format!("{}", a.0).cmp(&format!("{}", b.0))));
    debug_assert!({
        let mut prod = UniPoly::constant(out.unit.clone());
        for (f, m) in &out.factors {
            for _ in 0..*m {
                prod = prod * f.clone();
            }
        }
        !out.complete || prod == *p
    });
    out
}

fn factor_squarefree(p: &UniPoly<Qi>) -> (Vec<UniPoly<Qi>>, bool) {
    let mut fs = Vec::new();
    let mut rem = p.monic();
    loop {
        match rem.degree() {
            None | Some(0) => return (fs, true),
            Some(1) => {
                fs.push(rem.clone());
                return (fs, true);
            }
            Some(2) => {
                match split_quadratic(&rem) {
                    Some((a, b)) => {
                        fs.push(a);
                        fs.push(b);
                    }
                    None => fs.push(rem.clone()),
                }
                return (fs, true);
            }
            Some(_) => {}
        }
        match extract_by_root_subsets(&rem) {
            Some((f, q)) => {
                fs.push(f);
                rem = q.monic();
            }
            None => {
                // No proper factor found. Cubics with no roots are certainly
                // irreducible; quartics were searched exhaustively over root
                // pairs; larger leftovers are reported as-is.
                let certain = rem.deg() <= 4;
                fs.push(rem.clone());
                return (fs, certain);
            }
        }
    }
}

/// Quadratic formula with exact square roots in `ℚ(i)`.
fn split_quadratic(p: &UniPoly<Qi>) -> Option<(UniPoly<Qi>, UniPoly<Qi>)> {
    let a = p.coeff(2);
    let b = p.coeff(1);
    let c = p.coeff(0);
    let disc = b.clone() * b.clone() - Qi::from_int(4) * a.clone() * c;
    let s = disc.sqrt_exact()?;
    let two_a = a.clone() + a;
    let r1 = (-b.clone() + s.clone()) / two_a.clone();
    let r2 = (-b - s) / two_a;
    Some((UniPoly::linear_root(r1), UniPoly::linear_root(r2)))
}

/// Search proper monic factors of a square-free polynomial by recognizing
/// subsets of its numeric roots. Returns a factor together with the exact
/// cofactor. Subsets are enumerated smallest-first so linear factors appear
/// before quadratics.
fn extract_by_root_subsets(p: &UniPoly<Qi>) -> Option<(UniPoly<Qi>, UniPoly<Qi>)> {
    let d = p.degree()?;
    let roots = roots_of_qi_poly(p, ROOT_PREC);
    if roots.len() != d {
        return None;
    }
    let max_size = d / 2;
    for size in 1..=max_size {
        for idx in combinations(d, size) {
            if let Some(f) = candidate_from_subset(&roots, &idx) {
                if let Some(q) = p.div_exact(&f) {
                    return Some((f, q));
                }
            }
        }
    }
    None
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn candidate_from_subset(roots: &[BigC], idx: &[usize]) -> Option<UniPoly<Qi>> {
    let sel: Vec<BigC> = idx.iter().map(|&i| roots[i].clone()).collect();
    let num = UniPoly::from_roots(&sel);
    let mut coeffs = Vec::with_capacity(num.coeffs.len());
    for c in &num.coeffs {
        coeffs.push(recognize_qi(c, DEN_BITS)?);
    }
    Some(UniPoly::new(coeffs))
}

/// A bivariate factorization: `unit · x^{xm} y^{ym} · Π factor^{mult}`.
#[derive(Clone, Debug)]
pub struct BiFactorization {
    pub unit: Qi,
    pub x_power: usize,
    pub y_power: usize,
    pub factors: Vec<(BiPoly<Qi>, usize)>,
    pub complete: bool,
}

impl BiFactorization {
    pub fn product(&self) -> BiPoly<Qi> {
        let mut p = BiPoly::monomial(self.unit.clone(), self.x_power, self.y_power);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                p = p * f.clone();
            }
        }
        p
    }
}

/// Factor a bivariate polynomial over `ℚ(i)` into irreducibles.
///
/// Handles the patterns occurring in bi-quadratic pencils: monomial factors,
/// content in either variable (univariate factors), linear-in-`y` factors
/// (which include all bidegree-(·,1) components) and, for `y`-quadratics,
/// the split through a polynomial square root of the discriminant. Residues
/// of `y`-degree ≥ 3 are retried with the axes swapped; whatever survives is
/// reported with `complete = false` unless its bidegree guarantees
/// irreducibility.
pub fn factor_bi(p: &BiPoly<Qi>) -> BiFactorization {
    let mut out = BiFactorization {
        unit: Qi::one(),
        x_power: 0,
        y_power: 0,
        factors: vec![],
        complete: true,
    };
    if p.is_zero() {
        out.unit = Qi::zero();
        return out;
    }
    let mut work = p.clone();
    // Monomial content.
    let (dx, dy) = work.bidegree();
    let xm = (0..=dx)
        .take_while(|&i| (0..=dy).all(|j| work.coeff(i, j).is_zero()))
        .count();
    if xm > 0 {
        out.x_power = xm;
        work = work.div_exact(&BiPoly::monomial(Qi::one(), xm, 0)).unwrap();
    }
    let (dx, dy) = work.bidegree();
    let ym = (0..=dy)
        .take_while(|&j| (0..=dx).all(|i| work.coeff(i, j).is_zero()))
        .count();
    if ym > 0 {
        out.y_power = ym;
        work = work.div_exact(&BiPoly::monomial(Qi::one(), 0, ym)).unwrap();
    }
    factor_bi_inner(&work, &mut out, false);
    out.factors.sort_by(|a, b| {
        let ka = a.0.bidegree();
        let kb = b.0.bidegree();
        (ka.0 + ka.1, format!("{}", a.0)).cmp(&(kb.0 + kb.1, format!("{}", b.0)))
    });
    debug_assert!(!out.complete || out.product() == *p);
    out
}

fn push_factor(out: &mut BiFactorization, f: BiPoly<Qi>) {
    if f.is_constant() {
        out.unit = out.unit.clone() * f.coeff(0, 0);
        return;
    }
    // Normalize: leading graded-lex coefficient 1.
    let n = f.graded_lex_normalize();
    let scale = f.clone().div_exact(&n).unwrap().coeff(0, 0);
    out.unit = out.unit.clone() * scale;
    for (g, m) in out.factors.iter_mut() {
        if *g == n {
            *m += 1;
            return;
        }
    }
    out.factors.push((n, 1));
}

fn factor_bi_inner(p: &BiPoly<Qi>, out: &mut BiFactorization, swapped: bool) {
    if p.is_constant() {
        push_factor(out, p.clone());
        return;
    }
    // Univariate in x only.
    if p.deg_y() == 0 {
        let u = UniPoly::new(p.coeffs.iter().map(|r| r[0].clone()).collect());
        let f = factor_uni(&u);
        out.complete &= f.complete;
        push_factor(out, BiPoly::constant(f.unit.clone()));
        for (g, m) in f.factors {
            let gb = BiPoly::from_unipoly_x(&g);
            let gb = if swapped { gb.swap_xy() } else { gb };
            for _ in 0..m {
                push_factor(out, gb.clone());
            }
        }
        return;
    }
    if p.deg_x() == 0 {
        let q = p.swap_xy();
        // Reuse the x-only branch with roles swapped.
        let u = UniPoly::new(q.coeffs.iter().map(|r| r[0].clone()).collect());
        let f = factor_uni(&u);
        out.complete &= f.complete;
        push_factor(out, BiPoly::constant(f.unit.clone()));
        for (g, m) in f.factors {
            let gb = BiPoly::from_unipoly_x(&g).swap_xy();
            let gb = if swapped { gb.swap_xy() } else { gb };
            for _ in 0..m {
                push_factor(out, gb.clone());
            }
        }
        return;
    }
    // Content in x.
    let content = p.content_x();
    if content.degree().is_some_and(|d| d > 0) {
        let cb = BiPoly::from_unipoly_x(&content);
        let rest = p.div_exact(&cb).expect("content divides");
        factor_bi_inner(&cb, out, swapped);
        factor_bi_inner(&rest, out, swapped);
        return;
    }
    match p.deg_y() {
        1 => {
            // Primitive and linear in y: irreducible.
            let f = if swapped { p.swap_xy() } else { p.clone() };
            push_factor(out, f);
        }
        2 => {
            let cols = p.y_coefficients();
            let (a, b, c) = (cols[2].clone(), cols[1].clone(), cols[0].clone());
            let disc = b.clone() * b.clone()
                - UniPoly::constant(Qi::from_int(4)) * a.clone() * c.clone();
            match disc.sqrt_exact(|lc| lc.sqrt_exact()) {
                Some(r) => {
                    // p = (1/4a)(2ay + b − r)(2ay + b + r); extract contents.
                    let two_a = a.scale(&Qi::from_int(2));
                    let f1 = BiPoly::from_y_coefficients(&[
                        (b.clone() - r.clone()).scale(&Qi::new(crate::rat::Rat::new(1, 2), crate::rat::Rat::zero())),
                        two_a.clone().scale(&Qi::new(crate::rat::Rat::new(1, 2), crate::rat::Rat::zero())),
                    ]);
                    // f1 = a y + (b−r)/2; divide out its x-content.
                    let c1 = f1.content_x();
                    let prim1 = f1
                        .div_exact(&BiPoly::from_unipoly_x(&c1))
                        .expect("content divides");
                    let rest = p.div_exact(&prim1).expect("discriminant split divides");
                    factor_bi_inner(&prim1, out, swapped);
                    factor_bi_inner(&rest, out, swapped);
                }
                None => {
                    // Primitive y-quadratic with non-square discriminant is
                    // irreducible over ℚ(i).
                    let f = if swapped { p.swap_xy() } else { p.clone() };
                    push_factor(out, f);
                }
            }
        }
        _ => {
            if !swapped && p.deg_x() <= 2 {
                factor_bi_inner(&p.swap_xy(), out, true);
            } else {
                let f = if swapped { p.swap_xy() } else { p.clone() };
                push_factor(out, f);
                out.complete = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;

    fn qi(n: i64) -> Qi {
        Qi::from_int(n)
    }

    #[test]
    fn uni_gaussian_roots() {
        // k² + 100 = (k−10i)(k+10i)
        let p = UniPoly::new(vec![qi(100), qi(0), qi(1)]);
        let (roots, rest) = qi_roots(&p);
        assert!(rest.degree() == Some(0) || rest.is_zero() || rest == UniPoly::constant(qi(1)));
        let mut vals: Vec<Qi> = roots.iter().map(|(r, _)| r.clone()).collect();
        vals.sort_by_key(|v| v.im.is_negative());
        assert_eq!(vals, vec![Qi::from_ints(0, 10), Qi::from_ints(0, -10)]);
    }

    #[test]
    fn uni_with_multiplicity() {
        // (x − 3/2)² (x² − 2) — the quadratic is irreducible over ℚ(i).
        let lin = UniPoly::linear_root(Qi::from_rat(Rat::new(3, 2)));
        let quad = UniPoly::new(vec![qi(-2), qi(0), qi(1)]);
        let p = lin.clone() * lin.clone() * quad.clone();
        let f = factor_uni(&p);
        assert!(f.complete);
        assert_eq!(f.factors.len(), 2);
        assert!(f.factors.contains(&(lin.monic(), 2)));
        assert!(f.factors.contains(&(quad, 1)));
    }

    #[test]
    fn quartic_into_quadratics() {
        // (x²−2)(x²−3): no rational roots, splits via root-pair search.
        let a = UniPoly::new(vec![qi(-2), qi(0), qi(1)]);
        let b = UniPoly::new(vec![qi(-3), qi(0), qi(1)]);
        let p = a.clone() * b.clone();
        let f = factor_uni(&p);
        assert!(f.complete);
        assert_eq!(f.factors.len(), 2);
        assert!(f.factors.contains(&(a, 1)));
        assert!(f.factors.contains(&(b, 1)));
    }

    #[test]
    fn bi_product_of_lines_and_conic() {
        // x · (y−1) · (xy + 2x + 3y − 1)
        let f1 = BiPoly::<Qi>::x();
        let f2 = BiPoly::y() - BiPoly::constant(qi(1));
        let f3 = BiPoly::monomial(qi(1), 1, 1) + BiPoly::monomial(qi(2), 1, 0)
            + BiPoly::monomial(qi(3), 0, 1)
            - BiPoly::constant(qi(1));
        let p = f1.clone() * f2.clone() * f3.clone();
        let f = factor_bi(&p);
        assert!(f.complete);
        assert_eq!(f.x_power, 1);
        assert_eq!(f.product(), p);
        assert_eq!(f.factors.len(), 2);
    }

    #[test]
    fn bi_two_conics() {
        // The k = 0 fiber of the running example with a = 2:
        // (xy + 2(x+y) − 1)(xy + (x+y)/2 − 1)
        let half = Qi::from_rat(Rat::new(1, 2));
        let d0 = BiPoly::monomial(qi(1), 1, 1)
            + BiPoly::monomial(qi(2), 1, 0)
            + BiPoly::monomial(qi(2), 0, 1)
            - BiPoly::constant(qi(1));
        let d1 = BiPoly::monomial(qi(1), 1, 1)
            + BiPoly::monomial(half.clone(), 1, 0)
            + BiPoly::monomial(half, 0, 1)
            - BiPoly::constant(qi(1));
        let p = d0.clone() * d1.clone();
        let f = factor_bi(&p);
        assert!(f.complete);
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.product(), p);
        for (g, m) in &f.factors {
            assert_eq!(*m, 1);
            assert!(g.div_exact(&d0).is_some() || g.div_exact(&d1).is_some() ||
                    d0.div_exact(g).is_some() || d1.div_exact(g).is_some());
        }
    }

    #[test]
    fn bi_irreducible_nodal() {
        // x²y² + xy + x² + y² + 1 has non-square y-discriminant: irreducible.
        let p = BiPoly::monomial(qi(1), 2, 2)
            + BiPoly::monomial(qi(1), 1, 1)
            + BiPoly::monomial(qi(1), 2, 0)
            + BiPoly::monomial(qi(1), 0, 2)
            + BiPoly::constant(qi(1));
        let f = factor_bi(&p);
        assert!(f.complete);
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 1);
    }
}
