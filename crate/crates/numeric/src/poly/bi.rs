use super::UniPoly;
use crate::field::Field;
use crate::linalg::Mat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense bivariate polynomial; `coeffs[i][j]` multiplies `x^i y^j`.
/// Invariant: trimmed so the outermost row/column are nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct BiPoly<F: Field> {
    pub coeffs: Vec<Vec<F>>,
}

impl<F: Field> BiPoly<F> {
    pub fn new(coeffs: Vec<Vec<F>>) -> Self {
        let mut p = BiPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let width = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(0);
        for row in &mut self.coeffs {
            row.resize(width, F::zero());
        }
        // Drop zero high-degree x rows.
        while self
            .coeffs
            .last()
            .is_some_and(|r| r.iter().all(|c| c.is_zero()))
        {
            self.coeffs.pop();
        }
        // Drop zero high-degree y columns.
        let mut w = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(0);
        while w > 0 && self.coeffs.iter().all(|r| r[w - 1].is_zero()) {
            w -= 1;
        }
        for row in &mut self.coeffs {
            row.truncate(w);
        }
        if self.coeffs.iter().all(|r| r.is_empty()) {
            self.coeffs.clear();
        }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        BiPoly::new(vec![vec![c]])
    }

    pub fn one() -> Self {
        BiPoly::constant(F::one())
    }

    pub fn x() -> Self {
        BiPoly::new(vec![vec![F::zero()], vec![F::one()]])
    }

    pub fn y() -> Self {
        BiPoly::new(vec![vec![F::zero(), F::one()]])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.deg_x() == 0 && self.deg_y() == 0
    }

    pub fn deg_x(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs.first().map_or(0, |r| r.len()).saturating_sub(1)
    }

    pub fn bidegree(&self) -> (usize, usize) {
        // Per-variable degree: x-degree is the largest i with row i nonzero
        // (rows are trimmed), y-degree the largest j with column j nonzero.
        (self.deg_x(), self.deg_y())
    }

    pub fn coeff(&self, i: usize, j: usize) -> F {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Construct a monomial `c·x^i y^j`.
    pub fn monomial(c: F, i: usize, j: usize) -> Self {
        let mut coeffs = vec![vec![F::zero(); j + 1]; i + 1];
        coeffs[i][j] = c;
        BiPoly::new(coeffs)
    }

    pub fn from_unipoly_x(p: &UniPoly<F>) -> Self {
        BiPoly::new(p.coeffs.iter().map(|c| vec![c.clone()]).collect())
    }

    pub fn from_unipoly_y(p: &UniPoly<F>) -> Self {
        BiPoly::new(vec![p.coeffs.clone()])
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = F::zero();
        for row in self.coeffs.iter().rev() {
            let mut rv = F::zero();
            for c in row.iter().rev() {
                rv = rv * y.clone() + c.clone();
            }
            acc = acc * x.clone() + rv;
        }
        acc
    }

    /// Homogeneous evaluation of the bidegree-`(dx, dy)` form
    /// `Σ c_ij X0^i X1^{dx−i} Y0^j Y1^{dy−j}` at `([x0:x1],[y0:y1])`.
    pub fn eval_proj(&self, dx: usize, dy: usize, x0: &F, x1: &F, y0: &F, y1: &F) -> F {
        let pw = |b: &F, n: usize| -> Vec<F> {
            let mut v = Vec::with_capacity(n + 1);
            let mut acc = F::one();
            for _ in 0..=n {
                v.push(acc.clone());
                acc = acc * b.clone();
            }
            v
        };
        let px0 = pw(x0, dx);
        let px1 = pw(x1, dx);
        let py0 = pw(y0, dy);
        let py1 = pw(y1, dy);
        let mut acc = F::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc = acc
                    + c.clone()
                        * px0[i].clone()
                        * px1[dx - i].clone()
                        * py0[j].clone()
                        * py1[dy - j].clone();
            }
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, row)| {
                    row.iter()
                        .map(|c| c.clone() * F::from_i64(i as i64))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn partial_y(&self) -> Self {
        BiPoly::new(
            self.coeffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(j, c)| c.clone() * F::from_i64(j as i64))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: &F) -> Self {
        BiPoly::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.clone() * s.clone()).collect())
                .collect(),
        )
    }

    pub fn swap_xy(&self) -> Self {
        let (dx, dy) = (self.deg_x(), self.deg_y());
        let mut coeffs = vec![vec![F::zero(); dx + 1]; dy + 1];
        for i in 0..=dx {
            for j in 0..=dy {
                coeffs[j][i] = self.coeff(i, j);
            }
        }
        BiPoly::new(coeffs)
    }

    /// Coefficients as a polynomial in `y` over `F[x]`: entry `j` is the
    /// coefficient of `y^j`.
    pub fn y_coefficients(&self) -> Vec<UniPoly<F>> {
        let dy = self.deg_y();
        (0..=dy)
            .map(|j| UniPoly::new(self.coeffs.iter().map(|row| row[j].clone()).collect()))
            .collect()
    }

    pub fn from_y_coefficients(cols: &[UniPoly<F>]) -> Self {
        let dx = cols.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        let mut coeffs = vec![vec![F::zero(); cols.len()]; dx + 1];
        for (j, p) in cols.iter().enumerate() {
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[i][j] = c.clone();
            }
        }
        BiPoly::new(coeffs)
    }

    /// Exact division via a linear solve on the quotient's coefficients.
    /// Returns `None` when `rhs` does not divide `self` over `F`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let (px, py) = (self.deg_x(), self.deg_y());
        let (fx, fy) = (rhs.deg_x(), rhs.deg_y());
        if fx > px || fy > py {
            return None;
        }
        let (gx, gy) = (px - fx, py - fy);
        let nunk = (gx + 1) * (gy + 1);
        let neq = (px + 1) * (py + 1);
        // Equation rows: coefficient of x^a y^b in f·g matches self.
        let mut m: Mat<F> = Mat::zeros(neq, nunk);
        let mut b = Vec::with_capacity(neq);
        for a in 0..=px {
            for bb in 0..=py {
                let row = a * (py + 1) + bb;
                for gi in 0..=gx.min(a) {
                    for gj in 0..=gy.min(bb) {
                        let fi = a - gi;
                        let fj = bb - gj;
                        if fi > fx || fj > fy {
                            continue;
                        }
                        let col = gi * (gy + 1) + gj;
                        let cur = m.get(row, col).clone();
                        m.set(row, col, cur + rhs.coeff(fi, fj));
                    }
                }
                b.push(self.coeff(a, bb));
            }
        }
        let sol = m.solve_least(&b)?;
        let mut coeffs = vec![vec![F::zero(); gy + 1]; gx + 1];
        for gi in 0..=gx {
            for gj in 0..=gy {
                coeffs[gi][gj] = sol[gi * (gy + 1) + gj].clone();
            }
        }
        let g = BiPoly::new(coeffs);
        if g.clone() * rhs.clone() == *self {
            Some(g)
        } else {
            None
        }
    }

    /// Content in `F[x]`: monic gcd of the `y`-coefficients.
    pub fn content_x(&self) -> UniPoly<F> {
        let mut g = UniPoly::zero();
        for c in self.y_coefficients() {
            g = g.gcd(&c);
        }
        g
    }

    /// Substitute polynomials for x and y (used by pull-backs): the result is
    /// `Σ c_ij nx^i dx^{degx−i} ny^j dy^{degy−j}` — the homogeneous-coordinate
    /// composition with numerators and denominators cleared.
    pub fn compose_cleared(
        &self,
        nx: &BiPoly<F>,
        dxp: &BiPoly<F>,
        ny: &BiPoly<F>,
        dyp: &BiPoly<F>,
    ) -> BiPoly<F> {
        let (degx, degy) = (self.deg_x(), self.deg_y());
        let pow = |b: &BiPoly<F>, n: usize| -> Vec<BiPoly<F>> {
            let mut v = Vec::with_capacity(n + 1);
            let mut acc = BiPoly::one();
            for _ in 0..=n {
                v.push(acc.clone());
                acc = acc * b.clone();
            }
            v
        };
        let pnx = pow(nx, degx);
        let pdx = pow(dxp, degx);
        let pny = pow(ny, degy);
        let pdy = pow(dyp, degy);
        let mut acc = BiPoly::zero();
        for i in 0..=degx {
            for j in 0..=degy {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                let term = pnx[i].clone() * pdx[degx - i].clone() * pny[j].clone()
                    * pdy[degy - j].clone();
                acc = acc + term.scale(&c);
            }
        }
        acc
    }

    /// Normalize so the first nonzero coefficient in graded-lex order
    /// (grading by total degree, then lex with x before y) equals one.
    pub fn graded_lex_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (dx, dy) = (self.deg_x(), self.deg_y());
        let mut best: Option<(usize, usize)> = None;
        for i in 0..=dx {
            for j in 0..=dy {
                if self.coeff(i, j).is_zero() {
                    continue;
                }
                let key = (i + j, dx - i);
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        let bkey = (bi + bj, dx - bi);
                        if key < bkey {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        let (i, j) = best.unwrap();
        self.scale(&self.coeff(i, j).inv())
    }

    /// Vanishing multiplicity at an affine point: the largest `m` such that
    /// all partials of total order `< m` vanish (relative to `scale` for
    /// floating fields).
    pub fn multiplicity_at(&self, x: &F, y: &F, scale: f64) -> usize {
        let mut m = 0usize;
        let mut layer = vec![self.clone()];
        loop {
            let all_zero = layer
                .iter()
                .all(|p| p.eval(x, y).is_negligible(scale));
            if !all_zero {
                return m;
            }
            m += 1;
            if m > 8 {
                return m;
            }
            let mut next: Vec<BiPoly<F>> = layer.iter().map(|p| p.partial_x()).collect();
            next.push(layer.last().unwrap().partial_y());
            layer = next;
        }
    }
}

impl<F: Field> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({c})")?;
                if i > 0 {
                    write!(f, "*x^{i}")?;
                }
                if j > 0 {
                    write!(f, "*y^{j}")?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> Add for BiPoly<F> {
    type Output = BiPoly<F>;
    fn add(self, rhs: BiPoly<F>) -> BiPoly<F> {
        let nx = self.coeffs.len().max(rhs.coeffs.len());
        let ny = self
            .coeffs
            .first()
            .map_or(0, |r| r.len())
            .max(rhs.coeffs.first().map_or(0, |r| r.len()));
        let mut coeffs = vec![vec![F::zero(); ny]; nx];
        for (i, row) in coeffs.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c = self.coeff(i, j) + rhs.coeff(i, j);
            }
        }
        BiPoly::new(coeffs)
    }
}

impl<F: Field> Sub for BiPoly<F> {
    type Output = BiPoly<F>;
    fn sub(self, rhs: BiPoly<F>) -> BiPoly<F> {
        self + (-rhs)
    }
}

impl<F: Field> Neg for BiPoly<F> {
    type Output = BiPoly<F>;
    fn neg(self) -> BiPoly<F> {
        BiPoly::new(
            self.coeffs
                .into_iter()
                .map(|row| row.into_iter().map(|c| -c).collect())
                .collect(),
        )
    }
}

impl<F: Field> Mul for BiPoly<F> {
    type Output = BiPoly<F>;
    fn mul(self, rhs: BiPoly<F>) -> BiPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let (ax, ay) = (self.deg_x(), self.deg_y());
        let (bx, by) = (rhs.deg_x(), rhs.deg_y());
        let mut coeffs = vec![vec![F::zero(); ay + by + 1]; ax + bx + 1];
        for i in 0..=ax {
            for j in 0..=ay {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                for k in 0..=bx {
                    for l in 0..=by {
                        let d = rhs.coeff(k, l);
                        if d.is_zero() {
                            continue;
                        }
                        coeffs[i + k][j + l] = coeffs[i + k][j + l].clone() + c.clone() * d;
                    }
                }
            }
        }
        BiPoly::new(coeffs)
    }
}
