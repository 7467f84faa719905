use crate::field::Field;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`.
/// Invariant: no trailing zero coefficients (the zero polynomial is empty).
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<F: Field> {
    pub coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![F::zero(), F::one()])
    }

    /// `x - r`
    pub fn linear_root(r: F) -> Self {
        UniPoly::new(vec![-r, F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Homogeneous evaluation of the degree-`d` form `Σ c_i X0^i X1^{d−i}`.
    pub fn eval_proj(&self, x0: &F, x1: &F, d: usize) -> F {
        let mut acc = F::zero();
        let mut pow0 = F::one();
        let mut pows0 = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            pows0.push(pow0.clone());
            pow0 = pow0 * x0.clone();
        }
        let mut pow1 = F::one();
        for i in (0..=d).rev() {
            if i < self.coeffs.len() {
                acc = acc + self.coeffs[i].clone() * pows0[i].clone() * pow1.clone();
            }
            pow1 = pow1 * x1.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * F::from_i64(i as i64))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, s: &F) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly::new(coeffs)
    }

    /// Coefficient reversal of the degree-`d` homogeneous form (`x → 1/x`).
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![F::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// Quotient and remainder; panics if divisor is zero.
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dr = rhs.degree().unwrap();
        let lead_inv = rhs.leading().inv();
        if rem.degree().map_or(true, |d| d < dr) {
            return (UniPoly::zero(), rem);
        }
        let dq = rem.degree().unwrap() - dr;
        let mut q = vec![F::zero(); dq + 1];
        while let Some(d) = rem.degree() {
            if d < dr {
                break;
            }
            let c = rem.leading() * lead_inv.clone();
            let k = d - dr;
            q[k] = c.clone();
            // rem -= c x^k rhs
            for (i, rc) in rhs.coeffs.iter().enumerate() {
                let idx = i + k;
                rem.coeffs[idx] = rem.coeffs[idx].clone() - c.clone() * rc.clone();
            }
            while rem.coeffs.last().is_some_and(|c| c.is_zero()) {
                rem.coeffs.pop();
            }
        }
        (UniPoly::new(q), rem)
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.divrem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd via Euclid. Intended for exact fields.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Yun's square-free decomposition: returns `(g_i, m_i)` with
    /// `p = lead · Π g_i^{m_i}`, the `g_i` monic, square-free, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(F::EXACT, "square-free decomposition requires exact arithmetic");
        let mut out = Vec::new();
        if self.degree().map_or(true, |d| d == 0) {
            return out;
        }
        let p = self.monic();
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.div_exact(&a0).expect("gcd divides");
        let mut c = dp.div_exact(&a0).expect("gcd divides");
        let mut i = 1usize;
        loop {
            let d = c.clone() - b.derivative();
            let g = b.gcd(&d);
            if g.degree().is_some_and(|dg| dg > 0) {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g).expect("gcd divides");
            c = d.div_exact(&g).expect("gcd divides");
            i += 1;
            if b.degree().map_or(true, |d| d == 0) {
                break;
            }
        }
        out
    }

    /// `Π (x - r)` over the given roots.
    pub fn from_roots(roots: &[F]) -> Self {
        let mut p = UniPoly::constant(F::one());
        for r in roots {
            p = p * UniPoly::linear_root(r.clone());
        }
        p
    }

    /// Exact polynomial square root, if one exists (exact fields).
    pub fn sqrt_exact(&self, sqrt_leading: impl Fn(&F) -> Option<F>) -> Option<Self> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let d = self.degree().unwrap();
        if d % 2 != 0 {
            return None;
        }
        let m = d / 2;
        let lead = sqrt_leading(&self.leading())?;
        let mut r = vec![F::zero(); m + 1];
        r[m] = lead.clone();
        let two_lead_inv = (lead.clone() + lead).inv();
        // Solve top-down: coefficient of x^{2m−k} in r² equals self's. The
        // only term containing the unknown r_{m−k} is 2·r_m·r_{m−k}; sum the
        // known ordered pairs (i, j) with i + j = 2m−k and i, j > m−k.
        for k in 1..=m {
            let mut s = F::zero();
            for i in (m - k + 1)..=m {
                let j = (2 * m - k) as i64 - i as i64;
                if j < 0 {
                    continue;
                }
                let j = j as usize;
                if j > m || j <= m - k {
                    continue;
                }
                s = s + r[i].clone() * r[j].clone();
            }
            r[m - k] = (self.coeff(2 * m - k) - s) * two_lead_inv.clone();
        }
        let cand = UniPoly::new(r);
        let sq = cand.clone() * cand.clone();
        if sq == *self {
            Some(cand)
        } else {
            None
        }
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*x^{i}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Add for UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: UniPoly<F>) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            coeffs.push(a + b);
        }
        UniPoly::new(coeffs)
    }
}

impl<F: Field> Sub for UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: UniPoly<F>) -> UniPoly<F> {
        self + (-rhs)
    }
}

impl<F: Field> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Field> Mul for UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: UniPoly<F>) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::Qi;
    use crate::rat::Rat;

    fn qi(n: i64) -> Qi {
        Qi::from_int(n)
    }

    #[test]
    fn divrem_gcd() {
        // (x²-1) = (x-1)(x+1)
        let p = UniPoly::new(vec![qi(-1), qi(0), qi(1)]);
        let a = UniPoly::linear_root(qi(1));
        let b = UniPoly::linear_root(qi(-1));
        assert_eq!(p.div_exact(&a).unwrap(), b);
        let g = p.gcd(&a);
        assert_eq!(g, a.monic());
    }

    #[test]
    fn squarefree() {
        // (x-1)²(x+2)³
        let p = UniPoly::from_roots(&[qi(1), qi(1), qi(-2), qi(-2), qi(-2)]);
        let sf = p.squarefree_decomposition();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (UniPoly::linear_root(qi(1)), 2));
        assert_eq!(sf[1], (UniPoly::linear_root(qi(-2)), 3));
    }

    #[test]
    fn poly_sqrt() {
        // (2x² + 3x - 5)²
        let r = UniPoly::new(vec![Qi::from_int(-5), Qi::from_int(3), Qi::from_int(2)]);
        let q = r.clone() * r.clone();
        let s = q.sqrt_exact(|c| c.sqrt_exact()).unwrap();
        assert!(s == r || s == -r.clone());
        // Non-square
        let ns = UniPoly::new(vec![Qi::from_int(1), Qi::from_int(1), Qi::from_int(1)]) * r.clone();
        assert!(ns.sqrt_exact(|c| c.sqrt_exact()).is_none());
        let _ = Rat::one();
    }
}
