use crate::bigc::BigC;
use crate::field::Field;
use crate::gauss::Qi;
use crate::poly::UniPoly;
use rug::Float;

/// All complex roots of a polynomial by Durand–Kerner (Weierstrass) iteration
/// at the given precision. Intended for square-free inputs; multiple roots
/// still converge but only linearly, so factor multiplicities out first.
pub fn durand_kerner(poly: &UniPoly<BigC>, prec: u32) -> Vec<BigC> {
    let n = match poly.degree() {
        None | Some(0) => return vec![],
        Some(n) => n,
    };
    let monic = poly.monic();
    let p: Vec<BigC> = monic.coeffs.iter().map(|c| c.with_prec(prec)).collect();
    let monic = UniPoly::new(p);
    // Cauchy-style radius bound.
    let radius = monic
        .coeffs
        .iter()
        .take(n)
        .map(|c| c.approx_mag())
        .fold(0.0f64, f64::max)
        + 1.0;
    let mut w: Vec<BigC> = Vec::with_capacity(n);
    let seed = BigC::from_f64_p(0.4, 0.9, prec);
    let mut cur = BigC::from_f64_p(radius.min(1e100), 0.0, prec) * seed.clone();
    for _ in 0..n {
        w.push(cur.clone());
        cur = cur * seed.clone();
        // Nudge off any symmetric configuration.
        cur = cur + BigC::from_f64_p(1e-3, 2e-3, prec);
    }
    let tol = Float::with_val(prec, 2f64).pow_int(-((prec as i64) - 12));
    for _ in 0..600 {
        let mut max_step = Float::with_val(prec, 0);
        for i in 0..n {
            let pv = monic.eval(&w[i]);
            let mut den = BigC::from_i64_p(1, prec);
            for j in 0..n {
                if i != j {
                    den = den * (w[i].clone() - w[j].clone());
                }
            }
            if den.is_zero() {
                w[i] = w[i].clone() + BigC::from_f64_p(1e-6, -3e-6, prec);
                max_step = Float::with_val(prec, 1);
                continue;
            }
            let step = pv / den;
            let sm = step.abs();
            if sm > max_step {
                max_step = sm;
            }
            w[i] = w[i].clone() - step;
        }
        let wscale = w
            .iter()
            .map(|z| z.abs())
            .fold(Float::with_val(prec, 1), |a, b| if b > a { b } else { a });
        if max_step < Float::with_val(prec, &tol * &wscale) {
            break;
        }
    }
    // Deterministic order: by real part, then imaginary.
    w.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    w
}

/// Numeric roots of an exact polynomial.
pub fn roots_of_qi_poly(p: &UniPoly<Qi>, prec: u32) -> Vec<BigC> {
    let pc = UniPoly::new(p.coeffs.iter().map(|c| BigC::from_qi_p(c, prec)).collect());
    durand_kerner(&pc, prec)
}

trait PowInt {
    fn pow_int(self, e: i64) -> Float;
}

impl PowInt for Float {
    fn pow_int(self, e: i64) -> Float {
        let p = self.prec();
        let mut acc = Float::with_val(p, 1);
        let mut base = if e < 0 {
            Float::with_val(p, 1) / self
        } else {
            self
        };
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = Float::with_val(p, &acc * &base);
            }
            base = Float::with_val(p, &base * &base);
            k >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_roots() {
        // (x-1)(x-2)(x-3i)
        let prec = 192;
        let r1 = BigC::from_i64_p(1, prec);
        let r2 = BigC::from_i64_p(2, prec);
        let r3 = BigC::from_f64_p(0.0, 3.0, prec);
        let p = UniPoly::from_roots(&[r1.clone(), r2.clone(), r3.clone()]);
        let roots = durand_kerner(&p, prec);
        assert_eq!(roots.len(), 3);
        for target in [r1, r2, r3] {
            let ok = roots
                .iter()
                .any(|r| (r.clone() - target.clone()).approx_mag() < 1e-40);
            assert!(ok, "missing root {target}");
        }
    }

    #[test]
    fn degree_eight() {
        let prec = 256;
        let roots: Vec<BigC> = (1..=8)
            .map(|k| BigC::from_f64_p(k as f64 * 0.37 - 1.5, (k % 3) as f64 - 1.0, prec))
            .collect();
        let p = UniPoly::from_roots(&roots);
        let found = durand_kerner(&p, prec);
        for t in &roots {
            let best = found
                .iter()
                .map(|r| (r.clone() - t.clone()).approx_mag())
                .fold(f64::MAX, f64::min);
            assert!(best < 1e-50, "best residual {best}");
        }
    }
}
