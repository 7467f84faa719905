use crate::field::Field;
use crate::gauss::Qi;
use crate::rat::Rat;
use rug::float::Special;
use rug::Float;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision complex number built on MPFR reals.
///
/// Each value carries its own precision; binary operations compute at the
/// larger of the two operand precisions, so exact small constants (integers
/// at the default precision) never degrade high-precision data.
#[derive(Clone, Debug)]
pub struct BigC {
    pub re: Float,
    pub im: Float,
}

/// Precision used for constants produced by the `Field` impl. Integers of
/// ordinary size are exact at this precision, so they promote losslessly.
const CONST_PREC: u32 = 64;

impl BigC {
    pub fn new(re: Float, im: Float) -> Self {
        BigC { re, im }
    }

    pub fn zero_p(prec: u32) -> Self {
        BigC { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn from_f64_p(re: f64, im: f64, prec: u32) -> Self {
        BigC { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn from_i64_p(n: i64, prec: u32) -> Self {
        BigC { re: Float::with_val(prec, n), im: Float::new(prec) }
    }

    pub fn from_rat_p(q: &Rat, prec: u32) -> Self {
        BigC { re: Float::with_val(prec, &q.0), im: Float::new(prec) }
    }

    pub fn from_qi_p(q: &Qi, prec: u32) -> Self {
        BigC {
            re: Float::with_val(prec, &q.re.0),
            im: Float::with_val(prec, &q.im.0),
        }
    }

    pub fn i_p(prec: u32) -> Self {
        BigC { re: Float::new(prec), im: Float::with_val(prec, 1) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Re-round to the given precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        BigC {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    pub fn conj(&self) -> Self {
        BigC { re: self.re.clone(), im: Float::with_val(self.im.prec(), -&self.im) }
    }

    pub fn norm_sq(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, &self.re * &self.re) + Float::with_val(p, &self.im * &self.im)
    }

    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.clone().hypot(&self.im))
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn scale(&self, f: &Float) -> Self {
        let p = self.prec().max(f.prec());
        BigC {
            re: Float::with_val(p, &self.re * f),
            im: Float::with_val(p, &self.im * f),
        }
    }

    /// Complex exponential via real exp and sin/cos.
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let r = Float::with_val(p, self.re.clone().exp());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        BigC {
            re: Float::with_val(p, &r * &c),
            im: Float::with_val(p, &r * &s),
        }
    }

    /// Complex sine: `sin(a+bi) = sin a cosh b + i cos a sinh b`.
    pub fn sin(&self) -> Self {
        let p = self.prec();
        let (sa, ca) = Float::with_val(p, &self.re).sin_cos(Float::new(p));
        let sh = Float::with_val(p, self.im.clone().sinh());
        let ch = Float::with_val(p, self.im.clone().cosh());
        BigC {
            re: Float::with_val(p, &sa * &ch),
            im: Float::with_val(p, &ca * &sh),
        }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.im.is_zero() {
            if self.re >= 0 {
                return BigC { re: self.re.clone().sqrt(), im: Float::new(p) };
            }
            let m = Float::with_val(p, -&self.re).sqrt();
            return BigC { re: Float::new(p), im: m };
        }
        let r = self.abs();
        let u = Float::with_val(p, Float::with_val(p, &r + &self.re) / 2u32).sqrt();
        let mut v = Float::with_val(p, Float::with_val(p, &r - &self.re) / 2u32).sqrt();
        if self.im < 0 {
            v = -v;
        }
        BigC { re: u, im: v }
    }

    pub fn powi(&self, n: i64) -> Self {
        let p = self.prec();
        if n == 0 {
            return BigC::from_i64_p(1, p);
        }
        let mut base = if n < 0 { self.inv() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = BigC::from_i64_p(1, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn nan_p(prec: u32) -> Self {
        BigC {
            re: Float::with_val(prec, Special::Nan),
            im: Float::with_val(prec, Special::Nan),
        }
    }
}

impl PartialEq for BigC {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl fmt::Display for BigC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{:.20e}", self.re.to_f64())
        } else {
            write!(f, "{:.20e}{:+.20e}i", self.re.to_f64(), self.im.to_f64())
        }
    }
}

impl Add for BigC {
    type Output = BigC;
    fn add(self, rhs: BigC) -> BigC {
        let p = self.prec().max(rhs.prec());
        BigC {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl Sub for BigC {
    type Output = BigC;
    fn sub(self, rhs: BigC) -> BigC {
        let p = self.prec().max(rhs.prec());
        BigC {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl Mul for BigC {
    type Output = BigC;
    fn mul(self, rhs: BigC) -> BigC {
        let p = self.prec().max(rhs.prec());
        let re = Float::with_val(p, &self.re * &rhs.re) - Float::with_val(p, &self.im * &rhs.im);
        let im = Float::with_val(p, &self.re * &rhs.im) + Float::with_val(p, &self.im * &rhs.re);
        BigC { re, im }
    }
}

impl Div for BigC {
    type Output = BigC;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: BigC) -> BigC {
        let p = self.prec().max(rhs.prec());
        let d = rhs.with_prec(p).norm_sq();
        let num = self * rhs.conj();
        BigC {
            re: Float::with_val(p, &num.re / &d),
            im: Float::with_val(p, &num.im / &d),
        }
    }
}

impl Neg for BigC {
    type Output = BigC;
    fn neg(self) -> BigC {
        BigC { re: -self.re, im: -self.im }
    }
}

impl Field for BigC {
    fn zero() -> Self {
        BigC::zero_p(CONST_PREC)
    }
    fn one() -> Self {
        BigC::from_i64_p(1, CONST_PREC)
    }
    fn from_i64(n: i64) -> Self {
        BigC::from_i64_p(n, CONST_PREC)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Self {
        let p = self.prec();
        BigC::from_i64_p(1, p) / self.clone()
    }
    fn approx_mag(&self) -> f64 {
        let (a, b) = self.to_f64_pair();
        let m = (a * a + b * b).sqrt();
        if m.is_finite() {
            m
        } else {
            // Fall back to exponent-based estimate for out-of-f64-range values.
            let e = self.abs().get_exp().unwrap_or(0);
            (e as f64 * std::f64::consts::LN_2).exp()
        }
    }
    fn is_negligible(&self, scale: f64) -> bool {
        if self.is_zero() {
            return true;
        }
        // Relative threshold: ~30 bits of headroom below working precision.
        let p = self.prec();
        let thresh = scale * 2f64.powi(-((p.saturating_sub(30)) as i32));
        self.approx_mag() <= thresh
    }
    const EXACT: bool = false;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &BigC, b: &BigC, tol: f64) -> bool {
        (a.clone() - b.clone()).approx_mag() < tol
    }

    #[test]
    fn complex_basics() {
        let p = 128;
        let z = BigC::from_f64_p(1.5, -2.25, p);
        let w = BigC::from_f64_p(0.5, 3.0, p);
        let q = z.clone() / w.clone();
        assert!(close(&(q * w), &z, 1e-35));
        assert!(close(&z.sqrt().powi(2), &z, 1e-35));
    }

    #[test]
    fn exp_and_sin() {
        let p = 192;
        // e^{iπ} = −1
        let pi = Float::with_val(p, rug::float::Constant::Pi);
        let z = BigC::new(Float::new(p), pi.clone());
        let e = z.exp();
        assert!(close(&e, &BigC::from_i64_p(-1, p), 1e-50));
        // sin(i) = i·sinh(1)
        let s = BigC::i_p(p).sin();
        let sh = Float::with_val(p, 1).sinh();
        assert!(close(&s, &BigC::new(Float::new(p), sh), 1e-50));
    }

    #[test]
    fn precision_promotion() {
        let lo = BigC::from_i64(3);
        let hi = BigC::from_f64_p(1.0, 0.0, 256).scale(&Float::with_val(256, 1e-40));
        let s = lo * hi.clone();
        assert_eq!(s.prec(), 256);
    }
}
