use crate::field::Field;
use crate::rat::Rat;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Gaussian rational `re + im·i` with exact rational parts.
///
/// This is the default exact field: the example surfaces live in `ℚ(i, a)`
/// with rational `a`, so every exact computation in the pipeline closes here.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Qi {
    pub re: Rat,
    pub im: Rat,
}

impl Qi {
    pub fn new(re: Rat, im: Rat) -> Self {
        Qi { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        Qi { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Qi::from_rat(Rat::from_int(n))
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Qi { re: Rat::from_int(re), im: Rat::from_int(im) }
    }

    pub fn i() -> Self {
        Qi { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Qi {
        Qi { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|²` as an exact rational.
    pub fn norm_sq(&self) -> Rat {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    /// Exact square root inside `ℚ(i)` when one exists.
    ///
    /// For `z = c + d·i` a square root `u + v·i` requires `u² − v² = c` and
    /// `2uv = d`, which forces `c² + d²` to be a rational square and then
    /// `(c + √(c²+d²))/2` to be one as well.
    pub fn sqrt_exact(&self) -> Option<Qi> {
        if self.is_zero() {
            return Some(Qi::default());
        }
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return self.re.sqrt_exact().map(Qi::from_rat);
            }
            let u = (-self.re.clone()).sqrt_exact()?;
            return Some(Qi { re: Rat::zero(), im: u });
        }
        let n = self.norm_sq().sqrt_exact()?;
        let half = Rat::new(1, 2);
        let u2 = (self.re.clone() + &n) * &half;
        let u = u2.sqrt_exact()?;
        if u.is_zero() {
            return None;
        }
        let v = self.im.clone() * &half / &u;
        let cand = Qi { re: u, im: v };
        debug_assert_eq!(cand.clone() * cand.clone(), *self);
        Some(cand)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im == Rat::one() {
                return write!(f, "i");
            }
            if self.im == -Rat::one() {
                return write!(f, "-i");
            }
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            let a = -self.im.clone();
            if a == Rat::one() {
                write!(f, "{}-i", self.re)
            } else {
                write!(f, "{}-{}*i", self.re, a)
            }
        } else if self.im == Rat::one() {
            write!(f, "{}+i", self.re)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

/// Parses "9/4", "-3", "10*i", "2+3i", "1/2-2/3*i", "i", "-i".
impl FromStr for Qi {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty scalar".into());
        }
        // Split into one or two signed terms.
        let bytes = compact.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' && bytes[idx - 1] != b'+' && bytes[idx - 1] != b'-' {
                split = Some(idx);
            }
        }
        let (first, second) = match split {
            Some(idx) => (&compact[..idx], Some(&compact[idx..])),
            None => (&compact[..], None),
        };
        let mut out = Qi::default();
        for term in std::iter::once(first).chain(second) {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            let (imaginary, mag) = if let Some(rest) = body.strip_suffix("*i") {
                (true, rest)
            } else if let Some(rest) = body.strip_suffix('i') {
                (true, rest)
            } else {
                (false, body)
            };
            let mut val = if imaginary && mag.is_empty() {
                Rat::one()
            } else {
                Rat::from_str(mag)?
            };
            if neg {
                val = -val;
            }
            if imaginary {
                out.im = out.im + val;
            } else {
                out.re = out.re + val;
            }
        }
        Ok(out)
    }
}

impl Add for Qi {
    type Output = Qi;
    fn add(self, rhs: Qi) -> Qi {
        Qi { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for Qi {
    type Output = Qi;
    fn sub(self, rhs: Qi) -> Qi {
        Qi { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for Qi {
    type Output = Qi;
    fn mul(self, rhs: Qi) -> Qi {
        let re = self.re.clone() * &rhs.re - self.im.clone() * &rhs.im;
        let im = self.re * &rhs.im + self.im * &rhs.re;
        Qi { re, im }
    }
}

impl Div for Qi {
    type Output = Qi;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Qi) -> Qi {
        self * rhs.inv()
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi { re: -self.re, im: -self.im }
    }
}

impl Field for Qi {
    fn zero() -> Self {
        Qi::default()
    }
    fn one() -> Self {
        Qi::from_int(1)
    }
    fn from_i64(n: i64) -> Self {
        Qi::from_int(n)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero");
        let ninv = n.inv();
        Qi { re: self.re.clone() * &ninv, im: -self.im.clone() * &ninv }
    }
    fn approx_mag(&self) -> f64 {
        let (a, b) = self.to_f64_pair();
        (a * a + b * b).sqrt()
    }
    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    const EXACT: bool = true;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["9/4", "-3", "10*i", "2+3*i", "1/2-2/3*i", "i", "-i", "0"] {
            let z: Qi = s.parse().unwrap();
            let again: Qi = z.to_string().parse().unwrap();
            assert_eq!(z, again, "{s}");
        }
        let z: Qi = "2+3i".parse().unwrap();
        assert_eq!(z, Qi::from_ints(2, 3));
    }

    #[test]
    fn sqrt_cases() {
        // sqrt(-100) = 10i
        let z = Qi::from_int(-100);
        assert_eq!(z.sqrt_exact().unwrap(), Qi::from_ints(0, 10));
        // sqrt(2i) = 1+i
        let z = Qi::from_ints(0, 2);
        assert_eq!(z.sqrt_exact().unwrap(), Qi::from_ints(1, 1));
        // sqrt(2) not in Qi
        assert!(Qi::from_int(2).sqrt_exact().is_none());
        // sqrt(9/4) = 3/2
        let z = Qi::from_rat(Rat::new(9, 4));
        assert_eq!(z.sqrt_exact().unwrap(), Qi::from_rat(Rat::new(3, 2)));
    }

    #[test]
    fn field_ops() {
        let a = Qi::from_ints(2, 3);
        let b = Qi::from_ints(-1, 4);
        let q = a.clone() / b.clone();
        assert_eq!(q * b, a);
    }
}
