use crate::field::Field;
use rug::Rational;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Exact rational number, a thin wrapper over GMP rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Rat(pub Rational);

impl Rat {
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rat(Rational::from((n, d)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(Rational::from(n))
    }

    pub fn numer_i64(&self) -> Option<i64> {
        self.0.numer().to_i64()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.clone().abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0 < 0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Exact square root when the rational is a perfect square.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.0 < 0 {
            return None;
        }
        let num = self.0.numer();
        let den = self.0.denom();
        if num.is_perfect_square() && den.is_perfect_square() {
            let sn = num.clone().sqrt();
            let sd = den.clone().sqrt();
            Some(Rat(Rational::from((sn, sd))))
        } else {
            None
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        // Accept integers and fractions such as "-9/4".
        Rational::from_str(s)
            .map(|q| Rat(q))
            .map_err(|e| format!("cannot parse rational {s:?}: {e}"))
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);
rat_binop!(Div, div, /);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(Rational::new())
    }
    fn one() -> Self {
        Rat(Rational::from(1))
    }
    fn from_i64(n: i64) -> Self {
        Rat(Rational::from(n))
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "division by zero");
        Rat(Rational::from(self.0.clone().recip()))
    }
    fn approx_mag(&self) -> f64 {
        self.0.to_f64().abs()
    }
    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    const EXACT: bool = true;
}
