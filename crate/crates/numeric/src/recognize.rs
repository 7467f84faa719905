use crate::bigc::BigC;
use crate::gauss::Qi;
use crate::rat::Rat;
use rug::{Float, Integer, Rational};

/// Best rational approximation of an exact dyadic value by continued
/// fractions, accepted when the convergent reproduces the input to within
/// `2^-err_bits` relative error and its denominator stays below `2^den_bits`.
fn rationalize(x: &Float, den_bits: u32, err_bits: u32) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat(Rational::new()));
    }
    let exact = x.to_rational()?;
    // Values far below the working scale (inputs here are O(1)-normalized
    // root products) are rounding residue of an exact zero.
    let zero_floor = Rational::from((1, Integer::from(1) << err_bits));
    if exact.clone().abs() <= zero_floor {
        return Some(Rat(Rational::new()));
    }
    let den_bound = Integer::from(1) << den_bits;
    // Continued fraction expansion of `exact`.
    let mut a = exact.numer().clone();
    let mut b = exact.denom().clone();
    let (mut p0, mut p1) = (Integer::from(1), Integer::from(0));
    let (mut q0, mut q1) = (Integer::from(0), Integer::from(1));
    let tol = {
        let mag = exact.clone().abs();
        let t = Rational::from(mag) / (Rational::from(Integer::from(1) << err_bits));
        if t == 0 {
            Rational::from((1, Integer::from(1) << err_bits))
        } else {
            t
        }
    };
    for _ in 0..10_000 {
        if b == 0 {
            break;
        }
        let (quot, rem) = <(Integer, Integer)>::from(a.div_rem_euc_ref(&b));
        let p = Integer::from(&quot * &p0) + &p1;
        let q = Integer::from(&quot * &q0) + &q1;
        if q > den_bound {
            return None;
        }
        let conv = Rational::from((p.clone(), q.clone()));
        let err = Rational::from(&exact - &conv).abs();
        if err <= tol {
            return Some(Rat(conv));
        }
        p1 = p0;
        p0 = p;
        q1 = q0;
        q0 = q;
        a = b;
        b = rem;
    }
    None
}

/// Attempt to recognize a high-precision complex value as a Gaussian
/// rational. The caller is expected to verify exactly afterwards.
pub fn recognize_qi(z: &BigC, den_bits: u32) -> Option<Qi> {
    let prec = z.prec();
    let err_bits = prec.saturating_sub(prec / 4).max(48);
    let re = rationalize(&z.re, den_bits, err_bits)?;
    let im = rationalize(&z.im, den_bits, err_bits)?;
    Some(Qi { re, im })
}
