//! Binary floating point with caller-chosen precision, backed by astro-float.
//!
//! Every value carries its own mantissa length; binary operations round to the
//! larger of the two operand precisions, so small exact constants (built at
//! 64 bits) mix freely with working-precision values.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat as Af, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;

use super::rational::ExactRational;
use crate::error::Error;

const RM: RoundingMode = RoundingMode::ToEven;
const SMALL: usize = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_cc<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone)]
pub struct BigFloat(Af);

impl BigFloat {
    pub fn zero() -> Self {
        Self(Af::from_word(0, SMALL))
    }

    pub fn one() -> Self {
        Self(Af::from_word(1, SMALL))
    }

    pub fn from_i64(n: i64) -> Self {
        Self(Af::from_i64(n, SMALL))
    }

    /// Exact conversion of an integer (precision grows to fit).
    pub fn from_bigint(n: &BigInt) -> Self {
        let (sign, words) = n.to_u64_digits();
        if words.is_empty() {
            return Self::zero();
        }
        let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
        let e = (words.len() * 64) as i32;
        Self(Af::from_words(&words, s, e))
    }

    /// Correctly rounded `p/q` at `bits` of precision.
    pub fn from_rational(r: &ExactRational, bits: u32) -> Self {
        let p = bits as usize;
        let num = Self::from_bigint(r.numer());
        if r.is_integer() {
            return Self(num.0.add(&Af::from_word(0, SMALL), p.max(SMALL), RM));
        }
        let den = Self::from_bigint(r.denom());
        Self(num.0.div(&den.0, p, RM))
    }

    pub fn parse_decimal(s: &str, bits: u32) -> Result<Self, Error> {
        let v = with_cc(|cc| Af::parse(s.trim(), Radix::Dec, bits as usize, RM, cc));
        if v.is_nan() || v.is_inf() {
            return Err(Error::Parse(format!("not a decimal number: {s:?}")));
        }
        Ok(Self(v))
    }

    pub fn pi(bits: u32) -> Self {
        Self(with_cc(|cc| cc.pi(bits as usize, RM)))
    }

    /// Precision in bits (mantissa length).
    pub fn prec(&self) -> u32 {
        self.0.mantissa_max_bit_len().unwrap_or(SMALL) as u32
    }

    pub fn with_prec(&self, bits: u32) -> Self {
        let mut v = self.0.clone();
        // Rounding to a shorter mantissa cannot fail for finite values.
        let _ = v.set_precision(bits as usize, RM);
        Self(v)
    }

    fn p2(&self, o: &Self) -> usize {
        self.prec().max(o.prec()) as usize
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(Af::from_word(1, SMALL).div(&self.0, self.prec() as usize, RM)))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, Error> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(self.0.div(&o.0, self.p2(o), RM)))
    }

    /// Integer power (negative exponents via reciprocal).
    pub fn powi(&self, e: i64) -> Result<Self, Error> {
        let p = self.prec() as usize;
        let v = Self(self.0.powi(e.unsigned_abs() as usize, p, RM));
        if e < 0 { v.recip() } else { Ok(v) }
    }

    /// Multiply by `2^k` exactly.
    pub fn ldexp(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = self.0.clone();
        let e = v.exponent().unwrap_or(0);
        v.set_exponent(e + k);
        Self(v)
    }

    pub fn exp(&self) -> Self {
        let p = self.prec() as usize;
        Self(with_cc(|cc| self.0.exp(p, RM, cc)))
    }

    pub fn ln(&self) -> Result<Self, Error> {
        if self.is_zero() || self.is_negative() {
            return Err(Error::Domain(format!("logarithm of non-positive value {self}")));
        }
        let p = self.prec() as usize;
        Ok(Self(with_cc(|cc| self.0.ln(p, RM, cc))))
    }

    pub fn sqrt(&self) -> Result<Self, Error> {
        if self.is_negative() {
            return Err(Error::Domain(format!("square root of negative value {self}")));
        }
        Ok(Self(self.0.sqrt(self.prec() as usize, RM)))
    }

    pub fn sin(&self) -> Self {
        let p = self.prec() as usize;
        Self(with_cc(|cc| self.0.sin(p, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        let p = self.prec() as usize;
        Self(with_cc(|cc| self.0.cos(p, RM, cc)))
    }

    /// `self^e` for positive `self` and a real exponent.
    pub fn powf(&self, e: &Self) -> Result<Self, Error> {
        if self.is_zero() && !e.is_negative() && !e.is_zero() {
            return Ok(Self::zero());
        }
        Ok(self.ln()?.mul_ref(e).exp())
    }

    /// Power with a rational exponent; negative bases are allowed only for
    /// integer exponents.
    pub fn pow_rational(&self, e: &ExactRational) -> Result<Self, Error> {
        if let Some(k) = e.to_i64() {
            return self.powi(k);
        }
        let bits = self.prec();
        self.powf(&Self::from_rational(e, bits))
    }

    /// Approximate base-2 exponent: `|self|` lies in `[2^(e-1), 2^e)`.
    /// Zero reports `i32::MIN`.
    pub fn exponent(&self) -> i32 {
        if self.is_zero() { i32::MIN } else { self.0.exponent().unwrap_or(i32::MIN) }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let Some((m, _, s, e, _)) = self.0.as_raw_parts() else {
            return f64::NAN;
        };
        let top = *m.last().unwrap_or(&0) as f64 / 2f64.powi(64);
        let v = top * 2f64.powi(e);
        if s == Sign::Neg { -v } else { v }
    }

    pub fn cmp_abs(&self, o: &Self) -> Ordering {
        self.abs().partial_cmp(&o.abs()).unwrap_or(Ordering::Equal)
    }

    pub fn max_abs<'a>(&'a self, o: &'a Self) -> &'a Self {
        if self.cmp_abs(o) == Ordering::Less { o } else { self }
    }

    /// `2^-bits` at 64-bit precision.
    pub fn epsilon(bits: u32) -> Self {
        Self::one().ldexp(-(bits as i32))
    }

    /// Full-precision decimal rendering, e.g. `1.2345e-3`.
    pub fn to_decimal(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        with_cc(|cc| self.0.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".to_string())
    }

    /// Decimal rendering rounded to `digits` significant digits.
    pub fn to_decimal_digits(&self, digits: u32) -> String {
        let bits = ((digits as f64) * std::f64::consts::LOG2_10).ceil() as u32 + 1;
        self.with_prec(bits.max(8)).to_decimal()
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        Self(self.0.add(&o.0, self.p2(o), RM))
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        Self(self.0.sub(&o.0, self.p2(o), RM))
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        Self(self.0.mul(&o.0, self.p2(o), RM))
    }

    /// Exact rational value of a finite float.
    pub fn to_rational(&self) -> Option<ExactRational> {
        if self.is_zero() {
            return Some(ExactRational::zero());
        }
        let (m, _, s, e, _) = self.0.as_raw_parts()?;
        let mut n = BigInt::from(0);
        for w in m.iter().rev() {
            n = (n << 64) + BigInt::from(*w);
        }
        if s == Sign::Neg {
            n = -n;
        }
        let shift = e as i64 - (m.len() as i64) * 64;
        let two = ExactRational::from(2);
        Some(ExactRational::from_int(n) * two.pow(shift).ok()?)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&o.0)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}b]", self.to_decimal_digits(20), self.prec())
    }
}

impl serde::Serialize for BigFloat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_decimal())
    }
}

macro_rules! float_binop {
    ($tr:ident, $m:ident, $r:ident) => {
        impl $tr<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat {
                self.$r(rhs)
            }
        }
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat {
                self.$r(&rhs)
            }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat {
                self.$r(rhs)
            }
        }
    };
}

impl BigFloat {
    fn div_ref(&self, o: &Self) -> Self {
        Self(self.0.div(&o.0, self.p2(o), RM))
    }
}

float_binop!(Add, add, add_ref);
float_binop!(Sub, sub, sub_ref);
float_binop!(Mul, mul, mul_ref);
float_binop!(Div, div, div_ref);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(mut self) -> BigFloat {
        self.0.inv_sign();
        self
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -self.clone()
    }
}

/// Relative distance `|a-b| / max(|a|, |b|)`; zero when both vanish.
pub fn rel_diff(a: &BigFloat, b: &BigFloat) -> BigFloat {
    let d = (a - b).abs();
    let scale = a.max_abs(b).abs();
    if scale.is_zero() { d } else { &d / &scale }
}



#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_conversion_is_correctly_rounded() {
        let third = BigFloat::from_rational(&ExactRational::frac(1, 3), 256);
        let back = &third * &BigFloat::from_i64(3);
        let err = (&back - &BigFloat::one()).abs();
        assert!(err.exponent() < -250);
        let big: ExactRational = "-123456789012345678901234567890/7".parse().unwrap();
        let f = BigFloat::from_rational(&big, 256);
        let r = f.to_rational().unwrap();
        let rel = ((r - &big) / big.clone()).abs();
        assert!(rel < ExactRational::frac(1, 1) * ExactRational::from(2).pow(-250).unwrap());
    }

    #[test]
    fn transcendental_sanity() {
        let one = BigFloat::one().with_prec(256);
        let e = one.exp();
        assert!(e.ln().unwrap().sub_ref(&one).abs().exponent() < -250);
        let pi = BigFloat::pi(256);
        assert!(pi.sin().abs().exponent() < -250);
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert!(BigFloat::from_i64(-2).ln().is_err());
    }

    #[test]
    fn ldexp_and_exponent() {
        let x = BigFloat::from_i64(3).ldexp(-5);
        assert_eq!(x.to_f64(), 3.0 / 32.0);
        assert_eq!(BigFloat::from_i64(1).exponent(), 1);
    }
}
