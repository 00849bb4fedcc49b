use std::fmt;

use super::{BigComplex, BigFloat, ExactRational};
use crate::error::Error;

/// Field operations shared by the exact and floating scalar types, so that
/// Pochhammer symbols, power series and hypergeometric sums are written once.
pub trait Scalar: Clone + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &ExactRational, bits: u32) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn quotient(&self, o: &Self) -> Result<Self, Error>;
    fn negate(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// `|self|` as a float (used only for stopping decisions).
    fn magnitude(&self, bits: u32) -> BigFloat;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&ExactRational::from(n), 64)
    }
}

impl Scalar for ExactRational {
    fn zero() -> Self {
        ExactRational::zero()
    }
    fn one() -> Self {
        ExactRational::one()
    }
    fn from_rational(r: &ExactRational, _: u32) -> Self {
        r.clone()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn quotient(&self, o: &Self) -> Result<Self, Error> {
        self.checked_div(o)
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
    fn magnitude(&self, bits: u32) -> BigFloat {
        BigFloat::from_rational(&self.abs(), bits)
    }
}

impl Scalar for BigFloat {
    fn zero() -> Self {
        BigFloat::zero()
    }
    fn one() -> Self {
        BigFloat::one()
    }
    fn from_rational(r: &ExactRational, bits: u32) -> Self {
        BigFloat::from_rational(r, bits)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn quotient(&self, o: &Self) -> Result<Self, Error> {
        self.checked_div(o)
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        BigFloat::is_zero(self)
    }
    fn magnitude(&self, _: u32) -> BigFloat {
        self.abs()
    }
}

impl Scalar for BigComplex {
    fn zero() -> Self {
        BigComplex::real(BigFloat::zero())
    }
    fn one() -> Self {
        BigComplex::real(BigFloat::one())
    }
    fn from_rational(r: &ExactRational, bits: u32) -> Self {
        BigComplex::real(BigFloat::from_rational(r, bits))
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn quotient(&self, o: &Self) -> Result<Self, Error> {
        self.div(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        BigComplex::is_zero(self)
    }
    fn magnitude(&self, _: u32) -> BigFloat {
        self.abs()
    }
}
