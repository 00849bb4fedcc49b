use std::fmt;

use super::bigfloat::BigFloat;
use crate::error::Error;

/// Complex number with `BigFloat` parts.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigFloat) -> Self {
        Self { re, im: BigFloat::zero() }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }

    pub fn scale(&self, k: &BigFloat) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> BigFloat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt().expect("non-negative")
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn div(&self, o: &Self) -> Result<Self, Error> {
        let d = o.norm_sqr();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.mul(&o.conj());
        Ok(Self::new(&n.re / &d, &n.im / &d))
    }

    pub fn exp(&self) -> Self {
        let r = self.re.exp();
        Self::new(&r * &self.im.cos(), &r * &self.im.sin())
    }

    /// `e^{iθ}`.
    pub fn cis(theta: &BigFloat) -> Self {
        Self::new(theta.cos(), theta.sin())
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}
