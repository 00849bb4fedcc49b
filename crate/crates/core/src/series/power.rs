//! Truncated univariate power series over any [`Scalar`].

use crate::error::Error;
use crate::scalar::{ExactRational, Scalar, q_pochhammer, tri};

/// Coefficients of `t^0 ..= t^degree`; everything above `degree` is unknown
/// (not zero), so products truncate to the smaller degree.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

#[derive(Clone, Debug)]
pub enum SeriesOp<R> {
    Add,
    Sub,
    Mul,
    Scale(R),
    /// `exp(A)`, requires `A(0) = 0`.
    Exp,
    /// `A^alpha`, requires `A(0) = 1`.
    Pow(ExactRational),
    /// `1/A`, requires `A(0) != 0`.
    Inverse,
}

impl<R: Scalar> PowerSeries<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least the constant term");
        Self { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![R::zero(); degree + 1] }
    }

    pub fn one(degree: usize) -> Self {
        Self::constant(R::one(), degree)
    }

    pub fn constant(c: R, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = c;
        s
    }

    /// `c·t`.
    pub fn linear(c: R, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if degree >= 1 {
            s.coeffs[1] = c;
        }
        s
    }

    /// Series with coefficients produced by `f(k)` for `k <= degree`.
    pub fn from_fn(degree: usize, f: impl FnMut(usize) -> R) -> Self {
        Self { coeffs: (0..=degree).map(f).collect() }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let d = degree.min(self.degree());
        Self { coeffs: self.coeffs[..=d].to_vec() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let d = self.degree().min(o.degree());
        Self::from_fn(d, |k| self.coeffs[k].plus(&o.coeffs[k]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let d = self.degree().min(o.degree());
        Self::from_fn(d, |k| self.coeffs[k].minus(&o.coeffs[k]))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.degree().min(o.degree());
        let mut out = vec![R::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(d + 1 - i) {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.times(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(R::negate).collect() }
    }

    /// Multiply by `t^k`, keeping the degree.
    pub fn shift(&self, k: usize) -> Self {
        let d = self.degree();
        Self::from_fn(d, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// `f(c t)`.
    pub fn dilate(&self, c: &R) -> Self {
        let mut p = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.times(&p));
            p = p.times(c);
        }
        Self { coeffs: out }
    }

    pub fn pow_int(&self, n: usize) -> Self {
        let mut acc = Self::one(self.degree());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp of a series needs a zero constant term".into()));
        }
        let d = self.degree();
        let mut e = vec![R::zero(); d + 1];
        e[0] = R::one();
        // n e_n = sum_{k=1}^n k f_k e_{n-k}
        for n in 1..=d {
            let mut s = R::zero();
            for k in 1..=n {
                s = s.plus(&R::from_i64(k as i64).times(&self.coeffs[k]).times(&e[n - k]));
            }
            e[n] = s.quotient(&R::from_i64(n as i64))?;
        }
        Ok(Self { coeffs: e })
    }

    /// `self^alpha` for `self(0) = 1` (J.C.P. Miller recurrence).
    pub fn pow(&self, alpha: &ExactRational) -> Result<Self, Error> {
        if !self.coeffs[0].minus(&R::one()).is_zero() {
            return Err(Error::Domain("rational power of a series needs constant term 1".into()));
        }
        let d = self.degree();
        let a = R::from_rational(alpha, 64.max(alpha.bits() as u32 + 64));
        let mut g = vec![R::zero(); d + 1];
        g[0] = R::one();
        // n g_n = sum_{k=1}^n (alpha k - (n-k)) f_k g_{n-k}
        for n in 1..=d {
            let mut s = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = a.times(&R::from_i64(k as i64)).minus(&R::from_i64((n - k) as i64));
                s = s.plus(&w.times(&self.coeffs[k]).times(&g[n - k]));
            }
            g[n] = s.quotient(&R::from_i64(n as i64))?;
        }
        Ok(Self { coeffs: g })
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.degree();
        let mut g = vec![R::zero(); d + 1];
        g[0] = R::one().quotient(c0)?;
        for n in 1..=d {
            let mut s = R::zero();
            for k in 1..=n {
                s = s.plus(&self.coeffs[k].times(&g[n - k]));
            }
            g[n] = s.negate().quotient(c0)?;
        }
        Ok(Self { coeffs: g })
    }

    pub fn eval(&self, t: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.times(t).plus(c))
    }
}

/// Dispatching form of the series arithmetic; `b` is ignored by unary ops.
/// Binary ops insist on equal truncation degrees.
pub fn series_arith<R: Scalar>(a: &PowerSeries<R>, b: &PowerSeries<R>, op: &SeriesOp<R>) -> Result<PowerSeries<R>, Error> {
    let binary = matches!(op, SeriesOp::Add | SeriesOp::Sub | SeriesOp::Mul);
    if binary && a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(format!("{} vs {}", a.degree(), b.degree())));
    }
    Ok(match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Scale(c) => a.scale(c),
        SeriesOp::Exp => a.exp()?,
        SeriesOp::Pow(alpha) => a.pow(alpha)?,
        SeriesOp::Inverse => a.inverse()?,
    })
}

// ---------------------------------------------------------------------------
// Exact Taylor expansions of the standard building blocks.

type Q = ExactRational;
pub type RationalSeries = PowerSeries<Q>;

/// `exp(c t)`.
pub fn exp_series(c: &Q, degree: usize) -> RationalSeries {
    let mut term = Q::one();
    PowerSeries::from_fn(degree, |k| {
        if k > 0 {
            term = &term * c / Q::from(k as i64);
        }
        term.clone()
    })
}

/// `pFq(a; b; c t)`; fails if a denominator parameter hits a pole within the
/// requested degree.
pub fn pfq_series(a: &[Q], b: &[Q], c: &Q, degree: usize) -> Result<RationalSeries, Error> {
    let mut out = Vec::with_capacity(degree + 1);
    let mut term = Q::one();
    out.push(term.clone());
    for n in 0..degree {
        let nq = Q::from(n as i64);
        let mut num = c.clone();
        for x in a {
            num = num * (x + &nq);
        }
        let mut den = Q::from(n as i64 + 1);
        for y in b {
            let f = y + &nq;
            if f.is_zero() {
                return Err(Error::PoleInDenominator { index: n });
            }
            den = den * f;
        }
        term = term * num / den;
        out.push(term.clone());
    }
    Ok(PowerSeries::from_coeffs(out))
}

/// `rφs(a; b; q, c t)` with the `[(-1)^n q^{C(n,2)}]^{1+s-r}` factor.
pub fn rphis_series(a: &[Q], b: &[Q], q: &Q, c: &Q, degree: usize) -> Result<RationalSeries, Error> {
    let extra = 1 + b.len() as i64 - a.len() as i64;
    let mut out = Vec::with_capacity(degree + 1);
    let mut term = Q::one();
    out.push(term.clone());
    let mut qn = Q::one();
    for n in 0..degree {
        let mut num = c.clone();
        for x in a {
            num = num * (Q::one() - x * &qn);
        }
        let mut den = Q::one() - &qn * q;
        for y in b {
            let f = Q::one() - y * &qn;
            if f.is_zero() {
                return Err(Error::PoleInDenominator { index: n });
            }
            den = den * f;
        }
        if den.is_zero() {
            return Err(Error::PoleInDenominator { index: n });
        }
        // ratio of [(-1)^n q^{C(n,2)}]^extra from n to n+1 is (-q^n)^extra
        let step = (-&qn).pow(extra)?;
        term = term * num * step / den;
        out.push(term.clone());
        qn *= q;
    }
    Ok(PowerSeries::from_coeffs(out))
}

/// `1/(a t; q)_∞ = Σ a^k t^k / (q;q)_k`.
pub fn euler_inv_series(a: &Q, q: &Q, degree: usize) -> RationalSeries {
    PowerSeries::from_fn(degree, |k| a.powu(k) / q_pochhammer(q, q, k))
}

/// `(a t; q)_∞ = Σ (-a)^k q^{C(k,2)} t^k / (q;q)_k`.
pub fn euler_series(a: &Q, q: &Q, degree: usize) -> RationalSeries {
    PowerSeries::from_fn(degree, |k| {
        (-a).powu(k) * q.pow(tri(k)).expect("q != 0") / q_pochhammer(q, q, k)
    })
}

/// Modified Bessel function of integer order, `I_m(t)`.
pub fn bessel_i_int_series(m: usize, degree: usize) -> RationalSeries {
    let mut s = PowerSeries::zero(degree);
    let mut l = 0;
    while m + 2 * l <= degree {
        let c = Q::frac(1, 2).powu(m + 2 * l) / (Q::factorial(l as u64) * Q::factorial((m + l) as u64));
        s.coeffs[m + 2 * l] = c;
        l += 1;
    }
    s
}

/// `t^k` scaled by `c`.
pub fn monomial(c: Q, k: usize, degree: usize) -> RationalSeries {
    let mut s = PowerSeries::zero(degree);
    if k <= degree {
        s.coeffs[k] = c;
    }
    s
}

/// Drop the constant term and divide by `t` (exact when the constant is 0).
pub fn divide_by_t<R: Scalar>(s: &PowerSeries<R>) -> Result<PowerSeries<R>, Error> {
    if !s.coeffs()[0].is_zero() {
        return Err(Error::Domain("series is not divisible by t".into()));
    }
    if s.degree() == 0 {
        return Ok(PowerSeries::zero(0));
    }
    Ok(PowerSeries::from_coeffs(s.coeffs()[1..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn exp_of_linear_matches_closed_form() {
        let f = PowerSeries::linear(rat(3, 2), 10);
        assert_eq!(f.exp().unwrap(), exp_series(&rat(3, 2), 10));
    }

    #[test]
    fn pow_inverse_and_exp_agree() {
        let f = PowerSeries::from_coeffs(vec![rat(1, 1), rat(1, 3), rat(-2, 5), rat(1, 7), rat(0, 1), rat(4, 9)]);
        let inv = f.inverse().unwrap();
        assert_eq!(f.pow(&rat(-1, 1)).unwrap(), inv);
        assert_eq!(f.mul(&inv), PowerSeries::one(5));
        let h = f.pow(&rat(1, 2)).unwrap();
        assert_eq!(h.mul(&h), f);
        let e = PowerSeries::linear(rat(1, 1), 8).exp().unwrap();
        assert_eq!(e.pow(&rat(5, 3)).unwrap(), exp_series(&rat(5, 3), 8));
    }

    #[test]
    fn euler_series_are_inverse() {
        let q = rat(1, 3);
        let a = rat(2, 5);
        let p = euler_series(&a, &q, 12).mul(&euler_inv_series(&a, &q, 12));
        assert_eq!(p, PowerSeries::one(12));
    }

    #[test]
    fn q_binomial_theorem_series() {
        // 1φ0(a; -; q, t) = (at;q)_∞ / (t;q)_∞
        let (a, q) = (rat(3, 7), rat(1, 2));
        let lhs = rphis_series(std::slice::from_ref(&a), &[], &q, &rat(1, 1), 10).unwrap();
        let rhs = euler_series(&a, &q, 10).mul(&euler_inv_series(&rat(1, 1), &q, 10));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pole_is_reported() {
        assert!(matches!(pfq_series(&[rat(1, 1)], &[rat(-2, 1)], &rat(1, 1), 5), Err(Error::PoleInDenominator { index: 2 })));
    }
}
