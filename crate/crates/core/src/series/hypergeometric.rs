use crate::error::Error;
use crate::scalar::{BigFloat, PrecisionContext, Scalar};

/// A summed series together with how it was stopped.
#[derive(Clone, Debug)]
pub struct SeriesValue<T = BigFloat> {
    pub value: T,
    pub terms_used: usize,
    /// Bound on the omitted tail (zero for terminating series).
    pub tail_bound: BigFloat,
}

impl<T> SeriesValue<T> {
    pub fn exact(value: T, terms_used: usize) -> Self {
        Self { value, terms_used, tail_bound: BigFloat::zero() }
    }
}

/// Running sum with the consecutive-small stopping rule.
pub struct Summation<T: Scalar> {
    sum: T,
    terms: usize,
    small: usize,
    last: BigFloat,
    threshold: BigFloat,
    bits: u32,
    need: usize,
    max_terms: usize,
}

pub enum Step {
    Continue,
    Done,
}

impl<T: Scalar> Summation<T> {
    pub fn new(ctx: &PrecisionContext) -> Self {
        Self {
            sum: T::zero(),
            terms: 0,
            small: 0,
            last: BigFloat::zero(),
            threshold: ctx.stop_threshold(),
            bits: ctx.working_bits(),
            need: ctx.consecutive_small,
            max_terms: ctx.max_terms,
        }
    }

    /// Add a term; reports `Done` once `consecutive_small` successive terms
    /// were negligible relative to the running sum.
    pub fn push(&mut self, term: &T) -> Result<Step, Error> {
        self.sum = self.sum.plus(term);
        self.terms += 1;
        let mag = term.magnitude(self.bits);
        if !mag.is_zero() {
            self.last = mag.clone();
        }
        let scale = self.sum.magnitude(self.bits);
        if mag.is_zero() || mag < &self.threshold * &scale {
            self.small += 1;
            if self.small >= self.need {
                return Ok(Step::Done);
            }
        } else {
            self.small = 0;
        }
        if self.terms >= self.max_terms {
            return Err(Error::NonConvergent { terms: self.terms });
        }
        Ok(Step::Continue)
    }

    /// Tail bound: twice the last non-negligible term plus the rounding floor.
    pub fn finish(self) -> SeriesValue<T> {
        let floor = &self.sum.magnitude(self.bits) * &BigFloat::epsilon(self.bits).ldexp(6);
        let tail = &self.last.ldexp(1) + &floor;
        SeriesValue { value: self.sum, terms_used: self.terms, tail_bound: tail }
    }

    pub fn finish_exact(self) -> SeriesValue<T> {
        SeriesValue { value: self.sum, terms_used: self.terms, tail_bound: BigFloat::zero() }
    }

    pub fn terms(&self) -> usize {
        self.terms
    }
}

fn is_nonpositive_integer<T: Scalar>(x: &T, n: usize) -> bool {
    // a + n == 0 for this n
    x.plus(&T::from_i64(n as i64)).is_zero()
}

/// `pFq(a; b; z) = Σ (a)_n / (b)_n · z^n / n!`.
///
/// Terminates exactly when a numerator parameter is a non-positive integer.
pub fn eval_pfq<T: Scalar>(a: &[T], b: &[T], z: &T, ctx: &PrecisionContext) -> Result<SeriesValue<T>, Error> {
    let mut s = Summation::new(ctx);
    let mut term = T::one();
    let mut n = 0usize;
    loop {
        if let Step::Done = s.push(&term)? {
            return Ok(s.finish());
        }
        if z.is_zero() {
            return Ok(s.finish_exact());
        }
        if a.iter().any(|x| is_nonpositive_integer(x, n)) {
            return Ok(s.finish_exact());
        }
        if b.iter().find(|y| is_nonpositive_integer(*y, n)).is_some() {
            return Err(Error::PoleInDenominator { index: n });
        }
        let nn = T::from_i64(n as i64);
        let mut num = z.clone();
        for x in a {
            num = num.times(&x.plus(&nn));
        }
        let mut den = T::from_i64(n as i64 + 1);
        for y in b {
            den = den.times(&y.plus(&nn));
        }
        term = term.times(&num.quotient(&den)?);
        n += 1;
    }
}

/// `rφs(a; b; q, z)` with term
/// `(a;q)_n / ((q;q)_n (b;q)_n) · [(-1)^n q^{C(n,2)}]^{1+s-r} z^n`.
pub fn eval_rphis<T: Scalar>(a: &[T], b: &[T], q: &T, z: &T, ctx: &PrecisionContext) -> Result<SeriesValue<T>, Error> {
    let extra = 1 + b.len() as i64 - a.len() as i64;
    let mut s = Summation::new(ctx);
    let mut term = T::one();
    let mut qn = T::one();
    let mut n = 0usize;
    let one = T::one();
    loop {
        if let Step::Done = s.push(&term)? {
            return Ok(s.finish());
        }
        if z.is_zero() {
            return Ok(s.finish_exact());
        }
        let num_factors: Vec<T> = a.iter().map(|x| one.minus(&x.times(&qn))).collect();
        if num_factors.iter().any(Scalar::is_zero) {
            return Ok(s.finish_exact());
        }
        let mut num = z.clone();
        for f in &num_factors {
            num = num.times(f);
        }
        let mut den = one.minus(&qn.times(q));
        for y in b {
            let f = one.minus(&y.times(&qn));
            if f.is_zero() {
                return Err(Error::PoleInDenominator { index: n });
            }
            den = den.times(&f);
        }
        if den.is_zero() {
            return Err(Error::PoleInDenominator { index: n });
        }
        // (-q^n)^extra
        let mut step = T::one();
        let mq = qn.negate();
        if extra >= 0 {
            for _ in 0..extra {
                step = step.times(&mq);
            }
        } else {
            for _ in 0..-extra {
                step = step.quotient(&mq)?;
            }
        }
        term = term.times(&num.times(&step).quotient(&den)?);
        qn = qn.times(q);
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ExactRational, q_pochhammer, q_pochhammer_inf, rat, rel_diff};

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(256)
    }

    #[test]
    fn one_f_one_closed_form() {
        let c = ctx();
        let z = c.rational(&rat(1, 5));
        let v = eval_pfq(&[c.int(1)], &[c.int(2)], &z, &c).unwrap();
        let expect = &(&z.exp() - &BigFloat::one()) / &z;
        assert!(rel_diff(&v.value, &expect).exponent() < -250);
        assert!(v.tail_bound >= BigFloat::zero());
        let zero = eval_pfq(&[c.int(3)], &[c.int(5)], &BigFloat::zero(), &c).unwrap();
        assert_eq!(zero.value, BigFloat::one());
    }

    #[test]
    fn q_binomial_theorem() {
        let c = ctx();
        let (a, q, z) = (c.rational(&rat(1, 3)), c.rational(&rat(1, 2)), c.rational(&rat(1, 4)));
        let v = eval_rphis(std::slice::from_ref(&a), &[], &q, &z, &c).unwrap();
        let expect = &q_pochhammer_inf(&(&a * &z), &q, &c).unwrap() / &q_pochhammer_inf(&z, &q, &c).unwrap();
        assert!(rel_diff(&v.value, &expect).exponent() < -250);
    }

    #[test]
    fn terminating_rphis_is_exact() {
        let (q, b, cc) = (rat(1, 2), rat(2, 7), rat(3, 11));
        let qi = q.recip().unwrap();
        let v = eval_rphis(&[qi.clone(), b.clone()], std::slice::from_ref(&cc), &q, &q, &ctx()).unwrap();
        let expect = ExactRational::one()
            + (ExactRational::one() - &qi) * (ExactRational::one() - &b) * &q
                / ((ExactRational::one() - &q) * (ExactRational::one() - &cc));
        assert_eq!(v.value, expect);
        assert!(v.tail_bound.is_zero());
        // deeper terminating sum against the explicit finite sum
        let n = 5;
        let a0 = q.pow(-(n as i64)).unwrap();
        let v = eval_rphis(&[a0.clone(), b.clone()], std::slice::from_ref(&cc), &q, &rat(3, 5), &ctx()).unwrap();
        let mut expect = ExactRational::zero();
        for k in 0..=n {
            expect += &(q_pochhammer(&a0, &q, k) * q_pochhammer(&b, &q, k) * rat(3, 5).powu(k)
                / (q_pochhammer(&q, &q, k) * q_pochhammer(&cc, &q, k)));
        }
        assert_eq!(v.value, expect);
    }

    #[test]
    fn pole_and_nonconvergence() {
        let c = ctx();
        let r = eval_pfq(&[rat(1, 1)], &[rat(-3, 1)], &rat(1, 2), &c);
        assert!(matches!(r, Err(Error::PoleInDenominator { index: 3 })));
        let mut small = ctx();
        small.max_terms = 50;
        let r = eval_pfq(&[c.int(1), c.int(1)], &[], &c.int(2), &small);
        assert!(matches!(r, Err(Error::NonConvergent { .. })));
    }
}
