//! Small helpers for combining numerically summed factors.

use crate::error::Error;
use crate::scalar::{BigFloat, ExactRational, PrecisionContext, q_pochhammer_inf};
use crate::series::{SeriesValue, Summation, Step};

pub(super) fn at_origin(j: usize) -> SeriesValue {
    SeriesValue::exact(if j == 0 { BigFloat::one() } else { BigFloat::zero() }, 1)
}

/// An elementary value, charged only its rounding floor.
pub(super) fn elementary(v: BigFloat, ctx: &PrecisionContext) -> SeriesValue {
    let tail = &v.abs() * &BigFloat::epsilon(ctx.working_bits()).ldexp(6);
    SeriesValue { value: v, terms_used: 1, tail_bound: tail }
}

pub(super) fn scaled(v: SeriesValue, k: &BigFloat) -> SeriesValue {
    SeriesValue { value: &v.value * k, terms_used: v.terms_used, tail_bound: &v.tail_bound * &k.abs() }
}

/// First-order error propagation for a product.
pub(super) fn product(a: &SeriesValue, b: &SeriesValue) -> SeriesValue {
    let tail = &(&(&a.value.abs() * &b.tail_bound) + &(&b.value.abs() * &a.tail_bound)) + &(&a.tail_bound * &b.tail_bound);
    SeriesValue { value: &a.value * &b.value, terms_used: a.terms_used + b.terms_used, tail_bound: tail }
}

pub(super) fn quotient(a: &SeriesValue, b: &SeriesValue) -> Result<SeriesValue, Error> {
    let value = a.value.checked_div(&b.value)?;
    // |a/b| (ta/|a| + tb/|b|), written to stay finite when a = 0
    let tail = &(&a.tail_bound + &(&value.abs() * &b.tail_bound)) / &b.value.abs();
    Ok(SeriesValue { value, terms_used: a.terms_used + b.terms_used, tail_bound: tail })
}

/// `t^j / d`.
pub(super) fn t_pow_over(t: &BigFloat, j: usize, d: &ExactRational, ctx: &PrecisionContext) -> Result<BigFloat, Error> {
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    t.powi(j as i64)?.checked_div(&ctx.rational(d))
}

/// `(a;q)_∞`.
pub(super) fn qinf(a: &BigFloat, q: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    Ok(elementary(q_pochhammer_inf(a, q, ctx)?, ctx))
}

/// `Σ_k term(k)` with the shared stopping rule; each term may carry its own
/// tail, which is accumulated.
pub(super) fn sum_terms(
    ctx: &PrecisionContext,
    mut term: impl FnMut(usize) -> Result<Option<SeriesValue>, Error>,
) -> Result<SeriesValue, Error> {
    let mut s = Summation::<BigFloat>::new(ctx);
    let mut inner_tail = BigFloat::zero();
    let mut k = 0;
    loop {
        let Some(t) = term(k)? else {
            let mut v = s.finish_exact();
            v.tail_bound = &v.tail_bound + &inner_tail;
            return Ok(v);
        };
        inner_tail = &inner_tail + &t.tail_bound;
        if let Step::Done = s.push(&t.value)? {
            let mut v = s.finish();
            v.tail_bound = &v.tail_bound + &inner_tail;
            return Ok(v);
        }
        k += 1;
    }
}
