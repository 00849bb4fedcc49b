//! Families whose moments are themselves orthogonal polynomials evaluated
//! at a fixed point `x`. Their tableaux have closed forms; `b_n` is read off
//! the tableau and `λ_n` off the weights.

use super::classical::dv;
use super::numeric::{elementary, scaled, t_pow_over};
use crate::error::Error;
use crate::scalar::{BigFloat, ExactRational, PrecisionContext, pochhammer};
use crate::series::{PowerSeries, RationalSeries, SeriesValue, eval_pfq, exp_series, pfq_series};

type Q = ExactRational;

fn int(n: usize) -> Q {
    Q::from(n as i64)
}

fn fact(n: usize) -> Q {
    Q::factorial(n as u64)
}

fn binom(n: usize, k: usize) -> Q {
    Q::binomial(n as u64, k as u64)
}

/// `t^j/j! · f`.
fn lead(f: &RationalSeries, j: usize) -> RationalSeries {
    f.shift(j).scale(&fact(j).recip().expect("j! != 0"))
}

/// `f(c t²)` from the coefficients of `f`.
fn in_t_squared(f: &RationalSeries, n: usize) -> RationalSeries {
    PowerSeries::from_fn(n, |k| if k % 2 == 0 { f.coeff(k / 2) } else { Q::zero() })
}

// --- Hermite moments -------------------------------------------------------

/// Physicists' `H_m(x)`.
fn hermite_poly(m: usize, x: &Q) -> Q {
    let (mut h0, mut h1) = (Q::one(), x * &Q::from(2));
    if m == 0 {
        return h0;
    }
    for k in 1..m {
        let h2 = x * &Q::from(2) * &h1 - int(2 * k) * &h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

pub(super) fn hermite_h(i: usize, m: usize, x: &Q) -> Q {
    binom(i + m, i) * hermite_poly(m, x)
}

/// `t^j/j! e^{2xt - t²}`.
pub(super) fn hermite_series(x: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let mut u = PowerSeries::zero(n);
    if n >= 1 {
        u = u.add(&crate::series::monomial(x * &Q::from(2), 1, n));
    }
    if n >= 2 {
        u = u.add(&crate::series::monomial(Q::from(-1), 2, n));
    }
    Ok(lead(&u.exp()?, j))
}

pub(super) fn hermite_eval(x: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    let e = &(&ctx.rational(&(x * &Q::from(2))) * &t) - &(&t * &t);
    Ok(elementary(&t_pow_over(&t, j, &fact(j), ctx)? * &e.exp(), ctx))
}

// --- Laguerre moments ------------------------------------------------------

/// `L_n^{(α)}(x)`.
fn laguerre_poly(n: usize, alpha: &Q, x: &Q) -> Q {
    (0..=n)
        .map(|k| pochhammer(&(alpha + &int(k + 1)), n - k) / fact(n - k) * (-x).powu(k) / fact(k))
        .sum()
}

pub(super) fn laguerre_h(alpha: &Q, x: &Q, i: usize, m: usize) -> Q {
    let a = alpha + &int(2 * i);
    binom(m + i, i) * fact(m) * laguerre_poly(m, &a, x) / pochhammer(&(&a + &Q::one()), m)
}

pub(super) fn laguerre_weight(alpha: &Q, x: &Q, n: usize) -> Result<Q, Error> {
    dv(
        fact(n) * (-(x * x)).powu(n),
        pochhammer(&(alpha + &int(n)), n) * pochhammer(&(alpha + &Q::one()), 2 * n),
    )
}

/// `t^j/j! e^t 0F1(; α+2j+1; -xt)`.
pub(super) fn laguerre_series(alpha: &Q, x: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let f = pfq_series(&[], &[alpha + &int(2 * j + 1)], &-x, n)?;
    Ok(lead(&exp_series(&Q::one(), n).mul(&f), j))
}

pub(super) fn laguerre_eval(alpha: &Q, x: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    let f = eval_pfq(&[], &[ctx.rational(&(alpha + &int(2 * j + 1)))], &(&ctx.rational(&-x) * &t), ctx)?;
    Ok(scaled(f, &(&t_pow_over(&t, j, &fact(j), ctx)? * &t.exp())))
}

// --- Meixner moments -------------------------------------------------------

fn meixner_w(c: &Q) -> Q {
    (Q::one() - c) / c
}

/// `M_n(x; β, c) = 2F1(-n, -x; β; 1 - 1/c)`.
fn meixner_poly(n: usize, x: &Q, beta: &Q, c: &Q) -> Q {
    let z = Q::one() - c.recip().expect("c != 0");
    (0..=n)
        .map(|k| {
            pochhammer(&-int(n), k) * pochhammer(&-x, k) / (pochhammer(beta, k) * fact(k)) * z.powu(k)
        })
        .sum()
}

pub(super) fn meixner_h(beta: &Q, c: &Q, x: &Q, i: usize, m: usize) -> Q {
    binom(i + m, i) * meixner_poly(m, &(x - &int(i)), &(beta + &int(2 * i)), c)
}

pub(super) fn meixner_weight(beta: &Q, c: &Q, x: &Q, n: usize) -> Result<Q, Error> {
    let w = meixner_w(c);
    dv(
        fact(n) * pochhammer(&-x, n) * pochhammer(&(beta + x), n) * w.powu(2 * n),
        pochhammer(&(beta - &Q::one() + int(n)), n) * pochhammer(beta, 2 * n),
    )
}

/// `t^j/j! e^t 1F1(j - x; β + 2j; wt)`, `w = (1-c)/c`.
pub(super) fn meixner_series(beta: &Q, c: &Q, x: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let f = pfq_series(&[int(j) - x], &[beta + &int(2 * j)], &meixner_w(c), n)?;
    Ok(lead(&exp_series(&Q::one(), n).mul(&f), j))
}

pub(super) fn meixner_eval(
    beta: &Q,
    c: &Q,
    x: &Q,
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
) -> Result<SeriesValue, Error> {
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    let z = &ctx.rational(&meixner_w(c)) * &t;
    let f = eval_pfq(&[ctx.rational(&(int(j) - x))], &[ctx.rational(&(beta + &int(2 * j)))], &z, ctx)?;
    Ok(scaled(f, &(&t_pow_over(&t, j, &fact(j), ctx)? * &t.exp())))
}

// --- Gegenbauer moments ----------------------------------------------------

pub(super) fn gegenbauer_h(nu: &Q, x: &Q, i: usize, m: usize) -> Q {
    let half = Q::frac(1, 2);
    let d = x * x - Q::one();
    (0..=m / 2)
        .map(|k| {
            fact(m + i) * x.powu(m - 2 * k) * d.powu(k)
                / (fact(i) * fact(k) * fact(m - 2 * k) * pochhammer(&(nu + &half + int(i)), k) * Q::from(4).powu(k))
        })
        .sum()
}

pub(super) fn gegenbauer_weight(nu: &Q, x: &Q, n: usize) -> Result<Q, Error> {
    let half = Q::frac(1, 2);
    let sign = if n.is_multiple_of(2) { Q::one() } else { Q::from(-1) };
    let head = dv(
        (int(n) + nu - &half) * sign * pochhammer(&(nu * &Q::from(2) - Q::one()), n),
        pochhammer(&(nu + &half), n) * pochhammer(&(nu - &half), n + 1),
    )?;
    Ok(head * (Q::one() - x * x).powu(n) * fact(n) / Q::from(4).powu(n))
}

/// `t^j/j! e^{xt} 0F1(; ν+1/2+j; (x²-1)t²/4)`.
pub(super) fn gegenbauer_series(nu: &Q, x: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let z = (x * x - Q::one()) / Q::from(4);
    let f = pfq_series(&[], &[nu + &Q::frac(1, 2) + int(j)], &z, n / 2)?;
    Ok(lead(&exp_series(x, n).mul(&in_t_squared(&f, n)), j))
}

pub(super) fn gegenbauer_eval(nu: &Q, x: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    let z = &ctx.rational(&((x * x - Q::one()) / Q::from(4))) * &(&t * &t);
    let f = eval_pfq(&[], &[ctx.rational(&(nu + &Q::frac(1, 2) + int(j)))], &z, ctx)?;
    Ok(scaled(f, &(&t_pow_over(&t, j, &fact(j), ctx)? * &(&ctx.rational(x) * &t).exp())))
}
