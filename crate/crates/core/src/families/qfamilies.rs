//! q-families: little and big q-Jacobi, Al-Salam–Carlitz, and the
//! Bessel-expanded q-ultraspherical / Askey–Wilson slices.

use super::classical::dv;
use super::numeric::{elementary, product, qinf, scaled, sum_terms, t_pow_over};
use super::q_tri;
use crate::error::Error;
use crate::scalar::{BigFloat, ExactRational, PrecisionContext, q_binomial, q_factorial, q_pochhammer};
use crate::series::{
    PowerSeries, RationalSeries, SeriesValue, bessel_i, bessel_i_int_series, divide_by_t, euler_inv_series,
    euler_series, eval_rphis, rphis_series,
};

type Q = ExactRational;

fn one() -> Q {
    Q::one()
}

/// `t^j · c · f(t)`.
fn qlead(f: &RationalSeries, j: usize, c: &Q) -> RationalSeries {
    f.shift(j).scale(c)
}

// --- little q-Jacobi -------------------------------------------------------

pub(super) fn little_b(a: &Q, b: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    let ab = a * b;
    let qn = q.powu(n);
    let big_a = dv(
        &qn * &(one() - a * &q.powu(n + 1)) * (one() - &ab * &q.powu(n + 1)),
        (one() - &ab * &q.powu(2 * n + 1)) * (one() - &ab * &q.powu(2 * n + 2)),
    )?;
    let big_c = dv(
        a * &qn * (one() - &qn) * (one() - b * &qn),
        (one() - &ab * &q.powu(2 * n)) * (one() - &ab * &q.powu(2 * n + 1)),
    )?;
    Ok(big_a + big_c)
}

pub(super) fn little_lambda(a: &Q, b: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    let ab = a * b;
    let qn = q.powu(n);
    let mid = one() - &ab * &q.powu(2 * n);
    dv(
        a * &q.powu(2 * n - 1) * (one() - &qn) * (one() - a * &qn) * (one() - b * &qn) * (one() - &ab * &qn),
        (one() - &ab * &q.powu(2 * n - 1)) * &mid * &mid * (one() - &ab * &q.powu(2 * n + 1)),
    )
}

/// `Q_j = t^j/(q;q)_j 2φ1(0, aq^{j+1}; abq^{2j+2}; q, t)`, or the
/// alternative `t^j/((q;q)_j (t;q)_∞) 1φ1(bq^{j+1}; abq^{2j+2}; q, aq^{j+1} t)`.
pub(super) fn little_series(a: &Q, b: &Q, q: &Q, j: usize, n: usize, alt: bool) -> Result<RationalSeries, Error> {
    let lower = [a * b * q.powu(2 * j + 2)];
    let norm = q_factorial(q, j).recip()?;
    let f = if alt {
        let g = rphis_series(&[b * &q.powu(j + 1)], &lower, q, &(a * &q.powu(j + 1)), n)?;
        euler_inv_series(&one(), q, n).mul(&g)
    } else {
        rphis_series(&[Q::zero(), a * &q.powu(j + 1)], &lower, q, &one(), n)?
    };
    Ok(qlead(&f, j, &norm))
}

/// `Q̃_j = q^{C(j,2)} t^j/(q;q)_j 1φ1(aq^{j+1}; abq^{2j+2}; q, -q^j t)`.
pub(super) fn little_tilde_series(a: &Q, b: &Q, q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let f = rphis_series(&[a * &q.powu(j + 1)], &[a * b * q.powu(2 * j + 2)], q, &-q.powu(j), n)?;
    Ok(qlead(&f, j, &(q_tri(q, j) / q_factorial(q, j))))
}

pub(super) fn little_eval(
    a: &Q,
    b: &Q,
    q: &Q,
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
    alt: bool,
) -> Result<SeriesValue, Error> {
    let r = |x: &Q| ctx.rational(x);
    let qf = r(q);
    let lower = [r(&(a * b * q.powu(2 * j + 2)))];
    let pre = t_pow_over(t, j, &q_factorial(q, j), ctx)?;
    if alt {
        let z = &r(&(a * &q.powu(j + 1))) * t;
        let f = eval_rphis(&[r(&(b * &q.powu(j + 1)))], &lower, &qf, &z, ctx)?;
        let inf = qinf(t, &qf, ctx)?;
        Ok(scaled(super::numeric::quotient(&f, &inf)?, &pre))
    } else {
        let f = eval_rphis(&[BigFloat::zero(), r(&(a * &q.powu(j + 1)))], &lower, &qf, t, ctx)?;
        Ok(scaled(f, &pre))
    }
}

pub(super) fn little_tilde_eval(
    a: &Q,
    b: &Q,
    q: &Q,
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
) -> Result<SeriesValue, Error> {
    let r = |x: &Q| ctx.rational(x);
    let z = -(&r(&q.powu(j)) * t);
    let f = eval_rphis(&[r(&(a * &q.powu(j + 1)))], &[r(&(a * b * q.powu(2 * j + 2)))], &r(q), &z, ctx)?;
    Ok(scaled(f, &t_pow_over(t, j, &(q_factorial(q, j) / q_tri(q, j)), ctx)?))
}

// --- big q-Jacobi ----------------------------------------------------------

pub(super) fn big_b(a: &Q, b: &Q, c: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    let ab = a * b;
    let qn = q.powu(n);
    let q1 = q.powu(n + 1);
    let big_a = dv(
        (one() - a * &q1) * (one() - &ab * &q1) * (one() - c * &q1),
        (one() - &ab * &q.powu(2 * n + 1)) * (one() - &ab * &q.powu(2 * n + 2)),
    )?;
    let big_c = dv(
        -(a * c * &q1) * (one() - &qn) * (one() - b * &qn) * (one() - dv(&ab * &qn, c.clone())?),
        (one() - &ab * &q.powu(2 * n)) * (one() - &ab * &q.powu(2 * n + 1)),
    )?;
    Ok(one() - big_a - big_c)
}

pub(super) fn big_lambda(a: &Q, b: &Q, c: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    let ab = a * b;
    let qn = q.powu(n);
    let mid = one() - &ab * &q.powu(2 * n);
    dv(
        -(a * c * &q.powu(n + 1))
            * (one() - &qn)
            * (one() - a * &qn)
            * (one() - b * &qn)
            * (one() - c * &qn)
            * (one() - &ab * &qn)
            * (one() - dv(&ab * &qn, c.clone())?),
        (one() - &ab * &q.powu(2 * n - 1)) * &mid * &mid * (one() - &ab * &q.powu(2 * n + 1)),
    )
}

/// `Q_j = t^j/((q;q)_j (aqt;q)_∞) 2φ1(aq^{j+1}, abq^{j+1}/c; abq^{2j+2}; q, qct)`.
pub(super) fn big_series(a: &Q, b: &Q, c: &Q, q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let qj1 = q.powu(j + 1);
    let upper = [a * &qj1, dv(a * b * &qj1, c.clone())?];
    let f = rphis_series(&upper, &[a * b * q.powu(2 * j + 2)], q, &(q * c), n)?;
    let f = euler_inv_series(&(a * q), q, n).mul(&f);
    Ok(qlead(&f, j, &q_factorial(q, j).recip()?))
}

/// `Q̃_j = q^{C(j,2)} t^j/(q;q)_j (-t;q)_∞ 2φ1(aq^{j+1}, cq^{j+1}; abq^{2j+2}; q, -t)`.
pub(super) fn big_tilde_series(a: &Q, b: &Q, c: &Q, q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let qj1 = q.powu(j + 1);
    let f = rphis_series(&[a * &qj1, c * &qj1], &[a * b * q.powu(2 * j + 2)], q, &Q::from(-1), n)?;
    let f = euler_series(&Q::from(-1), q, n).mul(&f);
    Ok(qlead(&f, j, &(q_tri(q, j) / q_factorial(q, j))))
}

pub(super) fn big_eval(
    a: &Q,
    b: &Q,
    c: &Q,
    q: &Q,
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
) -> Result<SeriesValue, Error> {
    let r = |x: &Q| ctx.rational(x);
    let qj1 = q.powu(j + 1);
    let upper = [r(&(a * &qj1)), r(&dv(a * b * &qj1, c.clone())?)];
    let z = &r(&(q * c)) * t;
    let f = eval_rphis(&upper, &[r(&(a * b * q.powu(2 * j + 2)))], &r(q), &z, ctx)?;
    let inf = qinf(&(&r(&(a * q)) * t), &r(q), ctx)?;
    Ok(scaled(super::numeric::quotient(&f, &inf)?, &t_pow_over(t, j, &q_factorial(q, j), ctx)?))
}

/// Numeric `Q̃_j`; `alt` selects the `2φ2` form
/// `q^{C(j,2)} t^j (-atq^{j+1};q)_∞/(q;q)_j
///  2φ2(aq^{j+1}, abq^{j+1}/c; abq^{2j+2}, -atq^{j+1}; q, -ctq^{j+1})`.
#[allow(clippy::too_many_arguments)]
pub(super) fn big_tilde_eval(
    a: &Q,
    b: &Q,
    c: &Q,
    q: &Q,
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
    alt: bool,
) -> Result<SeriesValue, Error> {
    let r = |x: &Q| ctx.rational(x);
    let qf = r(q);
    let qj1 = q.powu(j + 1);
    let lower0 = r(&(a * b * q.powu(2 * j + 2)));
    let pre = t_pow_over(t, j, &(q_factorial(q, j) / q_tri(q, j)), ctx)?;
    let (f, inf) = if alt {
        let atq = &r(&(a * &qj1)) * t;
        let upper = [r(&(a * &qj1)), r(&dv(a * b * &qj1, c.clone())?)];
        let z = -(&r(&(c * &qj1)) * t);
        let f = eval_rphis(&upper, &[lower0, -&atq], &qf, &z, ctx)?;
        (f, qinf(&-atq, &qf, ctx)?)
    } else {
        let f = eval_rphis(&[r(&(a * &qj1)), r(&(c * &qj1))], &[lower0], &qf, &-t, ctx)?;
        (f, qinf(&-t, &qf, ctx)?)
    };
    Ok(scaled(product(&f, &inf), &pre))
}

// --- Al-Salam–Carlitz ------------------------------------------------------

/// `Q_j = t^j/((q;q)_j (t, at; q)_∞)`.
pub(super) fn asc_series(a: &Q, q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let f = euler_inv_series(&one(), q, n).mul(&euler_inv_series(a, q, n));
    Ok(qlead(&f, j, &q_factorial(q, j).recip()?))
}

/// `Q̃_j = (-tq^j;q)_∞ q^{C(j,2)} t^j/(q;q)_j 1φ1(0; -tq^j; q, -atq^j)`,
/// expanded as `Σ_k (-1)^k q^{C(k,2)} (-aq^j t)^k/(q;q)_k · (-tq^{j+k};q)_∞`.
pub(super) fn asc_tilde_series(a: &Q, q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let mut f = PowerSeries::zero(n);
    let x = -(a * &q.powu(j));
    for k in 0..=n {
        let c = if k % 2 == 0 { one() } else { Q::from(-1) } * q_tri(q, k) * x.powu(k) / q_factorial(q, k);
        let e = euler_series(&-q.powu(j + k), q, n);
        f = f.add(&e.shift(k).scale(&c));
    }
    Ok(qlead(&f, j, &(q_tri(q, j) / q_factorial(q, j))))
}

pub(super) fn asc_eval(a: &Q, q: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let qf = ctx.rational(q);
    let den = product(&qinf(t, &qf, ctx)?, &qinf(&(&ctx.rational(a) * t), &qf, ctx)?);
    let pre = elementary(t_pow_over(t, j, &q_factorial(q, j), ctx)?, ctx);
    super::numeric::quotient(&pre, &den)
}

pub(super) fn asc_tilde_eval(a: &Q, q: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let qf = ctx.rational(q);
    let tq = &ctx.rational(&q.powu(j)) * t;
    let f = eval_rphis(&[BigFloat::zero()], &[-&tq], &qf, &-(&ctx.rational(a) * &tq), ctx)?;
    let inf = qinf(&-&tq, &qf, ctx)?;
    Ok(scaled(product(&f, &inf), &t_pow_over(t, j, &(q_factorial(q, j) / q_tri(q, j)), ctx)?))
}

// --- Bessel-expanded families ----------------------------------------------
//
// Q_j = 2^{j+1}/t · Σ_k m_k c_k I_{m_k}(t), with coefficient sequences below.

pub(super) fn q_ultra_lambda(beta: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    let qn = q.powu(n);
    let qm = q.powu(n - 1);
    dv(
        (one() - &qn) * (one() - beta * beta * &qm),
        Q::from(4) * (one() - beta * &qm) * (one() - beta * &qn),
    )
}

fn q_ultra_coeff(beta: &Q, q: &Q, j: usize, k: usize) -> Result<(usize, Q), Error> {
    let qj1 = q.powu(j + 1);
    let num = beta.powu(k) * q_pochhammer(&dv(q.clone(), beta.clone())?, q, k) * q_pochhammer(&qj1, q, k);
    let den = q_factorial(q, k) * q_pochhammer(&(beta * &qj1), q, k);
    Ok((j + 2 * k + 1, dv(num, den)?))
}

fn beta0_coeff(q: &Q, j: usize, k: usize) -> (usize, Q) {
    let sign = if k.is_multiple_of(2) { one() } else { Q::from(-1) };
    (j + 2 * k + 1, sign * q_tri(q, k + 1) * q_binomial(j + k, k, q))
}

pub(super) fn aw_b(a: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    let q1 = q.powu(n + 1);
    let big_a = dv(
        (one() - a * a * &q.powu(2 * n + 1)) * (one() + a * &q1) * (one() - a * &q1),
        a * &(one() - a * &q.powu(2 * n + 1)) * (one() - a * &q.powu(2 * n + 2)),
    )?;
    let big_c = dv(
        a * &(one() - q.powu(2 * n)) * (one() - q.powu(2 * n + 1)),
        (one() - a * &q.powu(2 * n)) * (one() - a * &q.powu(2 * n + 1)),
    )?;
    Ok((a + &a.recip()? - big_a - big_c) / Q::from(2))
}

pub(super) fn aw_lambda(a: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    let mid = one() - a * &q.powu(2 * n);
    dv(
        (one() - q.powu(2 * n))
            * (one() - a * a * &q.powu(2 * n))
            * (one() - a * a * &q.powu(2 * n - 1))
            * (one() - q.powu(2 * n + 1)),
        Q::from(4) * (one() - a * &q.powu(2 * n - 1)) * &mid * &mid * (one() - a * &q.powu(2 * n + 1)),
    )
}

fn aw_coeff(a: &Q, q: &Q, m: usize, n: usize) -> Result<(usize, Q), Error> {
    let qm1 = q.powu(m + 1);
    let num = a.powu(n)
        * q_pochhammer(&qm1, q, n)
        * q_pochhammer(&dv(q.clone(), a.clone())?, q, n)
        * q_pochhammer(&-&qm1, q, n)
        * q_pochhammer(&q.powu(2 * m + 3), &(q * q), n);
    let den = q_factorial(q, n) * q_pochhammer(&(a * &q.powu(2 * m + 2)), q, n) * q_pochhammer(&q.powu(n + 2 * m + 2), q, n);
    Ok((n + m + 1, dv(num, den)?))
}

fn bessel_sum_series(
    j: usize,
    n: usize,
    mut coeff: impl FnMut(usize) -> Result<(usize, Q), Error>,
) -> Result<RationalSeries, Error> {
    let mut acc = PowerSeries::zero(n + 1);
    for k in 0.. {
        let (m, c) = coeff(k)?;
        if m > n + 1 {
            break;
        }
        acc = acc.add(&bessel_i_int_series(m, n + 1).scale(&(c * Q::from(m as i64))));
    }
    Ok(divide_by_t(&acc)?.scale(&Q::from(2).powu(j + 1)))
}

fn bessel_sum_eval(
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
    mut coeff: impl FnMut(usize) -> Result<(usize, Q), Error>,
) -> Result<SeriesValue, Error> {
    let s = sum_terms(ctx, |k| {
        let (m, c) = coeff(k)?;
        let i = bessel_i(&Q::from(m as i64), t, ctx)?;
        Ok(Some(scaled(i, &ctx.rational(&(c * Q::from(m as i64))))))
    })?;
    let pre = ctx.int(1).ldexp(j as i32 + 1).checked_div(t)?;
    Ok(scaled(s, &pre))
}

pub(super) fn q_ultra_series(beta: &Q, q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    bessel_sum_series(j, n, |k| q_ultra_coeff(beta, q, j, k))
}

pub(super) fn q_ultra_eval(beta: &Q, q: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    bessel_sum_eval(j, t, ctx, |k| q_ultra_coeff(beta, q, j, k))
}

pub(super) fn beta0_series(q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    bessel_sum_series(j, n, |k| Ok(beta0_coeff(q, j, k)))
}

pub(super) fn beta0_eval(q: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    bessel_sum_eval(j, t, ctx, |k| Ok(beta0_coeff(q, j, k)))
}

pub(super) fn aw_series(a: &Q, q: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    bessel_sum_series(j, n, |k| aw_coeff(a, q, j, k))
}

pub(super) fn aw_eval(a: &Q, q: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    bessel_sum_eval(j, t, ctx, |k| aw_coeff(a, q, j, k))
}
