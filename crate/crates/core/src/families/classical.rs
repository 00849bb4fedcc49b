//! Classical and Sheffer-type families (exponential normalisation `n!`).

use super::numeric::{elementary, scaled, t_pow_over};
use crate::error::Error;
use crate::scalar::{BigFloat, ExactRational, PrecisionContext, gamma};
use crate::series::{PowerSeries, RationalSeries, SeriesValue, bessel_i, eval_pfq, exp_series, monomial, pfq_series};

type Q = ExactRational;

pub(super) fn dv(a: Q, b: Q) -> Result<Q, Error> {
    a.checked_div(&b)
}

fn int(n: usize) -> Q {
    Q::from(n as i64)
}

/// `t^j/j! · f(t)`.
fn lead(f: &RationalSeries, j: usize) -> RationalSeries {
    f.shift(j).scale(&Q::factorial(j as u64).recip().expect("j! != 0"))
}

/// `(1 + u)^e` where `u` has zero constant term.
fn one_plus_pow(u: &RationalSeries, e: &Q) -> Result<RationalSeries, Error> {
    PowerSeries::one(u.degree()).add(u).pow(e)
}

// --- ultraspherical --------------------------------------------------------

pub(super) fn ultra_lambda(nu: &Q, n: usize) -> Result<Q, Error> {
    if n == 1 {
        // the general form is 0/0 at ν = 0
        return dv(Q::one(), Q::from(2) * (nu + &Q::one()));
    }
    let j = int(n);
    dv(&j * &(&j + &(nu * &Q::from(2)) - Q::one()), Q::from(4) * (nu + &j - Q::one()) * (nu + &j))
}

/// `Q_j = t^j/j! · 0F1(; ν+j+1; t²/4)`.
pub(super) fn ultra_series(nu: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let c = nu + &int(j + 1);
    let f = pfq_series(&[], &[c], &Q::frac(1, 4), n / 2)?;
    let mut out = PowerSeries::zero(n);
    for (m, v) in f.coeffs().iter().enumerate() {
        if j + 2 * m <= n {
            out = out.add(&monomial(v.clone(), j + 2 * m, n));
        }
    }
    Ok(out.scale(&Q::factorial(j as u64).recip()?))
}

/// Printed form `2^j Γ(ν+j+1) / (j! (t/2)^ν) · I_{ν+j}(t)` (needs `t > 0`
/// unless `ν` is an integer).
pub(super) fn ultra_eval(nu: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    let order = nu + &int(j);
    let i = bessel_i(&order, &t, ctx)?;
    let g = gamma(&(&order + &Q::one()), ctx)?;
    let half_pow = t.ldexp(-1).pow_rational(nu)?;
    let pre = (&g.ldexp(j as i32) / &ctx.rational(&Q::factorial(j as u64))).checked_div(&half_pow)?;
    Ok(scaled(i, &pre))
}

// --- Jacobi ----------------------------------------------------------------

pub(super) fn jacobi_b(alpha: &Q, beta: &Q, n: usize) -> Result<Q, Error> {
    let s = alpha + beta;
    if n == 0 {
        return dv(beta - alpha, &s + &Q::from(2));
    }
    let m = &s + &int(2 * n);
    dv(beta * beta - alpha * alpha, &m * &(&m + &Q::from(2)))
}

pub(super) fn jacobi_lambda(alpha: &Q, beta: &Q, n: usize) -> Result<Q, Error> {
    let s = alpha + beta;
    if n == 1 {
        let s2 = &s + &Q::from(2);
        return dv(
            Q::from(4) * (alpha + &Q::one()) * (beta + &Q::one()),
            &s2 * &s2 * (&s + &Q::from(3)),
        );
    }
    let j = int(n);
    let m = &s + &int(2 * n);
    dv(
        Q::from(4) * &j * (&j + alpha) * (&j + beta) * (&j + &s),
        (&m - &Q::one()) * &m * &m * (&m + &Q::one()),
    )
}

/// `t^j e^{-t}/j! 1F1(β+j+1; α+β+2j+2; 2t)`, or the Kummer-transformed
/// `t^j e^{t}/j! 1F1(α+j+1; α+β+2j+2; -2t)`.
pub(super) fn jacobi_series(alpha: &Q, beta: &Q, j: usize, n: usize, alt: bool) -> Result<RationalSeries, Error> {
    let (num, e, z) = jacobi_params(alpha, beta, j, alt);
    let f = pfq_series(&[num.0], &[num.1], &z, n)?;
    Ok(lead(&exp_series(&e, n).mul(&f), j))
}

fn jacobi_params(alpha: &Q, beta: &Q, j: usize, alt: bool) -> ((Q, Q), Q, Q) {
    let top = alpha + beta + int(2 * j + 2);
    if alt {
        ((alpha + &int(j + 1), top), Q::one(), Q::from(-2))
    } else {
        ((beta + &int(j + 1), top), Q::from(-1), Q::from(2))
    }
}

pub(super) fn jacobi_eval(
    alpha: &Q,
    beta: &Q,
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
    alt: bool,
) -> Result<SeriesValue, Error> {
    let ((a, b), e, z) = jacobi_params(alpha, beta, j, alt);
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    let f = eval_pfq(&[ctx.rational(&a)], &[ctx.rational(&b)], &(&ctx.rational(&z) * &t), ctx)?;
    let pre = &t_pow_over(&t, j, &Q::factorial(j as u64), ctx)? * &(&ctx.rational(&e) * &t).exp();
    Ok(scaled(f, &pre))
}

// --- Hermite ---------------------------------------------------------------

/// `t^j/j! e^{t²/4}`.
pub(super) fn hermite_series(j: usize, n: usize) -> Result<RationalSeries, Error> {
    let u = monomial(Q::frac(1, 4), 2, n);
    Ok(lead(&u.exp()?, j))
}

pub(super) fn hermite_eval(j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let v = &t_pow_over(t, j, &Q::factorial(j as u64), ctx)? * &(t * t).ldexp(-2).exp();
    Ok(elementary(v, ctx))
}

// --- Laguerre --------------------------------------------------------------

/// `t^j/j! (1-t)^{-α-j-1}`.
pub(super) fn laguerre_series(alpha: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let e = alpha + &int(j + 1);
    Ok(lead(&pfq_series(&[e], &[], &Q::one(), n)?, j))
}

pub(super) fn laguerre_eval(alpha: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let base = &ctx.int(1) - t;
    if base.is_negative() || base.is_zero() {
        return Err(Error::Domain("Laguerre Q_j needs t < 1".into()));
    }
    let v = &t_pow_over(t, j, &Q::factorial(j as u64), ctx)? * &base.pow_rational(&-(alpha + &int(j + 1)))?;
    Ok(elementary(v, ctx))
}

// --- Meixner ---------------------------------------------------------------

pub(super) fn meixner_b(beta: &Q, c: &Q, n: usize) -> Result<Q, Error> {
    let j = int(n);
    dv(&j + &((&j + beta) * c), Q::one() - c)
}

/// `((1-c)/(1-c e^t))^{β+j} (e^t-1)^j / j!`.
pub(super) fn meixner_series(beta: &Q, c: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let em1 = exp_series(&Q::one(), n).sub(&PowerSeries::one(n));
    // (1 - c e^t)/(1 - c) = 1 - c/(1-c) (e^t - 1)
    let u = em1.scale(&dv(-c, Q::one() - c)?);
    let g = one_plus_pow(&u, &-(beta + &int(j)))?;
    Ok(g.mul(&em1.pow_int(j)).scale(&Q::factorial(j as u64).recip()?))
}

pub(super) fn meixner_eval(beta: &Q, c: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let et = t.with_prec(ctx.working_bits().max(t.prec())).exp();
    let one = ctx.int(1);
    let cf = ctx.rational(c);
    let den = &one - &(&cf * &et);
    if den.is_negative() || den.is_zero() {
        return Err(Error::Domain("Meixner Q_j needs c e^t < 1".into()));
    }
    let ratio = (&one - &cf).checked_div(&den)?;
    let v = &ratio.pow_rational(&(beta + &int(j)))? * &(&et - &one).powi(j as i64)?;
    Ok(elementary(&v / &ctx.rational(&Q::factorial(j as u64)), ctx))
}

// --- Charlier --------------------------------------------------------------

/// `(e^t-1)^j / j! · exp(a(e^t-1))`.
pub(super) fn charlier_series(a: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let em1 = exp_series(&Q::one(), n).sub(&PowerSeries::one(n));
    let e = em1.scale(a).exp()?;
    Ok(e.mul(&em1.pow_int(j)).scale(&Q::factorial(j as u64).recip()?))
}

pub(super) fn charlier_eval(a: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let em1 = &t.with_prec(ctx.working_bits().max(t.prec())).exp() - &ctx.int(1);
    let v = &em1.powi(j as i64)? * &(&ctx.rational(a) * &em1).exp();
    Ok(elementary(&v / &ctx.rational(&Q::factorial(j as u64)), ctx))
}

// --- Meixner–Pollaczek -----------------------------------------------------

/// `2^j/j! · sin(t/2)^j · h^{-(2λ+j)}` with `h = cos(t/2) + cot φ · sin(t/2)`.
pub(super) fn mp_series(lambda: &Q, cot: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    // Taylor coefficients of sin(t/2) and cos(t/2)
    let mut sin = PowerSeries::zero(n);
    let mut cos = PowerSeries::zero(n);
    for k in 0..=n {
        let c = Q::frac(1, 2).powu(k) / Q::factorial(k as u64);
        let sign = if (k / 2) % 2 == 0 { Q::one() } else { Q::from(-1) };
        let m = monomial(c * sign, k, n);
        if k % 2 == 0 { cos = cos.add(&m) } else { sin = sin.add(&m) }
    }
    let h = cos.add(&sin.scale(cot));
    let e = -(lambda * &Q::from(2) + int(j));
    let g = h.pow(&e)?;
    Ok(g.mul(&sin.pow_int(j)).scale(&(Q::from(2).powu(j) / Q::factorial(j as u64))))
}

pub(super) fn mp_eval(lambda: &Q, cot: &Q, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    let half = t.with_prec(ctx.working_bits().max(t.prec())).ldexp(-1);
    let (s, c) = (half.sin(), half.cos());
    let h = &c + &(&ctx.rational(cot) * &s);
    if h.is_negative() || h.is_zero() {
        return Err(Error::Domain("Meixner-Pollaczek Q_j needs cos(t/2) + cot(phi) sin(t/2) > 0".into()));
    }
    let e = -(lambda * &Q::from(2) + int(j));
    let v = &(&s.ldexp(1).powi(j as i64)? * &h.pow_rational(&e)?) / &ctx.rational(&Q::factorial(j as u64));
    Ok(elementary(v, ctx))
}
