//! Numeric addition theorems: the left side is evaluated in closed form, the
//! right side is summed to `N` with the printed weights.

use super::{Case, NumericOutcome, Outcome};
use crate::error::Error;
use crate::families::{FamilyId, make_family};
use crate::scalar::{
    BigComplex, BigFloat, ExactRational, PrecisionContext, gamma, pochhammer, q_pochhammer,
    q_pochhammer_inf, q_pochhammer_multi, rat, tri,
};
use crate::series::{SeriesValue, bessel_j, eval_pfq, eval_rphis};
use crate::translation::translate_eval;

type Q = ExactRational;

fn int(n: usize) -> Q {
    Q::from(n as i64)
}

/// `w·l·r` with a tail bound propagated from both factors.
fn triple(w: &BigFloat, l: &SeriesValue, r: &SeriesValue) -> (BigFloat, BigFloat) {
    let v = &(w * &l.value) * &r.value;
    let t = &(&(&l.tail_bound * &r.value.abs()) + &(&r.tail_bound * &l.value.abs())) + &(&l.tail_bound * &r.tail_bound);
    (v, &w.abs() * &t)
}

/// `Σ_{n=0}^{N} term(n)`. The tail estimate is the last included term,
/// enlarged by the geometric continuation `r/(1-r)` when the ratio of the
/// last two terms is known, plus the summands' own truncation bounds and a
/// rounding floor.
pub(super) fn partial_sum(
    n_max: usize,
    ctx: &PrecisionContext,
    mut term: impl FnMut(usize) -> Result<(BigFloat, BigFloat), Error>,
) -> Result<(BigFloat, usize, BigFloat), Error> {
    let bits = ctx.working_bits();
    let mut sum = BigFloat::zero().with_prec(bits);
    let mut inner = BigFloat::zero();
    let (mut prev, mut last) = (BigFloat::zero(), BigFloat::zero());
    for n in 0..=n_max {
        let (v, t) = term(n)?;
        sum = &sum + &v;
        inner = &inner + &t;
        prev = last;
        last = v.abs();
    }
    let mut trunc = last.clone();
    if !prev.is_zero() && !last.is_zero() {
        let r = &last / &prev;
        if r < BigFloat::one() {
            let geo = &(&last * &r) / &(&BigFloat::one() - &r);
            trunc = trunc.max_abs(&geo.ldexp(1)).clone();
        } else {
            // not yet decaying: no honest bound from the terms seen
            trunc = &last * &BigFloat::from_i64(n_max as i64 + 1);
        }
    }
    let floor = &sum.abs() * &BigFloat::epsilon(bits).ldexp(8);
    Ok((sum, n_max + 1, &(&trunc + &inner) + &floor))
}

fn outcome(lhs: SeriesValue, rhs: (BigFloat, usize, BigFloat)) -> Outcome {
    let (rhs, n_terms, tail) = rhs;
    Outcome::Numeric(NumericOutcome {
        lhs: lhs.value,
        rhs,
        n_terms,
        tail: &tail + &lhs.tail_bound,
        residual: BigFloat::zero(),
        notes: Vec::new(),
    })
}

fn sv(value: BigFloat) -> SeriesValue {
    SeriesValue::exact(value, 1)
}

// --- Bessel ---------------------------------------------------------------

pub(super) fn bessel_plus(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let sweep = c.opt("nu").is_none();
    let nus = match c.opt("nu") {
        Some(v) => vec![v.clone()],
        None => vec![rat(1, 2), Q::one(), rat(3, 2)],
    };
    let mut worst: Option<(Q, NumericOutcome)> = None;
    for nu in nus {
        let Outcome::Numeric(o) = bessel_plus_at(&nu, c, ctx)? else { unreachable!() };
        if worst.as_ref().is_none_or(|(_, w)| o.rel_error() > w.rel_error()) {
            worst = Some((nu, o));
        }
    }
    let (nu, mut o) = worst.expect("at least one order");
    if sweep {
        o.notes.push(("nu".into(), "1/2,1,3/2".into()));
        o.notes.push(("worst_nu".into(), nu.to_string()));
    }
    Ok(Outcome::Numeric(o))
}

fn bessel_plus_at(nu: &Q, c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    if nu <= &Q::zero() {
        return Err(Error::Domain("bessel_plus needs nu > 0".into()));
    }
    let (y, x) = (c.s(ctx), c.t(ctx));
    if x <= BigFloat::zero() || y <= BigFloat::zero() {
        return Err(Error::Domain("bessel_plus needs x, y > 0".into()));
    }
    let xy = &x + &y;
    let j = bessel_j(nu, &xy, ctx)?;
    let scale = xy.pow_rational(nu)?;
    let lhs = SeriesValue {
        value: j.value.checked_div(&scale)?,
        terms_used: j.terms_used,
        tail_bound: j.tail_bound.checked_div(&scale)?,
    };
    let pre = gamma(nu, ctx)?.checked_div(&(&x * &y).ldexp(-1).pow_rational(nu)?)?;
    let two_nu = nu * &Q::from(2);
    let rhs = partial_sum(c.n, ctx, |n| {
        let sign = if n % 2 == 0 { Q::one() } else { Q::from(-1) };
        let coef = (nu + &int(n)) * sign * pochhammer(&two_nu, n) / Q::factorial(n as u64);
        let order = nu + &int(n);
        let w = &pre * &ctx.rational(&coef);
        Ok(triple(&w, &bessel_j(&order, &x, ctx)?, &bessel_j(&order, &y, ctx)?))
    })?;
    Ok(outcome(lhs, rhs))
}

// --- confluent hypergeometric -----------------------------------------------

pub(super) fn conf_hyp_1f1(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (al, be) = (c.get("alpha"), c.get("beta"));
    let (s, t) = (c.s(ctx), c.t(ctx));
    let one = Q::one();
    let r = |x: &Q| ctx.rational(x);
    let lhs = eval_pfq(&[r(&(al + &one))], &[r(&(al + be + Q::from(2)))], &(&s + &t), ctx)?;
    let ts = &t * &s;
    let rhs = partial_sum(c.n, ctx, |n| {
        // (α+β+1)_n/(α+β+1)_{2n} = 1/(α+β+1+n)_n
        let coef = (pochhammer(&(al + &one), n) * pochhammer(&(be + &one), n)).checked_div(
            &(pochhammer(&(al + be + one.clone() + int(n)), n)
                * pochhammer(&(al + be + Q::from(2)), 2 * n)
                * Q::factorial(n as u64)),
        )?;
        let a = [r(&(al + &int(n + 1)))];
        let b = [r(&(al + be + int(2 * n + 2)))];
        let w = &r(&coef) * &ts.powi(n as i64)?;
        Ok(triple(&w, &eval_pfq(&a, &b, &t, ctx)?, &eval_pfq(&a, &b, &s, ctx)?))
    })?;
    Ok(outcome(lhs, rhs))
}

// --- little q-Jacobi --------------------------------------------------------

/// `q^{3C(j,2)} (aq,bq,abq;q)_j (qa)^j / ((q;q)_j (abq,abq²;q)_{2j})`, the
/// printed coefficient of `(st)^j`.
pub(crate) fn little_weight(a: &Q, b: &Q, q: &Q, j: usize) -> Result<Q, Error> {
    let ab = a * b;
    let num = q.pow(3 * tri(j))? * q_pochhammer_multi(&[a * q, b * q, &ab * q], q, j) * (q * a).powu(j);
    let den = q_pochhammer(q, q, j) * q_pochhammer_multi(&[&ab * q, &ab * q * q], q, 2 * j);
    num.checked_div(&den)
}

fn little_common(c: &Case, ctx: &PrecisionContext) -> Result<(Q, Q, Q, BigFloat, BigFloat, SeriesValue), Error> {
    make_family(FamilyId::LittleQJacobi, &c.subset(&["a", "b", "q"]))?;
    let (a, b, q) = (c.get("a").clone(), c.get("b").clone(), c.get("q").clone());
    let (s, t) = (c.s(ctx), c.t(ctx));
    if t.is_zero() {
        return Err(Error::Domain("little_qj needs t != 0".into()));
    }
    let r = |x: &Q| ctx.rational(x);
    let lhs = eval_rphis(&[r(&(&a * &q)), -(&s / &t)], &[r(&(&a * &b * &q * &q))], &r(&q), &t, ctx)?;
    Ok((a, b, q, s, t, lhs))
}

fn little_rhs(c: &Case, ctx: &PrecisionContext, alt: bool) -> Result<Outcome, Error> {
    let (a, b, q, s, t, lhs) = little_common(c, ctx)?;
    let r = |x: &Q| ctx.rational(x);
    let qf = r(&q);
    let st = &s * &t;
    let t_inf = if alt { q_pochhammer_inf(&t, &qf, ctx)? } else { BigFloat::one() };
    let rhs = partial_sum(c.n, ctx, |j| {
        let qj1 = q.powu(j + 1);
        let lower = [r(&(&a * &b * q.powu(2 * j + 2)))];
        let w = &(&r(&little_weight(&a, &b, &q, j)?) * &st.powi(j as i64)?);
        let left = if alt {
            let v = eval_rphis(&[r(&(&b * &qj1))], &lower, &qf, &(&r(&(&a * &qj1)) * &t), ctx)?;
            SeriesValue { value: v.value.checked_div(&t_inf)?, terms_used: v.terms_used, tail_bound: v.tail_bound.checked_div(&t_inf.abs())? }
        } else {
            eval_rphis(&[BigFloat::zero(), r(&(&a * &qj1))], &lower, &qf, &t, ctx)?
        };
        let right = eval_rphis(&[r(&(&a * &qj1))], &lower, &qf, &-(&s * &r(&q.powu(j))), ctx)?;
        Ok(triple(w, &left, &right))
    })?;
    Ok(outcome(lhs, rhs))
}

pub(super) fn little_qj(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    little_rhs(c, ctx, false)
}

pub(super) fn little_qj_alt(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    little_rhs(c, ctx, true)
}

// --- big q-Jacobi -----------------------------------------------------------

/// `(-ac)^j q^{j(j+1)} (aq,bq,cq,abq,abq/c;q)_j / ((q;q)_j (abq,abq²;q)_{2j})`,
/// the printed coefficient of `(st)^j`.
pub(crate) fn big_weight(a: &Q, b: &Q, c: &Q, q: &Q, j: usize) -> Result<Q, Error> {
    let ab = a * b;
    let num = (-(a * c)).powu(j)
        * q.powu(j * (j + 1))
        * q_pochhammer_multi(&[a * q, b * q, c * q, &ab * q, (&ab * q).checked_div(c)?], q, j);
    let den = q_pochhammer(q, q, j) * q_pochhammer_multi(&[&ab * q, &ab * q * q], q, 2 * j);
    num.checked_div(&den)
}

pub(super) fn big_qj(cs: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    make_family(FamilyId::BigQJacobi, &cs.subset(&["a", "b", "c", "q"]))?;
    let (a, b, c, q) = (cs.get("a"), cs.get("b"), cs.get("c"), cs.get("q"));
    let (s, t) = (cs.s(ctx), cs.t(ctx));
    if t.is_zero() {
        return Err(Error::Domain("big_qj needs t != 0".into()));
    }
    let r = |x: &Q| ctx.rational(x);
    let qf = r(q);
    let ab = a * b;
    // printed left side: (-qas;q)_∞/(-s;q)_∞ 3φ2(qa, qab/c, -s/t; abq², -qas; q, qct)
    let qas = &r(&(q * a)) * &s;
    let g = eval_rphis(
        &[r(&(q * a)), r(&(q * &ab).checked_div(c)?), -(&s / &t)],
        &[r(&(&ab * q * q)), -&qas],
        &qf,
        &(&r(&(q * c)) * &t),
        ctx,
    )?;
    let k = q_pochhammer_inf(&-&qas, &qf, ctx)?.checked_div(&q_pochhammer_inf(&-&s, &qf, ctx)?)?;
    let lhs = SeriesValue { value: &g.value * &k, terms_used: g.terms_used, tail_bound: &g.tail_bound * &k.abs() };
    let st = &s * &t;
    let rhs = partial_sum(cs.n, ctx, |j| {
        let qj1 = q.powu(j + 1);
        let lower = [r(&(&ab * &q.powu(2 * j + 2)))];
        let w = &r(&big_weight(a, b, c, q, j)?) * &st.powi(j as i64)?;
        let left = eval_rphis(
            &[r(&(a * &qj1)), r(&(&ab * &qj1).checked_div(c)?)],
            &lower,
            &qf,
            &(&r(&(q * c)) * &t),
            ctx,
        )?;
        let right = eval_rphis(&[r(&(a * &qj1)), r(&(c * &qj1))], &lower, &qf, &-&s, ctx)?;
        Ok(triple(&w, &left, &right))
    })?;
    Ok(outcome(lhs, rhs))
}

// --- Al-Salam–Carlitz ---------------------------------------------------------

pub(super) fn asc_qtrans(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    make_family(FamilyId::AlSalamCarlitz, &c.subset(&["a", "q"]))?;
    let (a, q) = (c.get("a"), c.get("q"));
    let (s, t) = (c.s(ctx), c.t(ctx));
    if t.is_zero() {
        return Err(Error::Domain("asc_qtrans needs t != 0".into()));
    }
    let r = |x: &Q| ctx.rational(x);
    let qf = r(q);
    let af = r(a);
    let zero = BigFloat::zero();
    let g = eval_rphis(&[zero.clone(), -(&s / &t)], &[-&s], &qf, &(&af * &t), ctx)?;
    let k = q_pochhammer_inf(&-&s, &qf, ctx)?.checked_div(&q_pochhammer_inf(&t, &qf, ctx)?)?;
    let lhs = SeriesValue { value: &g.value * &k, terms_used: g.terms_used, tail_bound: &g.tail_bound * &k.abs() };
    let pre = q_pochhammer_inf(&t, &qf, ctx)?.mul_ref(&q_pochhammer_inf(&(&af * &t), &qf, ctx)?).recip()?;
    let ast = &(&af * &s) * &t;
    let rhs = partial_sum(c.n, ctx, |n| {
        let qn = r(&q.powu(n));
        let sqn = &s * &qn;
        let coef = q.powu(n * n.saturating_sub(1)).checked_div(&q_pochhammer(q, q, n))?;
        let w = &(&(&pre * &q_pochhammer_inf(&-&sqn, &qf, ctx)?) * &r(&coef)) * &(-&ast).powi(n as i64)?;
        let f = eval_rphis(std::slice::from_ref(&zero), &[-&sqn], &qf, &-(&af * &sqn), ctx)?;
        Ok(triple(&w, &f, &sv(BigFloat::one())))
    })?;
    Ok(outcome(lhs, rhs))
}

// --- Bessel-expanded q-families -----------------------------------------------

pub(crate) fn q_ultra_weight(beta: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    (q_pochhammer(q, q, n) * q_pochhammer(&(beta * beta), q, n))
        .checked_div(&(Q::from(4).powu(n) * q_pochhammer(beta, q, n) * q_pochhammer(&(q * beta), q, n)))
}

pub(crate) fn beta0_weight(q: &Q, n: usize) -> Q {
    q_pochhammer(q, q, n) / Q::from(4).powu(n)
}

pub(crate) fn aw_weight(a: &Q, q: &Q, n: usize) -> Result<Q, Error> {
    (q_pochhammer(&(q * q), q, 2 * n) * q_pochhammer(&(a * a * q), q, 2 * n))
        .checked_div(&(Q::from(4).powu(n) * q_pochhammer(&(a * q), q, 2 * n) * q_pochhammer(&(a * q * q), q, 2 * n)))
}

/// `Q_0(s+t) = Σ w_n Q_n(s) Q_n(t)` with the family's own `Q_n`.
fn sum_rule(
    c: &Case,
    ctx: &PrecisionContext,
    id: FamilyId,
    keys: &[&str],
    weight: impl Fn(usize) -> Result<Q, Error>,
) -> Result<Outcome, Error> {
    let f = make_family(id, &c.subset(keys))?;
    let (s, t) = (c.s(ctx), c.t(ctx));
    let lhs = f.q_function(0, &(&s + &t), ctx)?;
    let rhs = partial_sum(c.n, ctx, |n| {
        let w = ctx.rational(&weight(n)?);
        Ok(triple(&w, &f.q_function(n, &s, ctx)?, &f.q_function(n, &t, ctx)?))
    })?;
    Ok(outcome(lhs, rhs))
}

pub(super) fn q_ultra(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (beta, q) = (c.get("beta").clone(), c.get("q").clone());
    sum_rule(c, ctx, FamilyId::QUltraspherical, &["beta", "q"], |n| q_ultra_weight(&beta, &q, n))
}

pub(super) fn q_ultra_beta0(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let q = c.get("q").clone();
    sum_rule(c, ctx, FamilyId::QUltrasphericalBeta0, &["q"], |n| Ok(beta0_weight(&q, n)))
}

pub(super) fn askey_wilson(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (a, q) = (c.get("a").clone(), c.get("q").clone());
    sum_rule(c, ctx, FamilyId::AskeyWilsonSlice, &["a", "q"], |n| aw_weight(&a, &q, n))
}

pub(super) fn affine(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let f = make_family(FamilyId::Derangement, &c.subset(&["alpha", "x"]))?;
    let (s, t) = (c.s(ctx), c.t(ctx));
    let lhs = translate_eval(&f, f.translation(), &s, &t, ctx)?;
    let rhs = partial_sum(c.n, ctx, |n| {
        let w = ctx.rational(&f.weight(n)?);
        Ok(triple(&w, &f.q_function(n, &s, ctx)?, &f.q_function(n, &t, ctx)?))
    })?;
    Ok(outcome(lhs, rhs))
}

// --- Meixner–Pollaczek as moments (complex) -------------------------------------

/// `n! |(λ+ix)_n|² / ((2λ-1+n)_n (2λ)_{2n})`: the weight without `w^{2n}`.
pub(crate) fn mp_weight_real(lambda: &Q, x: &Q, n: usize) -> Result<Q, Error> {
    let mods: Q = (0..n).map(|k| (lambda + &int(k)).powu(2) + x * x).product();
    let two_l = lambda * &Q::from(2);
    (Q::factorial(n as u64) * mods)
        .checked_div(&(pochhammer(&(&two_l - &Q::one() + int(n)), n) * pochhammer(&two_l, 2 * n)))
}

pub(super) fn mp_moments(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    make_family(FamilyId::MeixnerPollaczekMoments, &c.subset(&["lambda", "phi_over_pi", "x"]))?;
    let (lambda, phi, x) = (c.get("lambda"), c.get("phi_over_pi"), c.get("x"));
    let bits = ctx.working_bits();
    let (s, t) = (c.s(ctx), c.t(ctx));
    let r = |v: &Q| ctx.rational(v);
    let cx = |v: BigFloat| BigComplex::real(v);
    // w = e^{-2iφ} - 1
    let theta = &BigFloat::pi(bits) * &r(&(phi * &Q::from(-2)));
    let w = BigComplex::cis(&theta).sub(&BigComplex::real(BigFloat::one()));
    let top = |n: usize| BigComplex::new(r(&(lambda + &int(n))), r(x));
    let bottom = |n: usize| cx(r(&(lambda * &Q::from(2) + int(2 * n))));
    // Q_n(u) = u^n/n! e^u 1F1(λ+ix+n; 2λ+2n; wu)
    let q_fn = |n: usize, u: &BigFloat| -> Result<SeriesValue<BigComplex>, Error> {
        let f = eval_pfq(&[top(n)], &[bottom(n)], &w.scale(u), ctx)?;
        let pre = &(&u.powi(n as i64)? * &r(&Q::factorial(n as u64).recip()?)) * &u.exp();
        Ok(SeriesValue { value: f.value.scale(&pre), terms_used: f.terms_used, tail_bound: &f.tail_bound * &pre.abs() })
    };
    let lhs = q_fn(0, &(&s + &t))?;
    let mut sum = BigComplex::real(BigFloat::zero().with_prec(bits));
    let mut inner = BigFloat::zero();
    let (mut prev, mut last) = (BigFloat::zero(), BigFloat::zero());
    let w2 = w.mul(&w);
    let mut w2n = BigComplex::real(BigFloat::one());
    for n in 0..=c.n {
        let coef = w2n.scale(&r(&mp_weight_real(lambda, x, n)?));
        let (qs, qt) = (q_fn(n, &s)?, q_fn(n, &t)?);
        let v = coef.mul(&qs.value).mul(&qt.value);
        let tail = &coef.abs()
            * &(&(&(&qs.tail_bound * &qt.value.abs()) + &(&qt.tail_bound * &qs.value.abs())) + &(&qs.tail_bound * &qt.tail_bound));
        sum = sum.add(&v);
        inner = &inner + &tail;
        prev = last;
        last = v.abs();
        w2n = w2n.mul(&w2);
    }
    let mut trunc = last.clone();
    if !prev.is_zero() && !last.is_zero() {
        let q = &last / &prev;
        if q < BigFloat::one() {
            trunc = trunc.max_abs(&(&(&last * &q) / &(&BigFloat::one() - &q)).ldexp(1)).clone();
        }
    }
    let floor = &sum.abs() * &BigFloat::epsilon(bits).ldexp(8);
    // the left side is real; its imaginary part is pure rounding
    let scale = lhs.value.abs();
    let residual = if scale.is_zero() { BigFloat::zero() } else { &(&sum.im - &lhs.value.im).abs() / &scale };
    Ok(Outcome::Numeric(NumericOutcome {
        lhs: lhs.value.re,
        rhs: sum.re,
        n_terms: c.n + 1,
        tail: &(&(&trunc + &inner) + &floor) + &lhs.tail_bound,
        residual,
        notes: vec![("imag_residual".into(), residual_digits(&sum.im))],
    }))
}

fn residual_digits(v: &BigFloat) -> String {
    v.to_decimal_digits(6)
}
