//! Auxiliary identities the addition theorems rest on: plane-wave and Bessel
//! expansions, Hankel determinant evaluations, connection formulas and the
//! basic hypergeometric transformations behind the alternative forms.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::numeric::partial_sum;
use super::{Case, NumericOutcome, Outcome};
use crate::error::Error;
use crate::families::{FamilyId, make_family};
use crate::jfraction::{HankelKind, det_rational, hankel};
use crate::scalar::{BigFloat, ExactRational, PrecisionContext, gamma, pochhammer, q_pochhammer, q_pochhammer_inf, rat, recip_gamma};
use crate::series::{SeriesValue, bessel_i, bessel_j, eval_pfq, eval_rphis};

type Q = ExactRational;

fn int(n: usize) -> Q {
    Q::from(n as i64)
}

fn fact(n: usize) -> Q {
    Q::factorial(n as u64)
}

fn numeric(lhs: SeriesValue, rhs: (BigFloat, usize, BigFloat)) -> Outcome {
    Outcome::Numeric(NumericOutcome {
        lhs: lhs.value,
        rhs: rhs.0,
        n_terms: rhs.1,
        tail: &rhs.2 + &lhs.tail_bound,
        residual: BigFloat::zero(),
        notes: Vec::new(),
    })
}

fn scaled(v: SeriesValue, k: &BigFloat) -> (BigFloat, BigFloat) {
    (&v.value * k, &v.tail_bound * &k.abs())
}

/// Values of `p_0..p_n` from a three-term recurrence `p_{k+1} = f(k, p_k, p_{k-1})`.
fn recurrence(n: usize, p0: Q, p1: Q, step: impl Fn(usize, &Q, &Q) -> Q) -> Vec<Q> {
    let mut out = vec![p0, p1];
    for k in 1..n {
        let next = step(k, &out[k], &out[k - 1]);
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

pub(super) fn hermite_values(n: usize, x: &Q) -> Vec<Q> {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    recurrence(n, Q::one(), x * &Q::from(2), |k, h, hm| x * &Q::from(2) * h - int(2 * k) * hm)
}

/// `C_0^ν(x), ..., C_n^ν(x)`.
fn gegenbauer_values(n: usize, nu: &Q, x: &Q) -> Vec<Q> {
    // (k+1) C_{k+1} = 2x(k+ν) C_k - (k+2ν-1) C_{k-1}
    recurrence(n, Q::one(), nu * &Q::from(2) * x, |k, c, cm| {
        (x * &Q::from(2) * (int(k) + nu) * c - (int(k) + nu * &Q::from(2) - Q::one()) * cm) / int(k + 1)
    })
}

fn sweep(c: &Case, key: &str, defaults: &[Q]) -> Vec<Q> {
    match c.opt(key) {
        Some(v) => vec![v.clone()],
        None => defaults.to_vec(),
    }
}

fn list(v: &[Q]) -> String {
    v.iter().map(Q::to_string).collect::<Vec<_>>().join(",")
}

// --- exact identities ------------------------------------------------------

pub(super) fn hermite_convolution(c: &Case, _: &PrecisionContext) -> Result<Outcome, Error> {
    let xs = sweep(c, "x", &[Q::zero(), Q::one(), rat(1, 2)]);
    let m_max = c.n;
    let mut pairs = Vec::new();
    for x in &xs {
        let h = hermite_values(2 * m_max, x);
        for m in 0..=m_max {
            for n in 0..=m_max {
                let lhs = &h[m + n] / &(fact(m) * fact(n));
                let rhs: Q = (0..=m.min(n))
                    .map(|k| Q::from(-2).powu(k) / fact(k) * &h[m - k] / fact(m - k) * &h[n - k] / fact(n - k))
                    .sum();
                pairs.push((lhs, rhs));
            }
        }
    }
    let notes = if c.opt("x").is_none() { vec![("x".into(), list(&xs))] } else { Vec::new() };
    Ok(Outcome::Exact { pairs, n_terms: m_max + 1, notes })
}

/// `(x²-1)^{n(n+1)/2}/2^{n²} ∏_{r=1}^n r!(2ν)_{r-1}/((ν+1/2)_{r-1}(ν+1/2)_r)`.
pub(crate) fn gegenbauer_hankel_closed_form(n: usize, nu: &Q, x: &Q) -> Result<Q, Error> {
    let h = nu + &rat(1, 2);
    let two_nu = nu * &Q::from(2);
    let mut prod = (x * x - Q::one()).powu(n * (n + 1) / 2) / Q::from(2).powu(n * n);
    for r in 1..=n {
        prod = (prod * fact(r) * pochhammer(&two_nu, r - 1)).checked_div(&(pochhammer(&h, r - 1) * pochhammer(&h, r)))?;
    }
    Ok(prod)
}

pub(crate) fn gegenbauer_hankel_det(n: usize, nu: &Q, x: &Q) -> Result<Q, Error> {
    let c = gegenbauer_values(2 * n, nu, x);
    let two_nu = nu * &Q::from(2);
    let rows = (0..=n)
        .map(|i| (0..=n).map(|j| (fact(i + j) * &c[i + j]).checked_div(&pochhammer(&two_nu, i + j))).collect())
        .collect::<Result<Vec<Vec<Q>>, Error>>()?;
    Ok(det_rational(&rows))
}

pub(super) fn hankel_gegenbauer(c: &Case, _: &PrecisionContext) -> Result<Outcome, Error> {
    let nus = sweep(c, "nu", &[rat(3, 2), Q::from(2)]);
    let xs = sweep(c, "x", &[Q::from(2), rat(1, 2)]);
    let mut pairs = Vec::new();
    for nu in &nus {
        if nu <= &rat(-1, 2) || nu.is_zero() {
            return Err(Error::InvalidParams("hankel_gegenbauer needs nu > -1/2, nu != 0".into()));
        }
        for x in &xs {
            for n in 0..=c.n {
                pairs.push((gegenbauer_hankel_det(n, nu, x)?, gegenbauer_hankel_closed_form(n, nu, x)?));
            }
        }
    }
    let mut notes = Vec::new();
    if c.opt("nu").is_none() {
        notes.push(("nu".into(), list(&nus)));
    }
    if c.opt("x").is_none() {
        notes.push(("x".into(), list(&xs)));
    }
    Ok(Outcome::Exact { pairs, n_terms: c.n + 1, notes })
}

pub(super) fn hankel_affine(c: &Case, _: &PrecisionContext) -> Result<Outcome, Error> {
    let f = make_family(FamilyId::Derangement, &c.subset(&["alpha", "x"]))?;
    let inner = make_family(FamilyId::Laguerre, &c.subset(&["alpha"]))?;
    let a = c.get("x").recip()?;
    let d = c.n;
    let mu_bar = f.moments(2 * d)?;
    let mu = inner.moments(2 * d)?;
    let mut pairs = Vec::new();
    let mut ratio = Q::one();
    for n in 0..=d {
        let bar = hankel(&mu_bar, HankelKind::D(n))?;
        let base = hankel(&mu, HankelKind::D(n))?;
        ratio = bar.checked_div(&base)?;
        pairs.push((bar, a.pow(-((n * (n + 1)) as i64))? * base));
    }
    let notes = vec![(format!("ratio_D{d}"), ratio.to_string()), ("a".into(), a.to_string())];
    Ok(Outcome::Exact { pairs, n_terms: d + 1, notes })
}

/// Coefficient vectors of `C_0(x;β|q), ..., C_n(x;β|q)`.
pub(crate) fn rogers_polys(n: usize, beta: &Q, q: &Q) -> Result<Vec<Vec<Q>>, Error> {
    // (1-q^{k+1}) C_{k+1} = 2x(1-βq^k) C_k - (1-β²q^{k-1}) C_{k-1}
    let mut out: Vec<Vec<Q>> = vec![vec![Q::one()]];
    for k in 0..n {
        let ck = &out[k];
        let mut next = vec![Q::zero(); k + 2];
        let a = Q::from(2) * (Q::one() - beta * &q.powu(k));
        for (i, v) in ck.iter().enumerate() {
            next[i + 1] += &(&a * v);
        }
        if k >= 1 {
            let b = Q::one() - beta * beta * q.powu(k - 1);
            for (i, v) in out[k - 1].iter().enumerate() {
                next[i] -= &(&b * v);
            }
        }
        let den = Q::one() - q.powu(k + 1);
        out.push(next.into_iter().map(|v| v.checked_div(&den)).collect::<Result<_, _>>()?);
    }
    Ok(out)
}

pub(super) fn connection_rogers(c: &Case, _: &PrecisionContext) -> Result<Outcome, Error> {
    let (beta, gamma_, q) = (c.get("beta"), c.get("gamma"), c.get("q"));
    if q <= &Q::zero() || q >= &Q::one() || beta.is_zero() || beta.is_one() {
        return Err(Error::InvalidParams("connection_rogers needs 0 < q < 1 and beta not in {0, 1}".into()));
    }
    let n_max = c.n;
    let cb = rogers_polys(n_max, beta, q)?;
    let cg = rogers_polys(n_max, gamma_, q)?;
    let ratio = gamma_.checked_div(beta)?;
    let mut pairs = Vec::new();
    for n in 0..=n_max {
        let mut rhs = vec![Q::zero(); n + 1];
        for k in 0..=n / 2 {
            let coef = (beta.powu(k) * q_pochhammer(&ratio, q, k) * q_pochhammer(gamma_, q, n - k))
                .checked_div(&(q_pochhammer(q, q, k) * q_pochhammer(&(q * beta), q, n - k)))?
                * (Q::one() - beta * &q.powu(n - 2 * k)).checked_div(&(Q::one() - beta))?;
            for (i, v) in cb[n - 2 * k].iter().enumerate() {
                rhs[i] += &(&coef * v);
            }
        }
        pairs.extend(cg[n].iter().cloned().zip(rhs));
    }
    Ok(Outcome::Exact { pairs, n_terms: n_max + 1, notes: Vec::new() })
}

// --- numeric identities ------------------------------------------------------

pub(super) fn bessel_reduction(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (mu, nu, z) = (c.get("mu"), c.get("nu"), c.get("z"));
    if mu <= &Q::zero() || z <= &Q::zero() {
        return Err(Error::Domain("bessel_reduction needs mu > 0, z > 0".into()));
    }
    let zf = ctx.rational(z);
    let j = bessel_j(nu, &zf, ctx)?;
    let lhs = {
        let k = zf.ldexp(-1).pow_rational(&(mu - nu))?;
        let (value, tail_bound) = scaled(j, &k);
        SeriesValue { value, terms_used: 0, tail_bound }
    };
    // Γ(ν+1-μ)/Γ(ν+1-μ-n) = (-1)^n (μ-ν)_n keeps the sum pole-free
    let rg = recip_gamma(&(nu + &Q::one() - mu), ctx)?;
    let rhs = partial_sum(c.n, ctx, |n| {
        let sign = if n % 2 == 0 { Q::one() } else { Q::from(-1) };
        let coef = sign * pochhammer(&(mu - nu), n) * (mu + &int(2 * n)) / fact(n);
        if coef.is_zero() {
            return Ok((BigFloat::zero(), BigFloat::zero()));
        }
        let g = &gamma(&(mu + &int(n)), ctx)? * &recip_gamma(&(nu + &int(n + 1)), ctx)?;
        let k = &(&g * &rg) * &ctx.rational(&coef);
        Ok(scaled(bessel_j(&(mu + &int(2 * n)), &zf, ctx)?, &k))
    })?;
    Ok(numeric(lhs, rhs))
}

fn exp_xy(c: &Case, ctx: &PrecisionContext) -> (Q, Q, SeriesValue) {
    let (x, y) = (c.get("x").clone(), c.get("y").clone());
    let v = (&ctx.rational(&x) * &ctx.rational(&y)).exp();
    let tail = &v.abs() * &BigFloat::epsilon(ctx.working_bits()).ldexp(6);
    (x, y, SeriesValue { value: v, terms_used: 1, tail_bound: tail })
}

pub(super) fn plane_wave_ultra(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let nu = c.get("nu").clone();
    if nu <= rat(-1, 2) || nu.is_zero() {
        return Err(Error::Domain("plane_wave_ultra needs nu > -1/2, nu != 0".into()));
    }
    let (x, y, lhs) = exp_xy(c, ctx);
    let cs = gegenbauer_values(c.n, &nu, &x);
    if y.is_zero() {
        // Γ(ν)(y/2)^{-ν} ν I_ν(y) → 1 and the higher terms vanish
        return Ok(numeric(lhs, (ctx.int(1), c.n + 1, BigFloat::zero())));
    }
    if y.is_negative() {
        return Err(Error::Domain("plane_wave_ultra needs y >= 0".into()));
    }
    let yf = ctx.rational(&y);
    let pre = gamma(&nu, ctx)?.checked_div(&yf.ldexp(-1).pow_rational(&nu)?)?;
    let rhs = partial_sum(c.n, ctx, |n| {
        let k = &pre * &ctx.rational(&((&nu + &int(n)) * &cs[n]));
        Ok(scaled(bessel_i(&(&nu + &int(n)), &yf, ctx)?, &k))
    })?;
    Ok(numeric(lhs, rhs))
}

pub(super) fn plane_wave_cheby(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (x, y, lhs) = exp_xy(c, ctx);
    if y.is_zero() {
        return Ok(numeric(lhs, (ctx.int(1), c.n + 1, BigFloat::zero())));
    }
    // U_{k+1} = 2x U_k - U_{k-1}
    let us = recurrence(c.n, Q::one(), &x * &Q::from(2), |_, u, um| &x * &Q::from(2) * u - um);
    let yf = ctx.rational(&y);
    let pre = ctx.int(2).checked_div(&yf)?;
    let rhs = partial_sum(c.n, ctx, |n| {
        let k = &pre * &ctx.rational(&(int(n + 1) * &us[n]));
        Ok(scaled(bessel_i(&int(n + 1), &yf, ctx)?, &k))
    })?;
    Ok(numeric(lhs, rhs))
}

/// `P_n^{(α,β)}(x) = Σ_k C(n+α, n-k) C(n+β, k) ((x-1)/2)^k ((x+1)/2)^{n-k}`.
fn jacobi_poly(n: usize, alpha: &Q, beta: &Q, x: &Q) -> Q {
    let (m, p) = ((x - &Q::one()) / Q::from(2), (x + &Q::one()) / Q::from(2));
    (0..=n)
        .map(|k| {
            pochhammer(&(alpha + &int(k + 1)), n - k) / fact(n - k) * pochhammer(&(beta + &int(n - k + 1)), k) / fact(k)
                * m.powu(k)
                * p.powu(n - k)
        })
        .sum()
}

pub(super) fn plane_wave_jacobi(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (alpha, beta) = (c.get("alpha").clone(), c.get("beta").clone());
    if alpha <= Q::from(-1) || beta <= Q::from(-1) {
        return Err(Error::Domain("plane_wave_jacobi needs alpha, beta > -1".into()));
    }
    let (x, y, lhs) = exp_xy(c, ctx);
    let yf = ctx.rational(&y);
    let two_y = yf.ldexp(1);
    let e = (-&yf).exp();
    let ab = &alpha + &beta;
    let rhs = partial_sum(c.n, ctx, |n| {
        // Γ(α+β+n+1)/Γ(α+β+2n+1) = 1/(α+β+n+1)_n
        let coef = jacobi_poly(n, &alpha, &beta, &x).checked_div(&pochhammer(&(&ab + &int(n + 1)), n))?;
        let f = eval_pfq(&[ctx.rational(&(&beta + &int(n + 1)))], &[ctx.rational(&(&ab + &int(2 * n + 2)))], &two_y, ctx)?;
        let k = &(&ctx.rational(&coef) * &two_y.powi(n as i64)?) * &e;
        Ok(scaled(f, &k))
    })?;
    Ok(numeric(lhs, rhs))
}

pub(super) fn bessel_1f1_link(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (nu, x) = (c.get("nu"), c.get("x"));
    if x <= &Q::zero() {
        return Err(Error::Domain("bessel_1f1_link needs x > 0".into()));
    }
    let xf = ctx.rational(x);
    let f = eval_pfq(&[ctx.rational(&(nu + &rat(1, 2)))], &[ctx.rational(&(nu * &Q::from(2) + Q::one()))], &xf.ldexp(1), ctx)?;
    let (lv, lt) = scaled(f.clone(), &(-&xf).exp());
    let lhs = SeriesValue { value: lv, terms_used: f.terms_used, tail_bound: lt };
    let pre = &gamma(&(nu + &Q::one()), ctx)? * &ctx.int(2).checked_div(&xf)?.pow_rational(nu)?;
    let i = bessel_i(nu, &xf, ctx)?;
    let terms = i.terms_used;
    let (rv, rt) = scaled(i, &pre);
    Ok(numeric(lhs, (rv, terms, rt)))
}

// --- seeded q-series transformations --------------------------------------------

/// Seeded rationals: `a, b, c` in `(-4/5, 4/5)` avoiding 0, `z` in `(-1/2, 1/2)`.
fn random_params(seed: u64) -> (Q, Q, Q, Q) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut draw = |lim: i64, den: i64| loop {
        let p: i64 = rng.gen_range(-lim..=lim);
        if p != 0 {
            return Q::frac(p, den);
        }
    };
    (draw(15, 19), draw(15, 19), draw(15, 19), draw(9, 19))
}

fn seeded_notes(a: &Q, b: &Q, c: &Q, z: &Q) -> Vec<(String, String)> {
    vec![("a".into(), a.to_string()), ("b".into(), b.to_string()), ("c".into(), c.to_string()), ("z".into(), z.to_string())]
}

fn with_notes(o: Outcome, notes: Vec<(String, String)>) -> Outcome {
    match o {
        Outcome::Numeric(mut n) => {
            n.notes = notes;
            Outcome::Numeric(n)
        }
        other => other,
    }
}

const Q_HALF: (i64, i64) = (1, 2);

pub(super) fn heine_transform(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (a, b, cc, z) = random_params(c.seed());
    let q = rat(Q_HALF.0, Q_HALF.1);
    let r = |v: &Q| ctx.rational(v);
    let qf = r(&q);
    let lhs = eval_rphis(&[r(&a), r(&b)], &[r(&cc)], &qf, &r(&z), ctx)?;
    let pre = (&q_pochhammer_inf(&r(&b), &qf, ctx)? * &q_pochhammer_inf(&r(&(&a * &z)), &qf, ctx)?)
        .checked_div(&(&q_pochhammer_inf(&r(&cc), &qf, ctx)? * &q_pochhammer_inf(&r(&z), &qf, ctx)?))?;
    let g = eval_rphis(&[r(&cc.checked_div(&b)?), r(&z)], &[r(&(&a * &z))], &qf, &r(&b), ctx)?;
    let terms = g.terms_used;
    let (v, t) = scaled(g, &pre);
    Ok(with_notes(numeric(lhs, (v, terms, t)), seeded_notes(&a, &b, &cc, &z)))
}

pub(super) fn phi21_phi22(c: &Case, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let (a, b, cc, z) = random_params(c.seed());
    let q = rat(Q_HALF.0, Q_HALF.1);
    let r = |v: &Q| ctx.rational(v);
    let qf = r(&q);
    let lhs = eval_rphis(&[r(&a), r(&b)], &[r(&cc)], &qf, &r(&z), ctx)?;
    let pre = q_pochhammer_inf(&r(&(&a * &z)), &qf, ctx)?.checked_div(&q_pochhammer_inf(&r(&z), &qf, ctx)?)?;
    let g = eval_rphis(&[r(&a), r(&cc.checked_div(&b)?)], &[r(&cc), r(&(&a * &z))], &qf, &r(&(&b * &z)), ctx)?;
    let terms = g.terms_used;
    let (v, t) = scaled(g, &pre);
    Ok(with_notes(numeric(lhs, (v, terms, t)), seeded_notes(&a, &b, &cc, &z)))
}
