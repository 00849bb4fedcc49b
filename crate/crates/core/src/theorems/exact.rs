//! Addition theorems checked as identities between truncated bivariate
//! series with rational coefficients.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{Case, Outcome};
use crate::error::Error;
use crate::families::{FamilyId, make_family};
use crate::jfraction::{JFraction, tableau_from_jfraction};
use crate::scalar::{ExactRational, q_binomial_row, q_factorial};
use crate::series::PowerSeries;
use crate::translation::{Bivariate, NormalOrderedPoly, TranslationKind, translate_series};

type Q = ExactRational;

fn cells(lhs: &Bivariate, rhs: &Bivariate) -> Vec<(Q, Q)> {
    let d = lhs.degree();
    (0..=d).flat_map(|a| (0..=d - a).map(move |b| (lhs.get(a, b), rhs.get(a, b)))).collect()
}

fn exact(pairs: Vec<(Q, Q)>, degree: usize) -> Outcome {
    Outcome::Exact { pairs, n_terms: degree + 1, notes: Vec::new() }
}

/// `Σ_{n≤d} w_n f_n(t) g_n(s)`.
fn bilinear(
    d: usize,
    mut weight: impl FnMut(usize) -> Result<Q, Error>,
    mut left: impl FnMut(usize) -> Result<PowerSeries<Q>, Error>,
    mut right: impl FnMut(usize) -> Result<PowerSeries<Q>, Error>,
) -> Result<Bivariate, Error> {
    let mut acc = Bivariate::zero(d);
    for n in 0..=d {
        let term = Bivariate::outer(&left(n)?, &right(n)?, d).scale(&weight(n)?);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

pub(super) fn asc_noncomm(c: &Case, _: &crate::scalar::PrecisionContext) -> Result<Outcome, Error> {
    let f = make_family(FamilyId::AlSalamCarlitz, &c.subset(&["a", "q"]))?;
    let (a, q) = (c.get("a"), c.get("q"));
    let d = c.n;
    // S_s Q_0(t) = Σ_n h_n(a;q)/(q;q)_n (t+s)^n, with the Rogers–Szegő
    // moments h_n = Σ_k [n k]_q a^k, expanded in the algebra st = qts
    let tps = NormalOrderedPoly::t_plus_s(q.clone(), d);
    let mut power = NormalOrderedPoly::one(q.clone(), d);
    let mut lhs = Bivariate::zero(d);
    for n in 0..=d {
        if n > 0 {
            power = power.mul(&tps)?;
        }
        let h: Q = q_binomial_row(n, q).into_iter().enumerate().map(|(k, b)| b * a.powu(k)).sum();
        lhs = lhs.add(&power.table().scale(&h.checked_div(&q_factorial(q, n))?))?;
    }
    let rhs = bilinear(d, |n| f.weight(n), |n| f.q_series(n, d), |n| f.q_series(n, d))?;
    Ok(exact(cells(&lhs, &rhs), d))
}

/// Rational J-fraction with small random entries (`λ_n != 0`).
pub(crate) fn random_jfraction(seed: u64, n: usize) -> JFraction {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut draw = |nonzero: bool| loop {
        let p: i64 = rng.gen_range(-6..=6);
        let q: i64 = rng.gen_range(1..=5);
        if !nonzero || p != 0 {
            return Q::frac(p, q);
        }
    };
    let b = (0..=n).map(|_| draw(false)).collect();
    let l = (1..=n).map(|_| draw(true)).collect();
    JFraction::new(b, l).expect("lambdas drawn nonzero")
}

fn recip_factorials(d: usize) -> Vec<Q> {
    (0..=d).map(|k| Q::factorial(k as u64).recip().expect("k! != 0")).collect()
}

pub(super) fn classical_generic(c: &Case, _: &crate::scalar::PrecisionContext) -> Result<Outcome, Error> {
    let d = c.n;
    let jf = random_jfraction(c.seed(), d);
    let tab = tableau_from_jfraction(&jf, d)?;
    let mu = tab.moments();
    let w = jf.lambda_products(d)?;
    let inv = recip_factorials(d);
    // Q_0(x+y): the coefficient of x^a y^b is μ_{a+b}/(a! b!)
    let mut lhs = Bivariate::zero(d);
    for a in 0..=d {
        for b in 0..=d - a {
            lhs.set(a, b, &mu[a + b] * &inv[a] * &inv[b]);
        }
    }
    let rhs = bilinear(d, |n| Ok(w[n].clone()), |n| Ok(tab.row_series(n, &inv)), |n| Ok(tab.row_series(n, &inv)))?;
    Ok(exact(cells(&lhs, &rhs), d))
}

pub(super) fn ogf_variant(c: &Case, _: &crate::scalar::PrecisionContext) -> Result<Outcome, Error> {
    let d = c.n;
    let jf = random_jfraction(c.seed(), d);
    let tab = tableau_from_jfraction(&jf, d)?;
    let mu = tab.moments();
    let w = jf.lambda_products(d)?;
    let ones = vec![Q::one(); d + 1];
    // (x h_0(x) - y h_0(y))/(x - y) = Σ_k μ_k Σ_{a+b=k} x^a y^b
    let mut lhs = Bivariate::zero(d);
    for a in 0..=d {
        for b in 0..=d - a {
            lhs.set(a, b, mu[a + b].clone());
        }
    }
    let rhs = bilinear(d, |n| Ok(w[n].clone()), |n| Ok(tab.row_series(n, &ones)), |n| Ok(tab.row_series(n, &ones)))?;
    Ok(exact(cells(&lhs, &rhs), d))
}

/// Polynomials-as-moments: the printed weights and closed-form `Q_n` satisfy
/// `Q_0(s+t) = Σ w_n Q_n(t) Q_n(s)` coefficientwise, and the closed-form
/// tableau agrees with the one generated by the recurrence.
fn moments_theorem(c: &Case, id: FamilyId, keys: &[&str]) -> Result<Outcome, Error> {
    let f = make_family(id, &c.subset(keys))?;
    let d = c.n;
    let lhs = translate_series(&f.q_series(0, d)?, &TranslationKind::Classical, d)?;
    let rhs = bilinear(d, |n| f.weight(n), |n| f.q_series(n, d), |n| f.q_series(n, d))?;
    let mut pairs = cells(&lhs, &rhs);
    let tab = f.tableau(d)?;
    for n in 0..=d {
        for i in 0..=n {
            pairs.push((f.tableau_closed_form(i, n)?, tab.get(i, n)));
        }
    }
    Ok(exact(pairs, d))
}

pub(super) fn hermite_moments(c: &Case, _: &crate::scalar::PrecisionContext) -> Result<Outcome, Error> {
    moments_theorem(c, FamilyId::HermiteMoments, &["x"])
}

pub(super) fn laguerre_moments(c: &Case, _: &crate::scalar::PrecisionContext) -> Result<Outcome, Error> {
    moments_theorem(c, FamilyId::LaguerreMoments, &["alpha", "x"])
}

pub(super) fn meixner_moments(c: &Case, _: &crate::scalar::PrecisionContext) -> Result<Outcome, Error> {
    moments_theorem(c, FamilyId::MeixnerMoments, &["beta", "c", "x"])
}

pub(super) fn gegenbauer_moments(c: &Case, _: &crate::scalar::PrecisionContext) -> Result<Outcome, Error> {
    moments_theorem(c, FamilyId::GegenbauerMoments, &["nu", "x"])
}
