use super::TranslationKind;
use crate::error::Error;
use crate::families::{FamilySpec, Kind};
use crate::scalar::{BigFloat, ExactRational, PrecisionContext};
use crate::series::{SeriesValue, Step, Summation, eval_rphis};

type Q = ExactRational;

/// Numeric value of the translated `Q_0` of `f`.
///
/// The q-translation is summed straight from the moments,
/// `Σ_n μ_n/(q;q)_n ∏_{i<n}(t + s q^i)`; the non-commutative kind has no
/// numeric meaning and is rejected.
pub fn translate_eval(
    f: &FamilySpec,
    kind: &TranslationKind,
    s: &BigFloat,
    t: &BigFloat,
    ctx: &PrecisionContext,
) -> Result<SeriesValue, Error> {
    kind.validate()?;
    let bits = ctx.working_bits();
    let s = s.with_prec(bits.max(s.prec()));
    let t = t.with_prec(bits.max(t.prec()));
    match kind {
        TranslationKind::Classical => f.q_function(0, &(&s + &t), ctx),
        TranslationKind::QTranslation { q } => {
            let qf = ctx.rational(q);
            moment_sum(f, ctx, |n, prev: &BigFloat, qn: &mut BigFloat| {
                // ∏_{i<n}(t + s q^i), extended one factor at a time
                if n == 0 {
                    return BigFloat::one();
                }
                let v = prev * &(&t + &(&s * &*qn));
                *qn = &*qn * &qf;
                v
            })
        }
        TranslationKind::NonCommutative { .. } => Err(Error::Unsupported(
            "the non-commutative translation is verified on coefficients only (t and s do not commute)".into(),
        )),
        TranslationKind::Generalized { c, d } => {
            let m_max = c.len().min(d.len());
            let mu = f.moments(m_max.saturating_sub(1))?;
            let norm = f.normalization();
            let mut acc = BigFloat::zero().with_prec(bits);
            for (m, mu_m) in mu.iter().enumerate().take(m_max) {
                let mut inner = BigFloat::zero().with_prec(bits);
                for j in 0..=m {
                    let w = ctx.rational(&(&c[j] * &d[m - j]));
                    inner = &inner + &(&(&w * &s.powi(j as i64)?) * &t.powi((m - j) as i64)?);
                }
                acc = &acc + &(&inner * &ctx.rational(&(mu_m / &norm.at(m))));
            }
            Ok(SeriesValue::exact(acc, m_max))
        }
        TranslationKind::Affine { a, b, inner } => {
            let base = match f.kind() {
                Kind::Affine { inner, .. } => inner.as_ref(),
                _ => f,
            };
            let ainv = ctx.rational(&a.recip()?);
            let v = translate_eval(base, inner, &(&s * &ainv), &(&t * &ainv), ctx)?;
            let e = (-(&(&ctx.rational(b) * &ainv) * &(&s + &t))).exp();
            Ok(SeriesValue { value: &v.value * &e, terms_used: v.terms_used, tail_bound: &v.tail_bound * &e })
        }
    }
}

/// `Σ_n μ_n/norm_n · P_n` where `P_n` is produced incrementally by `step`.
/// Moments are generated exactly in growing blocks until the sum stops.
fn moment_sum(
    f: &FamilySpec,
    ctx: &PrecisionContext,
    mut step: impl FnMut(usize, &BigFloat, &mut BigFloat) -> BigFloat,
) -> Result<SeriesValue, Error> {
    let norm = f.normalization();
    let mut block = 48;
    loop {
        let mu = f.moments(block)?;
        let mut sum = Summation::<BigFloat>::new(ctx);
        let mut p = BigFloat::one();
        let mut aux = BigFloat::one();
        for (n, m) in mu.iter().enumerate() {
            p = step(n, &p, &mut aux);
            let term = &ctx.rational(&(m / &norm.at(n))) * &p;
            if let Step::Done = sum.push(&term)? {
                return Ok(sum.finish());
            }
        }
        if block >= ctx.max_terms {
            return Err(Error::NonConvergent { terms: block });
        }
        block *= 2;
    }
}

/// Closed forms of `T_{s,q} Q_0` for the q-families where one is known:
///
/// - little q-Jacobi: `2φ1(aq, -s/t; abq²; q, t)`
/// - big q-Jacobi: `(-qas;q)_∞/(aqt;q)_∞ 3φ2(qa, qab/c, -s/t; abq², -qas; q, qct)`
///   (the `(-s;q)_∞` form is this divided by the `Q̃` prefactor ratio)
/// - Al-Salam–Carlitz: `(-s;q)_∞/(t;q)_∞ 2φ1(0, -s/t; -s; q, at)`
pub fn translate_closed_form(
    f: &FamilySpec,
    s: &BigFloat,
    t: &BigFloat,
    ctx: &PrecisionContext,
) -> Result<SeriesValue, Error> {
    if t.is_zero() {
        return Err(Error::Domain("closed-form translation needs t != 0".into()));
    }
    let bits = ctx.working_bits();
    let s = s.with_prec(bits.max(s.prec()));
    let t = t.with_prec(bits.max(t.prec()));
    let r = |x: &Q| ctx.rational(x);
    let ratio = -(&s / &t);
    match f.kind() {
        Kind::LittleQJacobi { a, b, q } => {
            eval_rphis(&[r(&(a * q)), ratio], &[r(&(a * b * q * q))], &r(q), &t, ctx)
        }
        Kind::BigQJacobi { a, b, c, q } => {
            let qas = &r(&(q * a)) * &s;
            let upper = [r(&(q * a)), r(&(q * a * b / c)), ratio];
            let lower = [r(&(a * b * q * q)), -&qas];
            let z = &r(&(q * c)) * &t;
            let g = eval_rphis(&upper, &lower, &r(q), &z, ctx)?;
            let qf = r(q);
            let num = crate::scalar::q_pochhammer_inf(&-&qas, &qf, ctx)?;
            let den = crate::scalar::q_pochhammer_inf(&(&r(&(q * a)) * &t), &qf, ctx)?;
            let k = num.checked_div(&den)?;
            Ok(SeriesValue { value: &g.value * &k, terms_used: g.terms_used, tail_bound: &g.tail_bound * &k.abs() })
        }
        Kind::AlSalamCarlitz { a, q } => {
            let qf = r(q);
            let g = eval_rphis(&[BigFloat::zero(), ratio], &[-&s], &qf, &(&r(a) * &t), ctx)?;
            let num = crate::scalar::q_pochhammer_inf(&-&s, &qf, ctx)?;
            let den = crate::scalar::q_pochhammer_inf(&t, &qf, ctx)?;
            let k = num.checked_div(&den)?;
            Ok(SeriesValue { value: &g.value * &k, terms_used: g.terms_used, tail_bound: &g.tail_bound * &k.abs() })
        }
        _ => Err(Error::Unsupported(format!("no closed-form translation for {}", f.id()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{FamilyId, Params, make_family};
    use crate::scalar::{rat, rel_diff};

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(256)
    }

    #[test]
    fn hermite_at_origin_is_one() {
        let f = make_family(FamilyId::Hermite, &Params::new()).unwrap();
        let z = BigFloat::zero();
        let v = translate_eval(&f, &TranslationKind::Classical, &z, &z, &ctx()).unwrap();
        assert_eq!(v.value.to_f64(), 1.0);
    }

    #[test]
    fn q_translation_with_zero_shift_is_identity() {
        let c = ctx();
        let f = make_family(FamilyId::LittleQJacobi, &Params::new()).unwrap();
        let t = c.rational(&rat(1, 10));
        let v = translate_eval(&f, f.translation(), &BigFloat::zero(), &t, &c).unwrap();
        let q0 = f.q_function(0, &t, &c).unwrap();
        assert!(rel_diff(&v.value, &q0.value).exponent() < -100);
    }

    #[test]
    fn closed_forms_match_the_moment_sum() {
        let c = ctx();
        let (s, t) = (c.rational(&rat(1, 20)), c.rational(&rat(1, 10)));
        for id in [FamilyId::LittleQJacobi, FamilyId::BigQJacobi, FamilyId::AlSalamCarlitz] {
            let f = make_family(id, &Params::new()).unwrap();
            let direct = translate_eval(&f, f.translation(), &s, &t, &c).unwrap();
            let closed = translate_closed_form(&f, &s, &t, &c).unwrap();
            let err = rel_diff(&direct.value, &closed.value);
            assert!(err.exponent() < -100, "{id}: {err}");
        }
    }

    #[test]
    fn affine_translation_is_shifted_exponential() {
        let c = ctx();
        let f = make_family(FamilyId::Derangement, &Params::new()).unwrap();
        let (s, t) = (c.rational(&rat(1, 10)), c.rational(&rat(1, 20)));
        let v = translate_eval(&f, f.translation(), &s, &t, &c).unwrap();
        let direct = f.q_function(0, &(&s + &t), &c).unwrap();
        assert!(rel_diff(&v.value, &direct.value).exponent() < -100);
    }

    #[test]
    fn non_commutative_has_no_numeric_value() {
        let f = make_family(FamilyId::AlSalamCarlitz, &Params::new()).unwrap();
        let z = BigFloat::zero();
        let r = translate_eval(&f, &TranslationKind::NonCommutative { q: rat(1, 2) }, &z, &z, &ctx());
        assert!(matches!(r, Err(Error::Unsupported(_))));
    }
}
