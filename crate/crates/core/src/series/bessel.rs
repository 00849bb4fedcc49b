use super::hypergeometric::{SeriesValue, eval_pfq};
use crate::error::Error;
use crate::scalar::{BigFloat, ExactRational, PrecisionContext, gamma};

/// `J_ν(z) = (z/2)^ν / Γ(ν+1) · 0F1(-; ν+1; -z²/4)`.
pub fn bessel_j(nu: &ExactRational, z: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    bessel(nu, z, true, ctx)
}

/// `I_ν(z) = (z/2)^ν / Γ(ν+1) · 0F1(-; ν+1; z²/4)`.
pub fn bessel_i(nu: &ExactRational, z: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    bessel(nu, z, false, ctx)
}

fn bessel(nu: &ExactRational, z: &BigFloat, oscillating: bool, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
    if nu.is_integer() && nu.is_negative() {
        return Err(Error::GammaPole(format!("{}", nu + &ExactRational::one())));
    }
    let bits = ctx.working_bits();
    let z = z.with_prec(bits.max(z.prec()));
    let half = z.ldexp(-1);
    let pre = if z.is_zero() {
        if nu.is_zero() { BigFloat::one() } else { BigFloat::zero() }
    } else if nu.is_integer() {
        half.powi(nu.to_i64().expect("small order"))?
    } else if z.is_negative() {
        return Err(Error::Domain("non-integer Bessel order needs a positive argument".into()));
    } else {
        half.pow_rational(nu)?
    };
    let mut arg = &half * &half;
    if oscillating {
        arg = -arg;
    }
    let b = BigFloat::from_rational(&(nu + &ExactRational::one()), bits);
    let s = eval_pfq(&[], &[b], &arg, ctx)?;
    let g = gamma(&(nu + &ExactRational::one()), ctx)?;
    let scale = &pre / &g;
    Ok(SeriesValue {
        value: &s.value * &scale,
        terms_used: s.terms_used,
        tail_bound: &s.tail_bound * &scale.abs(),
    })
}
