//! `x ↦ ax + b`: `Q̄_j(t) = a^j e^{-bt/a} Q_j(t/a)`.

use super::FamilySpec;
use super::numeric::scaled;
use crate::error::Error;
use crate::scalar::{BigFloat, ExactRational, PrecisionContext};
use crate::series::{RationalSeries, SeriesValue, exp_series};

type Q = ExactRational;

pub(super) fn series(inner: &FamilySpec, a: &Q, b: &Q, j: usize, n: usize) -> Result<RationalSeries, Error> {
    let inv = a.recip()?;
    let f = inner.q_series(j, n)?.dilate(&inv).scale(&a.powu(j));
    Ok(f.mul(&exp_series(&-(b * &inv), n)))
}

pub(super) fn eval(
    inner: &FamilySpec,
    a: &Q,
    b: &Q,
    j: usize,
    t: &BigFloat,
    ctx: &PrecisionContext,
) -> Result<SeriesValue, Error> {
    let inv = ctx.rational(&a.recip()?);
    let t = t.with_prec(ctx.working_bits().max(t.prec()));
    let ts = &t * &inv;
    let v = inner.q_function(j, &ts, ctx)?;
    let pre = &ctx.rational(&a.powu(j)) * &(-(&(&ctx.rational(b) * &ts))).exp();
    Ok(scaled(v, &pre))
}
