//! Gamma function at rational arguments.
//!
//! Integers and half-integers are exact (times `sqrt(pi)`); everything else
//! shifts the argument up until the Stirling series converges to working
//! precision. For real `z > 0` the Stirling remainder is bounded by the first
//! omitted term, which is what the stopping rule checks.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;

use super::{BigFloat, ExactRational, PrecisionContext, pochhammer};
use crate::error::Error;

static BERNOULLI: Mutex<Vec<ExactRational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> ExactRational {
    let mut table = BERNOULLI.lock().expect("bernoulli cache");
    while table.len() <= n {
        let m = table.len();
        if m == 0 {
            table.push(ExactRational::one());
            continue;
        }
        // sum_{j<=m} C(m+1, j) B_j = 0
        let mut s = ExactRational::zero();
        for (j, b) in table.iter().enumerate() {
            s += &(ExactRational::binomial(m as u64 + 1, j as u64) * b);
        }
        let b = -(s / ExactRational::from(m as i64 + 1));
        table.push(b);
    }
    table[n].clone()
}

thread_local! {
    static CACHE: RefCell<HashMap<(ExactRational, u32), BigFloat>> = RefCell::new(HashMap::new());
}

/// `Γ(x)` for rational `x`; fails with `GammaPole` at non-positive integers.
pub fn gamma(x: &ExactRational, ctx: &PrecisionContext) -> Result<BigFloat, Error> {
    let bits = ctx.working_bits();
    let key = (x.clone(), bits);
    if let Some(v) = CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let v = gamma_uncached(x, ctx)?;
    CACHE.with(|c| c.borrow_mut().insert(key, v.clone()));
    Ok(v)
}

/// `1/Γ(x)`, which is entire: zero at the poles.
pub fn recip_gamma(x: &ExactRational, ctx: &PrecisionContext) -> Result<BigFloat, Error> {
    match gamma(x, ctx) {
        Ok(g) => g.recip(),
        Err(Error::GammaPole(_)) => Ok(BigFloat::zero()),
        Err(e) => Err(e),
    }
}

/// Exact value when `x` is an integer or half-integer: `Γ(x) = c` or
/// `c·sqrt(pi)` with `c` rational. The flag reports the `sqrt(pi)` factor.
pub fn gamma_exact(x: &ExactRational) -> Result<Option<(ExactRational, bool)>, Error> {
    if let Some(n) = x.to_i64() {
        if n <= 0 {
            return Err(Error::GammaPole(x.to_string()));
        }
        return Ok(Some((ExactRational::factorial(n as u64 - 1), false)));
    }
    if x.is_half_integer() {
        // Γ(1/2 + m) = (1/2)_m sqrt(pi), valid for negative m as 1/(1/2+m)_{-m}.
        let half = ExactRational::frac(1, 2);
        let m = (x - &half).to_i64().expect("half-integer offset");
        let c = if m >= 0 {
            pochhammer(&half, m as usize)
        } else {
            pochhammer(x, (-m) as usize).recip()?
        };
        return Ok(Some((c, true)));
    }
    Ok(None)
}

fn gamma_uncached(x: &ExactRational, ctx: &PrecisionContext) -> Result<BigFloat, Error> {
    let bits = ctx.working_bits();
    if let Some((c, root_pi)) = gamma_exact(x)? {
        let c = BigFloat::from_rational(&c, bits);
        return Ok(if root_pi { &c * &BigFloat::pi(bits).sqrt()? } else { c });
    }
    // Shift so that z = x + N >= z0, then Γ(x) = Γ(z) / (x)_N.
    let z0 = ExactRational::from(bits as i64 / 4 + 8);
    let mut n = 0usize;
    if x < &z0 {
        let diff = (&z0 - x).floor();
        n = usize::try_from(diff + BigInt::from(1)).map_err(|_| Error::Domain("gamma argument too negative".into()))?;
    }
    let z = x + &ExactRational::from(n as i64);
    let lg = ln_gamma_stirling(&z, ctx)?;
    let shift = BigFloat::from_rational(&pochhammer(x, n), bits);
    if shift.is_zero() {
        return Err(Error::GammaPole(x.to_string()));
    }
    Ok(&lg.exp() / &shift)
}

fn ln_gamma_stirling(z: &ExactRational, ctx: &PrecisionContext) -> Result<BigFloat, Error> {
    let bits = ctx.working_bits();
    let zf = BigFloat::from_rational(z, bits);
    let half = BigFloat::from_rational(&ExactRational::frac(1, 2), bits);
    let two_pi = BigFloat::pi(bits).ldexp(1);
    let mut acc = &(&(&zf - &half) * &zf.ln()?) - &zf;
    acc = &acc + &two_pi.ln()?.ldexp(-1);
    let z2 = &zf * &zf;
    let eps = BigFloat::epsilon(bits + 8);
    let mut zpow = zf.clone(); // z^{2k-1}
    for k in 1..=ctx.max_terms.min(2000) {
        let b = bernoulli(2 * k);
        let den = ExactRational::from((2 * k * (2 * k - 1)) as i64);
        let coef = BigFloat::from_rational(&(b / den), bits);
        let term = &coef / &zpow;
        if term.abs() < &eps * &acc.abs() {
            // First omitted term bounds the remainder.
            return Ok(acc);
        }
        acc = &acc + &term;
        zpow = &zpow * &z2;
    }
    Err(Error::NonConvergent { terms: 2000 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::bigfloat::rel_diff;

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::frac(p, q)
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(1), r(-1, 2));
        assert_eq!(bernoulli(2), r(1, 6));
        assert_eq!(bernoulli(3), ExactRational::zero());
        assert_eq!(bernoulli(12), r(-691, 2730));
    }

    #[test]
    fn exact_special_values() {
        let ctx = PrecisionContext::new(256);
        assert_eq!(gamma(&r(5, 1), &ctx).unwrap().to_rational().unwrap(), ExactRational::from(24));
        let g = gamma(&r(1, 2), &ctx).unwrap();
        let pi = BigFloat::pi(ctx.working_bits());
        assert!(rel_diff(&(&g * &g), &pi).exponent() < -280);
        let g = gamma(&r(-1, 2), &ctx).unwrap();
        let expect = &pi.sqrt().unwrap() * &BigFloat::from_i64(-2);
        assert!(rel_diff(&g, &expect).exponent() < -280);
        assert!(matches!(gamma(&r(0, 1), &ctx), Err(Error::GammaPole(_))));
        assert!(matches!(gamma(&r(-3, 1), &ctx), Err(Error::GammaPole(_))));
        assert!(recip_gamma(&r(-3, 1), &ctx).unwrap().is_zero());
    }

    #[test]
    fn stirling_path_satisfies_functional_equation_and_reflection() {
        let ctx = PrecisionContext::new(256);
        let x = r(1, 3);
        let g = gamma(&x, &ctx).unwrap();
        let g1 = gamma(&(&x + &ExactRational::one()), &ctx).unwrap();
        let lhs = &g * &BigFloat::from_rational(&x, ctx.working_bits());
        assert!(rel_diff(&lhs, &g1).exponent() < -270);
        // Γ(1/3)Γ(2/3) = 2π/sqrt(3)
        let g2 = gamma(&r(2, 3), &ctx).unwrap();
        let bits = ctx.working_bits();
        let rhs = &BigFloat::pi(bits).ldexp(1) / &BigFloat::from_i64(3).with_prec(bits).sqrt().unwrap();
        assert!(rel_diff(&(&g * &g2), &rhs).exponent() < -270);
        // Negative non-integer argument.
        let gm = gamma(&r(-7, 3), &ctx).unwrap();
        let back = &gm * &BigFloat::from_rational(&pochhammer(&r(-7, 3), 3), bits);
        let direct = gamma(&r(2, 3), &ctx).unwrap();
        assert!(rel_diff(&back, &direct).exponent() < -270);
    }
}
