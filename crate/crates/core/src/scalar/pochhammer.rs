use super::{BigFloat, ExactRational, PrecisionContext, Scalar};
use crate::error::Error;

/// Rising factorial `(a)_n = a(a+1)...(a+n-1)`, `(a)_0 = 1`.
pub fn pochhammer<T: Scalar>(a: &T, n: usize) -> T {
    let mut acc = T::one();
    let mut x = a.clone();
    let one = T::one();
    for _ in 0..n {
        acc = acc.times(&x);
        x = x.plus(&one);
    }
    acc
}

/// All prefixes `(a)_0, ..., (a)_n`.
pub fn pochhammer_table<T: Scalar>(a: &T, n: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = T::one();
    let mut x = a.clone();
    let one = T::one();
    out.push(acc.clone());
    for _ in 0..n {
        acc = acc.times(&x);
        x = x.plus(&one);
        out.push(acc.clone());
    }
    out
}

/// `(a;q)_n = prod_{k<n} (1 - a q^k)`.
pub fn q_pochhammer<T: Scalar>(a: &T, q: &T, n: usize) -> T {
    let mut acc = T::one();
    let mut aq = a.clone();
    let one = T::one();
    for _ in 0..n {
        acc = acc.times(&one.minus(&aq));
        aq = aq.times(q);
    }
    acc
}

/// `(a_1, ..., a_r; q)_n`.
pub fn q_pochhammer_multi<T: Scalar>(a: &[T], q: &T, n: usize) -> T {
    a.iter().fold(T::one(), |acc, x| acc.times(&q_pochhammer(x, q, n)))
}

/// `(a;q)_∞` for `|q| < 1`. Factors are multiplied until `|a q^k|` stays below
/// `2^-working_bits` for `consecutive_small` steps; the omitted tail then
/// perturbs the product by a relative amount below
/// `|a q^K| / ((1-|q|)(1-|a q^K|))`.
pub fn q_pochhammer_inf(a: &BigFloat, q: &BigFloat, ctx: &PrecisionContext) -> Result<BigFloat, Error> {
    if q.abs() >= BigFloat::one() {
        return Err(Error::NonConvergent { terms: 0 });
    }
    let bits = ctx.working_bits();
    let a = a.with_prec(bits.max(a.prec()));
    let eps = BigFloat::epsilon(bits);
    let one = BigFloat::one();
    let mut acc = one.with_prec(bits);
    let mut aq = a;
    let mut small = 0;
    for _ in 0..ctx.max_terms {
        if aq.is_zero() {
            return Ok(acc);
        }
        acc = &acc * &(&one - &aq);
        if acc.is_zero() {
            return Ok(acc);
        }
        if aq.abs() < eps {
            small += 1;
            if small >= ctx.consecutive_small {
                return Ok(acc);
            }
        } else {
            small = 0;
        }
        aq = &aq * q;
    }
    Err(Error::NonConvergent { terms: ctx.max_terms })
}

/// Gaussian binomial via the Pascal recurrence
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial<T: Scalar>(n: usize, k: usize, q: &T) -> T {
    if k > n {
        return T::zero();
    }
    q_binomial_row(n, q).swap_remove(k)
}

/// Row `[n,0], ..., [n,n]` of Gaussian binomials.
pub fn q_binomial_row<T: Scalar>(n: usize, q: &T) -> Vec<T> {
    let mut row = vec![T::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(T::one());
        let mut qk = q.clone();
        for k in 1..m {
            next.push(row[k - 1].plus(&qk.times(&row[k])));
            qk = qk.times(q);
        }
        next.push(T::one());
        row = next;
    }
    row
}

/// `q^e` for possibly negative integer `e`.
pub fn q_power<T: Scalar>(q: &T, e: i64) -> Result<T, Error> {
    let mut acc = T::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc.times(q);
    }
    if e < 0 { T::one().quotient(&acc) } else { Ok(acc) }
}

/// `C(n,2) = n(n-1)/2`.
pub fn tri(n: usize) -> i64 {
    (n as i64) * (n as i64 - 1) / 2
}

/// Exact `(q;q)_n` (frequently needed normaliser).
pub fn q_factorial(q: &ExactRational, n: usize) -> ExactRational {
    q_pochhammer(q, q, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::frac(p, q)
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(pochhammer(&r(1, 2), 3), r(15, 8));
        assert_eq!(pochhammer(&r(-2, 1), 3), ExactRational::zero());
        assert_eq!(pochhammer(&r(7, 3), 0), ExactRational::one());
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2, &r(1, 2)), r(35, 16));
        assert_eq!(q_binomial(5, 0, &r(1, 3)), ExactRational::one());
        assert_eq!(q_binomial(5, 5, &r(1, 3)), ExactRational::one());
        // q -> 1 reduces to ordinary binomials.
        assert_eq!(q_binomial(6, 3, &ExactRational::one()), ExactRational::from(20));
    }

    #[test]
    fn q_binomial_matches_product_formula() {
        let q = r(2, 7);
        for n in 0..9 {
            for k in 0..=n {
                let prod = q_pochhammer(&q, &q, n)
                    / (q_pochhammer(&q, &q, k) * q_pochhammer(&q, &q, n - k));
                assert_eq!(q_binomial(n, k, &q), prod);
            }
        }
    }

    #[test]
    fn infinite_product_matches_euler_pentagonal() {
        let ctx = PrecisionContext::new(256);
        let q = ctx.rational(&r(1, 2));
        let direct = q_pochhammer_inf(&q, &q, &ctx).unwrap();
        // (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
        let mut s = BigFloat::zero();
        for k in -30i64..=30 {
            let e = k * (3 * k - 1) / 2;
            let t = q.powi(e).unwrap();
            s = if k.rem_euclid(2) == 1 { &s - &t } else { &s + &t };
        }
        assert!(super::super::bigfloat::rel_diff(&direct, &s).exponent() < -250);
        assert!(q_pochhammer_inf(&ctx.int(2), &ctx.int(1), &ctx).is_err());
    }
}
