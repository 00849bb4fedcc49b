use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::ExactRational;

type Q = ExactRational;

/// Which moment determinant to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelKind {
    /// `Δ_{i,n}`: rows `(μ_r, ..., μ_{r+i})` for `r < i`, last row `(μ_n, ..., μ_{n+i})`.
    Delta(usize, usize),
    /// `D_n = Δ_{n,n}`.
    D(usize),
    /// `χ_n = Δ_{n,n+1}`.
    Chi(usize),
}

pub fn hankel(mu: &[Q], kind: HankelKind) -> Result<Q, Error> {
    let (i, n) = match kind {
        HankelKind::Delta(i, n) => (i, n),
        HankelKind::D(n) => (n, n),
        HankelKind::Chi(n) => (n, n + 1),
    };
    let need = (2 * i).max(n + i) + 1;
    if mu.len() < need {
        return Err(Error::Insufficient(format!("Δ_{{{i},{n}}} needs {need} moments, got {}", mu.len())));
    }
    let rows: Vec<Vec<Q>> = (0..=i)
        .map(|r| {
            let start = if r < i { r } else { n };
            mu[start..=start + i].to_vec()
        })
        .collect();
    Ok(det_rational(&rows))
}

/// Determinant of a rational matrix: rows are cleared to integers and the
/// result is computed by fraction-free Bareiss elimination.
pub fn det_rational(rows: &[Vec<Q>]) -> Q {
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
    for row in rows {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        m.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        scale *= l;
    }
    let d = hankel_int_det(m);
    Q::new(d, scale).expect("nonzero row scales")
}

/// Bareiss elimination on an integer matrix (consumed).
pub fn hankel_int_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn small_determinants() {
        let mu = vec![Q::one(), Q::zero(), rat(1, 2)];
        assert_eq!(hankel(&mu, HankelKind::D(0)).unwrap(), Q::one());
        assert_eq!(hankel(&mu, HankelKind::D(1)).unwrap(), rat(1, 2));
        assert!(hankel(&mu, HankelKind::Chi(1)).is_err());
    }

    #[test]
    fn factorial_hankel_is_superfactorial_squared() {
        let mu: Vec<Q> = (0..12).map(Q::factorial).collect();
        for n in 0..=5 {
            let expect: Q = (0..=n as u64).map(|r| Q::factorial(r) * Q::factorial(r)).product();
            assert_eq!(hankel(&mu, HankelKind::D(n)).unwrap(), expect);
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![
            vec![rat(1, 2), rat(2, 3), rat(-1, 1)],
            vec![rat(0, 1), rat(5, 7), rat(3, 4)],
            vec![rat(2, 1), rat(0, 1), rat(1, 9)],
        ];
        let cof = &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        assert_eq!(det_rational(&m), cof);
        // zero pivot requires a row swap
        let p = vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]];
        assert_eq!(det_rational(&p), rat(-1, 1));
    }
}
