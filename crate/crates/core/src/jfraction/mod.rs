//! The Stieltjes tableau engine.
//!
//! A J-fraction `(b_n, λ_n)` determines the triangle
//! `H_{i,n} = H_{i-1,n-1} + b_i H_{i,n-1} + λ_{i+1} H_{i+1,n-1}`, `H_{n,n} = 1`,
//! whose row 0 is the moment sequence and whose entries are the connection
//! coefficients of `x^n` in the monic orthogonal polynomials.

mod hankel;

pub use hankel::{HankelKind, det_rational, hankel, hankel_int_det};

use crate::error::Error;
use crate::scalar::ExactRational;
use crate::series::PowerSeries;

type Q = ExactRational;

/// Recurrence coefficients: `b = (b_0, b_1, ...)`, `lambda = (λ_1, λ_2, ...)`.
#[derive(Clone, Debug, PartialEq)]
pub struct JFraction {
    b: Vec<Q>,
    lambda: Vec<Q>,
}

impl JFraction {
    /// Fails with `NonRegular(n)` if some `λ_n` vanishes.
    pub fn new(b: Vec<Q>, lambda: Vec<Q>) -> Result<Self, Error> {
        if let Some(k) = lambda.iter().position(Q::is_zero) {
            return Err(Error::NonRegular(k + 1));
        }
        Ok(Self { b, lambda })
    }

    /// Build from closures over `n` (`b_0..b_{nb-1}`, `λ_1..λ_{nl}`).
    pub fn from_fns(
        nb: usize,
        nl: usize,
        b: impl Fn(usize) -> Result<Q, Error>,
        lambda: impl Fn(usize) -> Result<Q, Error>,
    ) -> Result<Self, Error> {
        let bs = (0..nb).map(b).collect::<Result<Vec<_>, _>>()?;
        let ls = (1..=nl).map(lambda).collect::<Result<Vec<_>, _>>()?;
        Self::new(bs, ls)
    }

    pub fn b(&self) -> &[Q] {
        &self.b
    }

    /// `λ_1, λ_2, ...` (index 0 holds `λ_1`).
    pub fn lambdas(&self) -> &[Q] {
        &self.lambda
    }

    pub fn b_at(&self, n: usize) -> Result<&Q, Error> {
        self.b.get(n).ok_or_else(|| Error::Insufficient(format!("b_{n} not supplied")))
    }

    /// `λ_n` for `n >= 1`.
    pub fn lambda_at(&self, n: usize) -> Result<&Q, Error> {
        n.checked_sub(1)
            .and_then(|k| self.lambda.get(k))
            .ok_or_else(|| Error::Insufficient(format!("lambda_{n} not supplied")))
    }

    /// `λ_1 ⋯ λ_n` for `n = 0..=len`.
    pub fn lambda_products(&self, n: usize) -> Result<Vec<Q>, Error> {
        let mut out = Vec::with_capacity(n + 1);
        let mut acc = Q::one();
        out.push(acc.clone());
        for k in 1..=n {
            acc *= self.lambda_at(k)?;
            out.push(acc.clone());
        }
        Ok(out)
    }
}

/// Triangle `H[i][n]`, `0 <= i <= n <= degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct StieltjesTableau {
    // cols[n][i] = H_{i,n}
    cols: Vec<Vec<Q>>,
}

impl StieltjesTableau {
    pub fn degree(&self) -> usize {
        self.cols.len() - 1
    }

    /// `H_{i,n}`; zero when `i > n`.
    pub fn get(&self, i: usize, n: usize) -> Q {
        if i > n {
            return Q::zero();
        }
        self.cols[n][i].clone()
    }

    pub fn entry(&self, i: usize, n: usize) -> &Q {
        &self.cols[n][i]
    }

    /// Row `i`: `H_{i,i}, ..., H_{i,N}` indexed by `n - i`.
    pub fn row(&self, i: usize) -> Vec<Q> {
        (i..=self.degree()).map(|n| self.cols[n][i].clone()).collect()
    }

    /// Row 0: the moments `μ_0..μ_N`.
    pub fn moments(&self) -> Vec<Q> {
        self.row(0)
    }

    /// Overwrite one entry (used to check that the verifiers detect corruption).
    pub fn set(&mut self, i: usize, n: usize, v: Q) {
        self.cols[n][i] = v;
    }

    /// `(i, n, H_{i,n})` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        let d = self.degree();
        (0..=d).flat_map(move |i| (i..=d).map(move |n| (i, n, &self.cols[n][i])))
    }

    /// Power series `Σ_n H_{j,n} c_n t^n` for a normaliser sequence `c`.
    pub fn row_series(&self, j: usize, c: &[Q]) -> PowerSeries<Q> {
        PowerSeries::from_fn(self.degree(), |n| if n < j { Q::zero() } else { &self.cols[n][j] * &c[n] })
    }
}

/// Fill the tableau column by column; needs `b_0..b_{N-1}`, `λ_1..λ_{N-1}`.
pub fn tableau_from_jfraction(jf: &JFraction, n_max: usize) -> Result<StieltjesTableau, Error> {
    let mut cols: Vec<Vec<Q>> = Vec::with_capacity(n_max + 1);
    cols.push(vec![Q::one()]);
    for n in 1..=n_max {
        let prev = &cols[n - 1];
        let mut col = vec![Q::zero(); n + 1];
        col[n] = Q::one();
        for i in (0..n).rev() {
            let mut v = &prev[i] * jf.b_at(i)?;
            if i >= 1 {
                v += &prev[i - 1];
            }
            if i < n - 1 {
                v += &(&prev[i + 1] * jf.lambda_at(i + 1)?);
            }
            col[i] = v;
        }
        cols.push(col);
    }
    Ok(StieltjesTableau { cols })
}

/// Recover `b_0..b_N` and `λ_1..λ_N` from `μ_0..μ_{2N+1}` through Hankel
/// quotients `λ_n = D_{n-2}D_n/D_{n-1}^2`, `b_n = χ_n/D_n - χ_{n-1}/D_{n-1}`.
pub fn jfraction_from_moments(mu: &[Q], n: usize) -> Result<JFraction, Error> {
    if mu.len() < 2 * n + 2 {
        return Err(Error::Insufficient(format!("need {} moments for depth {n}, got {}", 2 * n + 2, mu.len())));
    }
    jfraction_from_moments_partial(&mu[..2 * n + 2])
}

/// As many coefficients as the supplied moments determine: `λ_n` needs
/// `μ_{2n}`, `b_n` needs `μ_{2n+1}`.
pub fn jfraction_from_moments_partial(mu: &[Q]) -> Result<JFraction, Error> {
    if mu.is_empty() {
        return Err(Error::Insufficient("no moments".into()));
    }
    if !mu[0].is_one() {
        return Err(Error::InvalidParams(format!("moments must be normalised, got mu_0 = {}", mu[0])));
    }
    let m = mu.len() - 1;
    let nd = m / 2; // D_0..D_nd available
    let mut d = Vec::with_capacity(nd + 1);
    for k in 0..=nd {
        let v = hankel(mu, HankelKind::D(k))?;
        if v.is_zero() {
            return Err(Error::NonRegular(k));
        }
        d.push(v);
    }
    let d_at = |k: isize| if k < 0 { Q::one() } else { d[k as usize].clone() };
    let nb = m.div_ceil(2); // b_n needs 2n+1 <= m
    let mut chi = Vec::with_capacity(nb);
    for k in 0..nb {
        chi.push(hankel(mu, HankelKind::Chi(k))?);
    }
    let chi_at = |k: isize| if k < 0 { Q::zero() } else { chi[k as usize].clone() };
    let b = (0..nb as isize)
        .map(|k| chi_at(k) / d_at(k) - chi_at(k - 1) / d_at(k - 1))
        .collect();
    let lambda = (1..=nd as isize)
        .map(|k| d_at(k - 2) * d_at(k) / (d_at(k - 1) * d_at(k - 1)))
        .collect();
    JFraction::new(b, lambda)
}

/// Monic orthogonal polynomials: `coeffs[n][k]` is the `x^k` coefficient of `P_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicPolyTable {
    coeffs: Vec<Vec<Q>>,
}

impl MonicPolyTable {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn poly(&self, n: usize) -> &[Q] {
        &self.coeffs[n]
    }

    pub fn eval(&self, n: usize, x: &Q) -> Q {
        self.coeffs[n].iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }
}

/// `P_{n+1} = (x - b_n) P_n - λ_n P_{n-1}`, `P_0 = 1`.
pub fn monic_polys(jf: &JFraction, n_max: usize) -> Result<MonicPolyTable, Error> {
    let mut coeffs: Vec<Vec<Q>> = vec![vec![Q::one()]];
    for n in 0..n_max {
        let p = &coeffs[n];
        let mut next = vec![Q::zero(); n + 2];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &(c * jf.b_at(n)?);
        }
        if n >= 1 {
            let lam = jf.lambda_at(n)?;
            for (k, c) in coeffs[n - 1].iter().enumerate() {
                next[k] -= &(c * lam);
            }
        }
        coeffs.push(next);
    }
    Ok(MonicPolyTable { coeffs })
}

/// Exact check of `x^n = Σ_j H_{j,n} P_j(x)`.
pub fn verify_connection(tab: &StieltjesTableau, polys: &MonicPolyTable, n: usize) -> bool {
    if n > tab.degree() || n > polys.degree() {
        return false;
    }
    let mut acc = vec![Q::zero(); n + 1];
    for j in 0..=n {
        let h = tab.entry(j, n);
        for (k, c) in polys.poly(j).iter().enumerate() {
            acc[k] += &(h * c);
        }
    }
    acc.iter().enumerate().all(|(k, c)| if k == n { c.is_one() } else { c.is_zero() })
}

/// Exact check of `H_{0,k+l} = Σ_j λ_1⋯λ_j H_{j,k} H_{j,l}`.
pub fn verify_convolution(tab: &StieltjesTableau, jf: &JFraction, k: usize, l: usize) -> Result<bool, Error> {
    if k + l > tab.degree() {
        return Err(Error::Insufficient(format!("tableau degree {} < {}", tab.degree(), k + l)));
    }
    let prods = jf.lambda_products(k.min(l))?;
    let mut rhs = Q::zero();
    for (j, w) in prods.iter().enumerate() {
        rhs += &(w * &tab.get(j, k) * tab.get(j, l));
    }
    Ok(rhs == *tab.entry(0, k + l))
}

/// Moments from the J-fraction `1/(1 - b_0 x - λ_1 x^2/(1 - b_1 x - ...))`
/// truncated at depth `depth`, expanded to degree `n` by bottom-up series
/// arithmetic. Independent of the tableau recurrence.
pub fn continued_fraction_moments(jf: &JFraction, depth: usize, n: usize) -> Result<Vec<Q>, Error> {
    let mut f = PowerSeries::one(n);
    for k in (0..depth).rev() {
        let mut den = PowerSeries::one(n);
        let bx = PowerSeries::linear(-jf.b_at(k)?, n);
        den = den.add(&bx);
        if k + 1 < depth {
            let lam = jf.lambda_at(k + 1)?;
            den = den.sub(&f.shift(2).scale(lam));
        }
        f = den.inverse()?;
    }
    Ok(f.into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from(x)).collect()
    }

    fn catalan_jf(n: usize) -> JFraction {
        JFraction::new(vec![Q::zero(); n], vec![Q::one(); n]).unwrap()
    }

    fn hermite_jf(n: usize) -> JFraction {
        JFraction::new(vec![Q::zero(); n], (1..=n as i64).map(|k| rat(k, 2)).collect()).unwrap()
    }

    #[test]
    fn catalan_moments() {
        let t = tableau_from_jfraction(&catalan_jf(4), 4).unwrap();
        assert_eq!(t.moments(), ints(&[1, 0, 1, 0, 2]));
        assert!((0..=4).all(|n| t.get(n, n).is_one()));
    }

    #[test]
    fn hermite_entry() {
        let t = tableau_from_jfraction(&hermite_jf(4), 4).unwrap();
        assert_eq!(t.get(0, 4), rat(3, 4));
        assert_eq!(t.get(1, 3), rat(3, 2));
    }

    #[test]
    fn degree_zero_tableau() {
        let t = tableau_from_jfraction(&JFraction::new(vec![], vec![]).unwrap(), 0).unwrap();
        assert_eq!(t.degree(), 0);
        assert_eq!(t.get(0, 0), Q::one());
    }

    #[test]
    fn moments_to_jfraction_examples() {
        let jf = jfraction_from_moments(&ints(&[1, 0, 1, 0, 2, 0, 5, 0]), 3).unwrap();
        assert_eq!(jf.b(), &ints(&[0, 0, 0, 0])[..]);
        assert_eq!(jf.lambdas(), &ints(&[1, 1, 1])[..]);

        let fact: Vec<Q> = (0..14).map(Q::factorial).collect();
        let jf = jfraction_from_moments(&fact, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(jf.b()[n], Q::from(2 * n as i64 + 1));
        }
        for n in 1..=6 {
            assert_eq!(*jf.lambda_at(n).unwrap(), Q::from((n * n) as i64));
        }

        let jf = jfraction_from_moments(&[Q::one(), rat(3, 7)], 0).unwrap();
        assert_eq!(jf.b(), &[rat(3, 7)][..]);
        assert!(jf.lambdas().is_empty());

        let partial = jfraction_from_moments_partial(&ints(&[1, 0, 1, 0, 2])).unwrap();
        assert_eq!(partial.b(), &ints(&[0, 0])[..]);
        assert_eq!(partial.lambdas(), &ints(&[1, 1])[..]);
    }

    #[test]
    fn non_regular_is_reported() {
        // μ = (1, 1, 1, ...) is a point mass: D_1 = 0.
        let mu = vec![Q::one(); 6];
        assert_eq!(jfraction_from_moments(&mu, 2), Err(Error::NonRegular(1)));
        assert_eq!(JFraction::new(vec![], vec![Q::one(), Q::zero()]), Err(Error::NonRegular(2)));
    }

    #[test]
    fn monic_poly_examples() {
        let jf = JFraction::new(vec![rat(2, 3)], vec![]).unwrap();
        assert_eq!(monic_polys(&jf, 1).unwrap().poly(1), &[rat(-2, 3), Q::one()][..]);
        assert_eq!(monic_polys(&hermite_jf(2), 2).unwrap().poly(2), &[rat(-1, 2), Q::zero(), Q::one()][..]);
        assert_eq!(monic_polys(&catalan_jf(3), 3).unwrap().poly(3), &ints(&[0, -2, 0, 1])[..]);
    }

    #[test]
    fn connection_and_corruption() {
        let jf = hermite_jf(6);
        let mut t = tableau_from_jfraction(&jf, 6).unwrap();
        let p = monic_polys(&jf, 6).unwrap();
        assert!((0..=6).all(|n| verify_connection(&t, &p, n)));
        t.set(0, 2, t.get(0, 2) + Q::one());
        assert!(!verify_connection(&t, &p, 2));
    }

    #[test]
    fn convolution_examples() {
        let jf = hermite_jf(16);
        let t = tableau_from_jfraction(&jf, 16).unwrap();
        for k in 0..=16 {
            for l in 0..=16 - k {
                assert!(verify_convolution(&t, &jf, k, l).unwrap());
            }
        }
        let jf = catalan_jf(4);
        let t = tableau_from_jfraction(&jf, 4).unwrap();
        assert!(verify_convolution(&t, &jf, 2, 2).unwrap());
    }

    #[test]
    fn continued_fraction_matches_row0() {
        let jf = JFraction::new((0..10).map(|k| rat(k + 1, 3)).collect(), (1..=10).map(|k| rat(2 * k - 1, 5)).collect()).unwrap();
        let t = tableau_from_jfraction(&jf, 9).unwrap();
        assert_eq!(continued_fraction_moments(&jf, 10, 9).unwrap(), t.moments());
    }
}
