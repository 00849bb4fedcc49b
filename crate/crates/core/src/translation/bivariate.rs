use crate::error::Error;
use crate::scalar::ExactRational;
use crate::series::PowerSeries;

type Q = ExactRational;

/// Truncated bivariate series: `coeffs[a][b]` multiplies `t^a s^b`,
/// `a + b <= degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bivariate {
    degree: usize,
    coeffs: Vec<Vec<Q>>,
}

impl Bivariate {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: (0..=degree).map(|a| vec![Q::zero(); degree - a + 1]).collect() }
    }

    pub fn one(degree: usize) -> Self {
        let mut z = Self::zero(degree);
        z.coeffs[0][0] = Q::one();
        z
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `t^a s^b` (zero beyond the truncation).
    pub fn get(&self, a: usize, b: usize) -> Q {
        if a + b > self.degree { Q::zero() } else { self.coeffs[a][b].clone() }
    }

    pub fn set(&mut self, a: usize, b: usize, v: Q) {
        self.coeffs[a][b] = v;
    }

    pub fn add_at(&mut self, a: usize, b: usize, v: &Q) {
        if a + b <= self.degree {
            self.coeffs[a][b] += v;
        }
    }

    /// `f(t)·g(s)`.
    pub fn outer(f: &PowerSeries<Q>, g: &PowerSeries<Q>, degree: usize) -> Self {
        let mut out = Self::zero(degree);
        for a in 0..=degree.min(f.degree()) {
            let fa = f.coeff(a);
            if fa.is_zero() {
                continue;
            }
            for b in 0..=(degree - a).min(g.degree()) {
                out.coeffs[a][b] = &fa * &g.coeff(b);
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        self.check(o)?;
        let mut out = self.clone();
        for (a, row) in o.coeffs.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                out.coeffs[a][b] += v;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { degree: self.degree, coeffs: self.coeffs.iter().map(|r| r.iter().map(|v| v * c).collect()).collect() }
    }

    /// Product of commuting variables.
    pub fn mul(&self, o: &Self) -> Result<Self, Error> {
        NormalOrderedPoly::mul_with(self, o, &Q::one())
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.coeffs.iter().enumerate().flat_map(|(a, r)| r.iter().enumerate().map(move |(b, v)| (a, b, v)))
    }

    /// First cell where the tables differ, if any.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize)> {
        let d = self.degree.min(o.degree);
        (0..=d).flat_map(|a| (0..=d - a).map(move |b| (a, b))).find(|&(a, b)| self.get(a, b) != o.get(a, b))
    }

    /// Largest `|self - o|` over the common cells.
    pub fn max_abs_difference(&self, o: &Self) -> Q {
        let d = self.degree.min(o.degree);
        let mut m = Q::zero();
        for a in 0..=d {
            for b in 0..=d - a {
                let diff = (self.get(a, b) - o.get(a, b)).abs();
                if diff > m {
                    m = diff;
                }
            }
        }
        m
    }

    fn check(&self, o: &Self) -> Result<(), Error> {
        if self.degree != o.degree {
            return Err(Error::DegreeMismatch(format!("{} vs {}", self.degree, o.degree)));
        }
        Ok(())
    }
}

/// Polynomials in `t, s` with `st = qts`, stored in normal order
/// (t-powers to the left of s-powers).
#[derive(Clone, Debug, PartialEq)]
pub struct NormalOrderedPoly {
    q: Q,
    table: Bivariate,
}

impl NormalOrderedPoly {
    pub fn new(q: Q, table: Bivariate) -> Self {
        Self { q, table }
    }

    pub fn one(q: Q, degree: usize) -> Self {
        Self { q, table: Bivariate::one(degree) }
    }

    /// `t + s`.
    pub fn t_plus_s(q: Q, degree: usize) -> Self {
        let mut b = Bivariate::zero(degree);
        if degree >= 1 {
            b.set(1, 0, Q::one());
            b.set(0, 1, Q::one());
        }
        Self { q, table: b }
    }

    pub fn table(&self) -> &Bivariate {
        &self.table
    }

    pub fn q(&self) -> &Q {
        &self.q
    }

    /// `(t^a s^b)(t^c s^d) = q^{bc} t^{a+c} s^{b+d}`.
    pub fn mul(&self, o: &Self) -> Result<Self, Error> {
        if self.q != o.q {
            return Err(Error::InvalidParams("multiplying polynomials over different q".into()));
        }
        Ok(Self { q: self.q.clone(), table: Self::mul_with(&self.table, &o.table, &self.q)? })
    }

    pub fn pow(&self, n: usize) -> Result<Self, Error> {
        let mut acc = Self::one(self.q.clone(), self.table.degree());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn mul_with(x: &Bivariate, y: &Bivariate, q: &Q) -> Result<Bivariate, Error> {
        x.check(y)?;
        let n = x.degree;
        let qpow: Vec<Q> = (0..=n * n).map(|k| q.powu(k)).collect();
        let mut out = Bivariate::zero(n);
        for (a, b, u) in x.cells() {
            if u.is_zero() {
                continue;
            }
            for c in 0..=n - a - b {
                for d in 0..=n - a - b - c {
                    let v = &y.coeffs[c][d];
                    if v.is_zero() {
                        continue;
                    }
                    out.coeffs[a + c][b + d] += &(u * v * &qpow[b * c]);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q_binomial, rat};

    #[test]
    fn non_commutative_binomial() {
        let q = rat(2, 5);
        let x = NormalOrderedPoly::t_plus_s(q.clone(), 12);
        for n in 0..=12 {
            let p = x.pow(n).unwrap();
            for k in 0..=n {
                assert_eq!(p.table().get(k, n - k), q_binomial(n, k, &q), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn associativity_spot_check() {
        let q = rat(1, 3);
        let mut a = Bivariate::zero(5);
        a.set(1, 2, rat(3, 2));
        a.set(0, 1, Q::one());
        let mut b = Bivariate::zero(5);
        b.set(2, 0, rat(-1, 7));
        b.set(1, 1, Q::from(2));
        let mut c = Bivariate::zero(5);
        c.set(0, 2, Q::from(5));
        c.set(1, 0, rat(1, 4));
        let (a, b, c) = (
            NormalOrderedPoly::new(q.clone(), a),
            NormalOrderedPoly::new(q.clone(), b),
            NormalOrderedPoly::new(q, c),
        );
        assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }
}
