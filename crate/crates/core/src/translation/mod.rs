//! Translation structures behind the addition formulas: the ordinary shift,
//! the q-translation `T_{s,q}`, the substitution `t ↦ t+s` in the algebra
//! `st = qts`, a generalized translation with arbitrary weight sequences, and
//! the affine change of variable.

mod bivariate;
mod eval;

pub use bivariate::{Bivariate, NormalOrderedPoly};
pub use eval::{translate_closed_form, translate_eval};

use serde::Serialize;

use crate::error::Error;
use crate::scalar::{ExactRational, q_binomial_row, tri};
use crate::series::PowerSeries;

type Q = ExactRational;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TranslationKind {
    /// `x^n ↦ (t+s)^n`.
    Classical,
    /// `x^n ↦ (t+s)(t+sq)⋯(t+sq^{n-1})`.
    QTranslation { q: Q },
    /// `x^n ↦ (t+s)^n` with `st = qts`, normal ordered.
    NonCommutative { q: Q },
    /// `x^m ↦ Σ_j c_j s^j d_{m-j} t^{m-j}`.
    Generalized { c: Vec<Q>, d: Vec<Q> },
    /// Classical-type translation of `e^{-bt/a} Q_0(t/a)`.
    Affine { a: Q, b: Q, inner: Box<TranslationKind> },
}

impl TranslationKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Classical => "classical",
            Self::QTranslation { .. } => "q_translation",
            Self::NonCommutative { .. } => "non_commutative",
            Self::Generalized { .. } => "generalized",
            Self::Affine { .. } => "affine",
        }
    }

    fn validate(&self) -> Result<(), Error> {
        match self {
            Self::QTranslation { q } | Self::NonCommutative { q } => {
                if q <= &Q::zero() || q >= &Q::one() {
                    return Err(Error::InvalidParams(format!("translation needs 0 < q < 1, got {q}")));
                }
            }
            Self::Affine { a, inner, .. } => {
                if a.is_zero() {
                    return Err(Error::InvalidParams("affine translation needs a != 0".into()));
                }
                inner.validate()?;
            }
            Self::Classical | Self::Generalized { .. } => {}
        }
        Ok(())
    }
}

/// Image of `x^n` as a table of `t^{n-k} s^k` coefficients (index `k`), or for
/// the non-commutative kind `t^k s^{n-k}` (index `k` is the t-power).
fn monomial_image(n: usize, kind: &TranslationKind) -> Result<Vec<(usize, usize, Q)>, Error> {
    Ok(match kind {
        TranslationKind::Classical => (0..=n).map(|k| (n - k, k, Q::binomial(n as u64, k as u64))).collect(),
        TranslationKind::QTranslation { q } => q_binomial_row(n, q)
            .into_iter()
            .enumerate()
            .map(|(k, c)| (n - k, k, c * q.pow(tri(k)).expect("q != 0")))
            .collect(),
        TranslationKind::NonCommutative { q } => {
            q_binomial_row(n, q).into_iter().enumerate().map(|(k, c)| (k, n - k, c)).collect()
        }
        TranslationKind::Generalized { c, d } => {
            if c.len() <= n || d.len() <= n {
                return Err(Error::Insufficient(format!("generalized translation weights needed up to index {n}")));
            }
            (0..=n).map(|j| (n - j, j, &c[j] * &d[n - j])).collect()
        }
        TranslationKind::Affine { inner, .. } => monomial_image(n, inner)?,
    })
}

/// Apply the translation to `p(x) = Σ p_n x^n`, giving the coefficient table
/// of `t^a s^b` for `a + b <= n_max` (normal ordered for the non-commutative
/// kind).
pub fn translate_series(p: &PowerSeries<Q>, kind: &TranslationKind, n_max: usize) -> Result<Bivariate, Error> {
    kind.validate()?;
    if p.degree() < n_max {
        return Err(Error::DegreeMismatch(format!("series degree {} < {n_max}", p.degree())));
    }
    let mut out = Bivariate::zero(n_max);
    for n in 0..=n_max {
        let pn = p.coeff(n);
        if pn.is_zero() {
            continue;
        }
        for (a, b, c) in monomial_image(n, kind)? {
            out.add_at(a, b, &(&pn * &c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jfraction::{JFraction, StieltjesTableau, tableau_from_jfraction};
    use crate::scalar::{q_factorial, rat};

    fn x_squared() -> PowerSeries<Q> {
        PowerSeries::from_coeffs(vec![Q::zero(), Q::zero(), Q::one()])
    }

    #[test]
    fn images_of_x_squared() {
        let q = rat(1, 3);
        let c = translate_series(&x_squared(), &TranslationKind::Classical, 2).unwrap();
        assert_eq!((c.get(2, 0), c.get(1, 1), c.get(0, 2)), (Q::one(), Q::from(2), Q::one()));
        let t = translate_series(&x_squared(), &TranslationKind::QTranslation { q: q.clone() }, 2).unwrap();
        assert_eq!((t.get(2, 0), t.get(1, 1), t.get(0, 2)), (Q::one(), Q::one() + &q, q.clone()));
        let nc = translate_series(&x_squared(), &TranslationKind::NonCommutative { q: q.clone() }, 2).unwrap();
        assert_eq!((nc.get(2, 0), nc.get(1, 1), nc.get(0, 2)), (Q::one(), Q::one() + &q, Q::one()));
    }

    #[test]
    fn generalized_reduces_to_classical_with_factorial_weights() {
        // c_j = d_j = 1/j! applied to n! x^n gives the binomial expansion
        let n = 6;
        let w: Vec<Q> = (0..=n).map(|j| Q::factorial(j as u64).recip().unwrap()).collect();
        let p = PowerSeries::from_fn(n, |k| Q::factorial(k as u64));
        let g = translate_series(&p, &TranslationKind::Generalized { c: w.clone(), d: w }, n).unwrap();
        let ones = PowerSeries::from_fn(n, |_| Q::one());
        assert_eq!(g, translate_series(&ones, &TranslationKind::Classical, n).unwrap());
    }

    /// Σ_n w_n Q_n(t) Q̃_n(s) with row normalisations `left`, `right`.
    fn bilinear(tab: &StieltjesTableau, jf: &JFraction, n: usize, left: &[Q], right: &[Q]) -> Bivariate {
        let w = jf.lambda_products(n).unwrap();
        let mut acc = Bivariate::zero(n);
        for j in 0..=n {
            let term = Bivariate::outer(&tab.row_series(j, left), &tab.row_series(j, right), n);
            acc = acc.add(&term.scale(&w[j])).unwrap();
        }
        acc
    }

    fn sample_jfraction(n: usize) -> JFraction {
        let b = (0..=n).map(|k| rat(2 * k as i64 - 3, k as i64 + 2)).collect();
        let l = (1..=n).map(|k| rat(k as i64 + 1, 3 - 2 * (k as i64 % 2) * 2)).collect();
        JFraction::new(b, l).unwrap()
    }

    #[test]
    fn equivalence_scaffold_for_every_kind() {
        let n = 12;
        let jf = sample_jfraction(n);
        let tab = tableau_from_jfraction(&jf, n).unwrap();
        let q = rat(2, 7);
        let fact: Vec<Q> = (0..=n).map(|k| Q::factorial(k as u64).recip().unwrap()).collect();
        let qfact: Vec<Q> = (0..=n).map(|k| q_factorial(&q, k).recip().unwrap()).collect();
        let qtilde: Vec<Q> = (0..=n).map(|k| &qfact[k] * &q.pow(tri(k)).unwrap()).collect();

        let lhs = translate_series(&tab.row_series(0, &fact), &TranslationKind::Classical, n).unwrap();
        assert_eq!(lhs, bilinear(&tab, &jf, n, &fact, &fact));

        let kind = TranslationKind::QTranslation { q: q.clone() };
        let lhs = translate_series(&tab.row_series(0, &qfact), &kind, n).unwrap();
        assert_eq!(lhs, bilinear(&tab, &jf, n, &qfact, &qtilde));

        let kind = TranslationKind::NonCommutative { q: q.clone() };
        let lhs = translate_series(&tab.row_series(0, &qfact), &kind, n).unwrap();
        assert_eq!(lhs, bilinear(&tab, &jf, n, &qfact, &qfact));
    }

    #[test]
    fn inverse_base_relation() {
        // T_{y,1/q} x^n = q^{-C(n,2)} T_{x,q} y^n, coefficientwise
        let q = rat(3, 5);
        let qi = q.recip().unwrap();
        for n in 0..=10 {
            let fwd = monomial_image(n, &TranslationKind::QTranslation { q: q.clone() }).unwrap();
            let scale = q.pow(-tri(n)).unwrap();
            for (k, c) in q_binomial_row(n, &qi).into_iter().enumerate() {
                // coefficient of x^{n-k} y^k on the left
                let left = c * qi.pow(tri(k)).unwrap();
                // T_{x,q} y^n carries x^{n-k} y^k at index n-k (roles swapped)
                let (_, _, right) = &fwd[n - k];
                assert_eq!(left, right * &scale, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn invalid_q_rejected() {
        let r = translate_series(&x_squared(), &TranslationKind::QTranslation { q: Q::one() }, 2);
        assert!(matches!(r, Err(Error::InvalidParams(_))));
    }
}
