//! Catalog of polynomial families: exact recurrence coefficients, the
//! generating functions `Q_j` (and `Q̃_j` for q-families), and closed-form
//! tableaux where they exist.

mod affine;
mod classical;
mod moments;
mod numeric;
mod qfamilies;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::jfraction::{JFraction, StieltjesTableau, tableau_from_jfraction};
use crate::scalar::{BigFloat, ExactRational, PrecisionContext, q_factorial, rat, tri};
use crate::series::{RationalSeries, SeriesValue};
use crate::translation::TranslationKind;

type Q = ExactRational;

/// Named scalar parameters (`nu`, `alpha`, `q`, ...).
pub type Params = BTreeMap<String, Q>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyId {
    Ultraspherical,
    Jacobi,
    Hermite,
    Laguerre,
    Meixner,
    Charlier,
    MeixnerPollaczek,
    LittleQJacobi,
    BigQJacobi,
    AlSalamCarlitz,
    QUltraspherical,
    QUltrasphericalBeta0,
    AskeyWilsonSlice,
    HermiteMoments,
    LaguerreMoments,
    MeixnerMoments,
    MeixnerPollaczekMoments,
    GegenbauerMoments,
    Derangement,
    Affine,
}

/// One parameter: name, default value, human-readable constraint.
#[derive(Clone, Debug, Serialize)]
pub struct ParamInfo {
    pub name: &'static str,
    pub default: &'static str,
    pub constraint: &'static str,
}

const fn p(name: &'static str, default: &'static str, constraint: &'static str) -> ParamInfo {
    ParamInfo { name, default, constraint }
}

impl FamilyId {
    pub const ALL: [FamilyId; 20] = [
        Self::Ultraspherical,
        Self::Jacobi,
        Self::Hermite,
        Self::Laguerre,
        Self::Meixner,
        Self::Charlier,
        Self::MeixnerPollaczek,
        Self::LittleQJacobi,
        Self::BigQJacobi,
        Self::AlSalamCarlitz,
        Self::QUltraspherical,
        Self::QUltrasphericalBeta0,
        Self::AskeyWilsonSlice,
        Self::HermiteMoments,
        Self::LaguerreMoments,
        Self::MeixnerMoments,
        Self::MeixnerPollaczekMoments,
        Self::GegenbauerMoments,
        Self::Derangement,
        Self::Affine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Ultraspherical => "ultraspherical",
            Self::Jacobi => "jacobi",
            Self::Hermite => "hermite",
            Self::Laguerre => "laguerre",
            Self::Meixner => "meixner",
            Self::Charlier => "charlier",
            Self::MeixnerPollaczek => "meixner_pollaczek",
            Self::LittleQJacobi => "little_q_jacobi",
            Self::BigQJacobi => "big_q_jacobi",
            Self::AlSalamCarlitz => "al_salam_carlitz",
            Self::QUltraspherical => "q_ultraspherical",
            Self::QUltrasphericalBeta0 => "q_ultraspherical_beta0",
            Self::AskeyWilsonSlice => "askey_wilson_slice",
            Self::HermiteMoments => "hermite_moments",
            Self::LaguerreMoments => "laguerre_moments",
            Self::MeixnerMoments => "meixner_moments",
            Self::MeixnerPollaczekMoments => "meixner_pollaczek_moments",
            Self::GegenbauerMoments => "gegenbauer_moments",
            Self::Derangement => "derangement",
            Self::Affine => "affine",
        }
    }

    pub fn params(self) -> Vec<ParamInfo> {
        const Q_RANGE: &str = "0 < q < 1";
        match self {
            Self::Ultraspherical => vec![p("nu", "1", "nu > -1/2")],
            Self::Jacobi => vec![p("alpha", "1/2", "alpha > -1"), p("beta", "1/3", "beta > -1")],
            Self::Hermite => vec![],
            Self::Laguerre => vec![p("alpha", "0", "alpha > -1")],
            Self::Meixner => vec![p("beta", "2", "beta > 0"), p("c", "1/3", "0 < c < 1")],
            Self::Charlier => vec![p("a", "1", "a > 0")],
            Self::MeixnerPollaczek => vec![p("lambda", "1", "lambda > 0"), p("cot_phi", "1", "cot(phi), any rational")],
            Self::LittleQJacobi => vec![p("a", "1/3", "0 < aq < 1"), p("b", "1/4", "bq < 1"), p("q", "1/2", Q_RANGE)],
            Self::BigQJacobi => vec![
                p("a", "1/3", "0 < aq < 1"),
                p("b", "1/4", "bq < 1"),
                p("c", "1/5", "c != 0, lambda_n != 0"),
                p("q", "1/2", Q_RANGE),
            ],
            Self::AlSalamCarlitz => vec![p("a", "1/3", "a != 0"), p("q", "1/2", Q_RANGE)],
            Self::QUltraspherical => vec![p("beta", "1/3", "0 < |beta| < 1"), p("q", "1/2", Q_RANGE)],
            Self::QUltrasphericalBeta0 => vec![p("q", "1/2", Q_RANGE)],
            Self::AskeyWilsonSlice => vec![p("a", "1/3", "0 < |a| < 1"), p("q", "1/2", Q_RANGE)],
            Self::HermiteMoments => vec![p("x", "1", "any rational")],
            Self::LaguerreMoments => vec![p("alpha", "1/2", "alpha > -1"), p("x", "1/2", "x != 0")],
            Self::MeixnerMoments => vec![
                p("beta", "5/2", "beta > 1"),
                p("c", "1/3", "0 < c < 1"),
                p("x", "1/2", "x not a non-negative integer"),
            ],
            Self::MeixnerPollaczekMoments => vec![
                p("lambda", "1", "lambda > 0"),
                p("phi_over_pi", "1/3", "0 < phi/pi < 1"),
                p("x", "1/2", "any rational"),
            ],
            Self::GegenbauerMoments => vec![p("nu", "3/2", "nu > 1/2"), p("x", "1/2", "x^2 != 1")],
            Self::Derangement => vec![p("alpha", "1/2", "alpha > -1"), p("x", "1/3", "x != 0")],
            Self::Affine => vec![p("alpha", "0", "alpha > -1 (inner Laguerre)"), p("a", "2", "a != 0"), p("b", "1", "any rational")],
        }
    }

    pub fn default_params(self) -> Params {
        self.params().iter().map(|p| (p.name.to_string(), p.default.parse().expect("catalog default"))).collect()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family {s:?}")))
    }
}

/// How `Q_j` is normalised against the tableau: `Q_j(t) = Σ H_{j,n} t^n / norm_n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `n!`
    Factorial,
    /// `(q;q)_n`
    QFactorial(Q),
}

impl Normalization {
    pub fn at(&self, n: usize) -> Q {
        match self {
            Self::Factorial => Q::factorial(n as u64),
            Self::QFactorial(q) => q_factorial(q, n),
        }
    }
}

/// Typed parameters of a bound family.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Kind {
    Ultraspherical { nu: Q },
    Jacobi { alpha: Q, beta: Q },
    Hermite,
    Laguerre { alpha: Q },
    Meixner { beta: Q, c: Q },
    Charlier { a: Q },
    MeixnerPollaczek { lambda: Q, cot: Q },
    LittleQJacobi { a: Q, b: Q, q: Q },
    BigQJacobi { a: Q, b: Q, c: Q, q: Q },
    AlSalamCarlitz { a: Q, q: Q },
    QUltraspherical { beta: Q, q: Q },
    QUltraBeta0 { q: Q },
    AskeyWilsonSlice { a: Q, q: Q },
    HermiteMoments { x: Q },
    LaguerreMoments { alpha: Q, x: Q },
    MeixnerMoments { beta: Q, c: Q, x: Q },
    MeixnerPollaczekMoments { lambda: Q, phi_over_pi: Q, x: Q },
    GegenbauerMoments { nu: Q, x: Q },
    Affine { inner: Box<FamilySpec>, a: Q, b: Q },
}

/// A catalog family bound to concrete parameters. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    id: FamilyId,
    params: Params,
    kind: Kind,
    translation: TranslationKind,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

fn require(cond: bool, msg: &str) -> Result<(), Error> {
    if cond { Ok(()) } else { Err(bad(msg)) }
}

fn q_in_range(q: &Q) -> Result<(), Error> {
    require(q > &Q::zero() && q < &Q::one(), "0 < q < 1")
}

/// Bind a family to parameters (missing ones take catalog defaults).
pub fn make_family(id: FamilyId, params: &Params) -> Result<FamilySpec, Error> {
    let mut full = id.default_params();
    for (k, v) in params {
        if !full.contains_key(k) {
            return Err(bad(format!("{id} has no parameter {k:?}")));
        }
        full.insert(k.clone(), v.clone());
    }
    let g = |k: &str| full[k].clone();
    let zero = Q::zero();
    let one = Q::one();
    let kind = match id {
        FamilyId::Ultraspherical => {
            let nu = g("nu");
            require(nu > rat(-1, 2), "nu > -1/2")?;
            Kind::Ultraspherical { nu }
        }
        FamilyId::Jacobi => {
            let (alpha, beta) = (g("alpha"), g("beta"));
            require(alpha > -&one && beta > -&one, "alpha, beta > -1")?;
            Kind::Jacobi { alpha, beta }
        }
        FamilyId::Hermite => Kind::Hermite,
        FamilyId::Laguerre => {
            let alpha = g("alpha");
            require(alpha > -&one, "alpha > -1")?;
            Kind::Laguerre { alpha }
        }
        FamilyId::Meixner => {
            let (beta, c) = (g("beta"), g("c"));
            require(beta > zero, "beta > 0")?;
            require(c > zero && c < one, "0 < c < 1")?;
            Kind::Meixner { beta, c }
        }
        FamilyId::Charlier => {
            let a = g("a");
            require(a > zero, "a > 0")?;
            Kind::Charlier { a }
        }
        FamilyId::MeixnerPollaczek => {
            let lambda = g("lambda");
            require(lambda > zero, "lambda > 0")?;
            Kind::MeixnerPollaczek { lambda, cot: g("cot_phi") }
        }
        FamilyId::LittleQJacobi => {
            let (a, b, q) = (g("a"), g("b"), g("q"));
            q_in_range(&q)?;
            require(a > zero && &a * &q < one, "0 < aq < 1")?;
            require(&b * &q < one, "bq < 1")?;
            Kind::LittleQJacobi { a, b, q }
        }
        FamilyId::BigQJacobi => {
            let (a, b, c, q) = (g("a"), g("b"), g("c"), g("q"));
            q_in_range(&q)?;
            require(a > zero && &a * &q < one, "0 < aq < 1")?;
            require(&b * &q < one, "bq < 1")?;
            require(!c.is_zero(), "c != 0")?;
            Kind::BigQJacobi { a, b, c, q }
        }
        FamilyId::AlSalamCarlitz => {
            let (a, q) = (g("a"), g("q"));
            q_in_range(&q)?;
            require(!a.is_zero(), "a != 0")?;
            Kind::AlSalamCarlitz { a, q }
        }
        FamilyId::QUltraspherical => {
            let (beta, q) = (g("beta"), g("q"));
            q_in_range(&q)?;
            require(!beta.is_zero() && beta.abs() < one, "0 < |beta| < 1")?;
            Kind::QUltraspherical { beta, q }
        }
        FamilyId::QUltrasphericalBeta0 => {
            let q = g("q");
            q_in_range(&q)?;
            Kind::QUltraBeta0 { q }
        }
        FamilyId::AskeyWilsonSlice => {
            let (a, q) = (g("a"), g("q"));
            q_in_range(&q)?;
            require(!a.is_zero() && a.abs() < one, "0 < |a| < 1")?;
            Kind::AskeyWilsonSlice { a, q }
        }
        FamilyId::HermiteMoments => Kind::HermiteMoments { x: g("x") },
        FamilyId::LaguerreMoments => {
            let (alpha, x) = (g("alpha"), g("x"));
            require(alpha > -&one, "alpha > -1")?;
            require(!x.is_zero(), "x != 0")?;
            Kind::LaguerreMoments { alpha, x }
        }
        FamilyId::MeixnerMoments => {
            let (beta, c, x) = (g("beta"), g("c"), g("x"));
            require(beta > one, "beta > 1")?;
            require(c > zero && c < one, "0 < c < 1")?;
            require(!(x.is_integer() && !x.is_negative()), "x not a non-negative integer")?;
            Kind::MeixnerMoments { beta, c, x }
        }
        FamilyId::MeixnerPollaczekMoments => {
            let (lambda, phi_over_pi, x) = (g("lambda"), g("phi_over_pi"), g("x"));
            require(lambda > zero, "lambda > 0")?;
            require(phi_over_pi > zero && phi_over_pi < one, "0 < phi/pi < 1")?;
            Kind::MeixnerPollaczekMoments { lambda, phi_over_pi, x }
        }
        FamilyId::GegenbauerMoments => {
            let (nu, x) = (g("nu"), g("x"));
            require(nu > rat(1, 2), "nu > 1/2")?;
            require(&x * &x != one, "x^2 != 1")?;
            Kind::GegenbauerMoments { nu, x }
        }
        FamilyId::Derangement => {
            let (alpha, x) = (g("alpha"), g("x"));
            require(!x.is_zero(), "x != 0")?;
            let mut inner = Params::new();
            inner.insert("alpha".into(), alpha);
            let inner = make_family(FamilyId::Laguerre, &inner)?;
            let a = x.recip()?;
            Kind::Affine { inner: Box::new(inner), b: a.clone(), a }
        }
        FamilyId::Affine => {
            let (alpha, a, b) = (g("alpha"), g("a"), g("b"));
            require(!a.is_zero(), "a != 0")?;
            let mut inner = Params::new();
            inner.insert("alpha".into(), alpha);
            let inner = make_family(FamilyId::Laguerre, &inner)?;
            Kind::Affine { inner: Box::new(inner), a, b }
        }
    };
    let translation = match &kind {
        Kind::LittleQJacobi { q, .. } | Kind::BigQJacobi { q, .. } | Kind::AlSalamCarlitz { q, .. } => {
            TranslationKind::QTranslation { q: q.clone() }
        }
        Kind::Affine { inner, a, b } => {
            TranslationKind::Affine { a: a.clone(), b: b.clone(), inner: Box::new(inner.translation.clone()) }
        }
        _ => TranslationKind::Classical,
    };
    let spec = FamilySpec { id, params: full, kind, translation };
    spec.check_regular(24)?;
    Ok(spec)
}

/// Wrap any classical family in the affine change of variable `x ↦ ax + b`.
pub fn affine_of(inner: FamilySpec, a: Q, b: Q) -> Result<FamilySpec, Error> {
    require(!a.is_zero(), "a != 0")?;
    if inner.normalization() != Normalization::Factorial {
        return Err(bad("the affine transform needs a family with n! normalisation"));
    }
    let mut params = inner.params.clone();
    params.insert("a".into(), a.clone());
    params.insert("b".into(), b.clone());
    let translation = TranslationKind::Affine { a: a.clone(), b: b.clone(), inner: Box::new(inner.translation.clone()) };
    Ok(FamilySpec { id: FamilyId::Affine, params, kind: Kind::Affine { inner: Box::new(inner), a, b }, translation })
}

impl FamilySpec {
    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn translation(&self) -> &TranslationKind {
        &self.translation
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.kind
    }

    /// The base q of a q-family.
    pub fn q(&self) -> Option<&Q> {
        match &self.kind {
            Kind::LittleQJacobi { q, .. }
            | Kind::BigQJacobi { q, .. }
            | Kind::AlSalamCarlitz { q, .. }
            | Kind::QUltraspherical { q, .. }
            | Kind::QUltraBeta0 { q }
            | Kind::AskeyWilsonSlice { q, .. } => Some(q),
            _ => None,
        }
    }

    pub fn normalization(&self) -> Normalization {
        match &self.kind {
            Kind::LittleQJacobi { q, .. } | Kind::BigQJacobi { q, .. } | Kind::AlSalamCarlitz { q, .. } => {
                Normalization::QFactorial(q.clone())
            }
            _ => Normalization::Factorial,
        }
    }

    pub fn has_tilde(&self) -> bool {
        matches!(self.kind, Kind::LittleQJacobi { .. } | Kind::BigQJacobi { .. } | Kind::AlSalamCarlitz { .. })
    }

    /// True when `b_n`, `λ_n` and the tableau are available in exact arithmetic.
    pub fn is_exact(&self) -> bool {
        !matches!(self.kind, Kind::MeixnerPollaczekMoments { .. })
    }

    fn no_exact(&self) -> Error {
        Error::Unsupported(format!("{} has no exact recurrence coefficients (irrational parameters)", self.id))
    }

    /// `b_n`.
    pub fn b(&self, n: usize) -> Result<Q, Error> {
        match &self.kind {
            Kind::Ultraspherical { .. } | Kind::Hermite | Kind::QUltraspherical { .. } | Kind::QUltraBeta0 { .. } => {
                Ok(Q::zero())
            }
            Kind::Jacobi { alpha, beta } => classical::jacobi_b(alpha, beta, n),
            Kind::Laguerre { alpha } => Ok(Q::from(2 * n as i64 + 1) + alpha),
            Kind::Meixner { beta, c } => classical::meixner_b(beta, c, n),
            Kind::Charlier { a } => Ok(Q::from(n as i64) + a),
            Kind::MeixnerPollaczek { lambda, cot } => Ok(-(Q::from(n as i64) + lambda) * cot),
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_b(a, b, q, n),
            Kind::BigQJacobi { a, b, c, q } => qfamilies::big_b(a, b, c, q, n),
            Kind::AlSalamCarlitz { a, q } => Ok((Q::one() + a) * q.powu(n)),
            Kind::AskeyWilsonSlice { a, q } => qfamilies::aw_b(a, q, n),
            Kind::HermiteMoments { .. }
            | Kind::LaguerreMoments { .. }
            | Kind::MeixnerMoments { .. }
            | Kind::GegenbauerMoments { .. } => {
                // H_{n,n+1} = H_{n-1,n} + b_n
                let below = if n == 0 { Q::zero() } else { self.tableau_closed_form(n - 1, n)? };
                Ok(self.tableau_closed_form(n, n + 1)? - below)
            }
            Kind::MeixnerPollaczekMoments { .. } => Err(self.no_exact()),
            Kind::Affine { inner, a, b } => (inner.b(n)? - b).checked_div(a),
        }
    }

    /// `λ_n` for `n >= 1`.
    pub fn lambda(&self, n: usize) -> Result<Q, Error> {
        if n == 0 {
            return Err(bad("lambda_n is defined for n >= 1"));
        }
        let nq = Q::from(n as i64);
        match &self.kind {
            Kind::Ultraspherical { nu } => classical::ultra_lambda(nu, n),
            Kind::Jacobi { alpha, beta } => classical::jacobi_lambda(alpha, beta, n),
            Kind::Hermite => Ok(nq / Q::from(2)),
            Kind::Laguerre { alpha } => Ok(&nq * &(&nq + alpha)),
            Kind::Meixner { beta, c } => {
                let one_c = Q::one() - c;
                (&nq * &(&nq + beta - Q::one()) * c).checked_div(&(&one_c * &one_c))
            }
            Kind::Charlier { a } => Ok(a * &nq),
            Kind::MeixnerPollaczek { lambda, cot } => {
                Ok(&nq * &(&nq + &(lambda * &Q::from(2)) - Q::one()) * (Q::one() + cot * cot) / Q::from(4))
            }
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_lambda(a, b, q, n),
            Kind::BigQJacobi { a, b, c, q } => qfamilies::big_lambda(a, b, c, q, n),
            Kind::AlSalamCarlitz { a, q } => Ok(-a * q.powu(n - 1) * (Q::one() - q.powu(n))),
            Kind::QUltraspherical { beta, q } => qfamilies::q_ultra_lambda(beta, q, n),
            Kind::QUltraBeta0 { q } => Ok((Q::one() - q.powu(n)) / Q::from(4)),
            Kind::AskeyWilsonSlice { a, q } => qfamilies::aw_lambda(a, q, n),
            Kind::HermiteMoments { .. }
            | Kind::LaguerreMoments { .. }
            | Kind::MeixnerMoments { .. }
            | Kind::GegenbauerMoments { .. } => self.weight(n)?.checked_div(&self.weight(n - 1)?),
            Kind::MeixnerPollaczekMoments { .. } => Err(self.no_exact()),
            Kind::Affine { inner, a, .. } => inner.lambda(n)?.checked_div(&(a * a)),
        }
    }

    /// Coefficient of `Q_n(s) Q_n(t)` in the addition formula: the printed
    /// closed form where one exists, otherwise `λ_1⋯λ_n`.
    pub fn weight(&self, n: usize) -> Result<Q, Error> {
        match &self.kind {
            Kind::HermiteMoments { .. } => Ok(Q::factorial(n as u64) * Q::from(-2).powu(n)),
            Kind::LaguerreMoments { alpha, x } => moments::laguerre_weight(alpha, x, n),
            Kind::MeixnerMoments { beta, c, x } => moments::meixner_weight(beta, c, x, n),
            Kind::GegenbauerMoments { nu, x } => moments::gegenbauer_weight(nu, x, n),
            Kind::MeixnerPollaczekMoments { .. } => Err(self.no_exact()),
            Kind::Affine { inner, a, .. } if self.id == FamilyId::Derangement => {
                // n! (α+1)_n x^{2n} with x = 1/a
                let alpha = &inner.params["alpha"];
                let x = a.recip()?;
                Ok(Q::factorial(n as u64) * crate::scalar::pochhammer(&(alpha + &Q::one()), n) * x.powu(2 * n))
            }
            _ => self.lambda_product(n),
        }
    }

    /// `λ_1⋯λ_n` straight from the recurrence coefficients.
    pub fn lambda_product(&self, n: usize) -> Result<Q, Error> {
        (1..=n).try_fold(Q::one(), |acc, k| Ok(acc * self.lambda(k)?))
    }

    /// `b_0..b_n`, `λ_1..λ_n`.
    pub fn jfraction(&self, n: usize) -> Result<JFraction, Error> {
        let b = (0..=n).map(|k| self.b(k)).collect::<Result<Vec<_>, _>>()?;
        let l = (1..=n).map(|k| self.lambda(k)).collect::<Result<Vec<_>, _>>()?;
        JFraction::new(b, l)
    }

    pub fn tableau(&self, n: usize) -> Result<StieltjesTableau, Error> {
        tableau_from_jfraction(&self.jfraction(n)?, n)
    }

    /// `μ_0..μ_n`.
    pub fn moments(&self, n: usize) -> Result<Vec<Q>, Error> {
        Ok(self.tableau(n)?.moments())
    }

    fn check_regular(&self, depth: usize) -> Result<(), Error> {
        if !self.is_exact() {
            return Ok(());
        }
        for n in 1..=depth {
            match self.lambda(n) {
                Ok(l) if l.is_zero() => return Err(bad(format!("lambda_{n} vanishes for these parameters"))),
                Ok(_) => {}
                Err(Error::DivisionByZero) => return Err(bad(format!("lambda_{n} has a vanishing denominator"))),
                Err(e) => return Err(e),
            }
            if let Err(Error::DivisionByZero) = self.b(n - 1) {
                return Err(bad(format!("b_{} has a vanishing denominator", n - 1)));
            }
        }
        Ok(())
    }

    /// Exact Taylor coefficients of `Q_j` to degree `n`.
    pub fn q_series(&self, j: usize, n: usize) -> Result<RationalSeries, Error> {
        match &self.kind {
            Kind::Ultraspherical { nu } => classical::ultra_series(nu, j, n),
            Kind::Jacobi { alpha, beta } => classical::jacobi_series(alpha, beta, j, n, false),
            Kind::Hermite => classical::hermite_series(j, n),
            Kind::Laguerre { alpha } => classical::laguerre_series(alpha, j, n),
            Kind::Meixner { beta, c } => classical::meixner_series(beta, c, j, n),
            Kind::Charlier { a } => classical::charlier_series(a, j, n),
            Kind::MeixnerPollaczek { lambda, cot } => classical::mp_series(lambda, cot, j, n),
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_series(a, b, q, j, n, false),
            Kind::BigQJacobi { a, b, c, q } => qfamilies::big_series(a, b, c, q, j, n),
            Kind::AlSalamCarlitz { a, q } => qfamilies::asc_series(a, q, j, n),
            Kind::QUltraspherical { beta, q } => qfamilies::q_ultra_series(beta, q, j, n),
            Kind::QUltraBeta0 { q } => qfamilies::beta0_series(q, j, n),
            Kind::AskeyWilsonSlice { a, q } => qfamilies::aw_series(a, q, j, n),
            Kind::HermiteMoments { x } => moments::hermite_series(x, j, n),
            Kind::LaguerreMoments { alpha, x } => moments::laguerre_series(alpha, x, j, n),
            Kind::MeixnerMoments { beta, c, x } => moments::meixner_series(beta, c, x, j, n),
            Kind::GegenbauerMoments { nu, x } => moments::gegenbauer_series(nu, x, j, n),
            Kind::MeixnerPollaczekMoments { .. } => Err(self.no_exact()),
            Kind::Affine { inner, a, b } => affine::series(inner, a, b, j, n),
        }
    }

    /// Alternative closed form of `Q_j`, where one is implemented
    /// (Kummer-transformed Jacobi; the `1φ1/(t;q)_∞` little q-Jacobi form).
    pub fn q_series_alt(&self, j: usize, n: usize) -> Result<RationalSeries, Error> {
        match &self.kind {
            Kind::Jacobi { alpha, beta } => classical::jacobi_series(alpha, beta, j, n, true),
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_series(a, b, q, j, n, true),
            _ => Err(Error::Unsupported(format!("{} has no alternative form", self.id))),
        }
    }

    /// Exact Taylor coefficients of `Q̃_j` to degree `n`.
    pub fn q_tilde_series(&self, j: usize, n: usize) -> Result<RationalSeries, Error> {
        match &self.kind {
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_tilde_series(a, b, q, j, n),
            Kind::BigQJacobi { a, b, c, q } => qfamilies::big_tilde_series(a, b, c, q, j, n),
            Kind::AlSalamCarlitz { a, q } => qfamilies::asc_tilde_series(a, q, j, n),
            _ => Err(Error::UnsupportedTilde(self.id.to_string())),
        }
    }

    /// Numeric `Q_j(t)` from the closed form.
    pub fn q_function(&self, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
        if t.is_zero() {
            return Ok(numeric::at_origin(j));
        }
        match &self.kind {
            Kind::Ultraspherical { nu } => classical::ultra_eval(nu, j, t, ctx),
            Kind::Jacobi { alpha, beta } => classical::jacobi_eval(alpha, beta, j, t, ctx, false),
            Kind::Hermite => classical::hermite_eval(j, t, ctx),
            Kind::Laguerre { alpha } => classical::laguerre_eval(alpha, j, t, ctx),
            Kind::Meixner { beta, c } => classical::meixner_eval(beta, c, j, t, ctx),
            Kind::Charlier { a } => classical::charlier_eval(a, j, t, ctx),
            Kind::MeixnerPollaczek { lambda, cot } => classical::mp_eval(lambda, cot, j, t, ctx),
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_eval(a, b, q, j, t, ctx, false),
            Kind::BigQJacobi { a, b, c, q } => qfamilies::big_eval(a, b, c, q, j, t, ctx),
            Kind::AlSalamCarlitz { a, q } => qfamilies::asc_eval(a, q, j, t, ctx),
            Kind::QUltraspherical { beta, q } => qfamilies::q_ultra_eval(beta, q, j, t, ctx),
            Kind::QUltraBeta0 { q } => qfamilies::beta0_eval(q, j, t, ctx),
            Kind::AskeyWilsonSlice { a, q } => qfamilies::aw_eval(a, q, j, t, ctx),
            Kind::HermiteMoments { x } => moments::hermite_eval(x, j, t, ctx),
            Kind::LaguerreMoments { alpha, x } => moments::laguerre_eval(alpha, x, j, t, ctx),
            Kind::MeixnerMoments { beta, c, x } => moments::meixner_eval(beta, c, x, j, t, ctx),
            Kind::GegenbauerMoments { nu, x } => moments::gegenbauer_eval(nu, x, j, t, ctx),
            Kind::MeixnerPollaczekMoments { .. } => Err(Error::Unsupported(
                "meixner_pollaczek_moments has complex Q_n; use the mp_moments theorem".into(),
            )),
            Kind::Affine { inner, a, b } => affine::eval(inner, a, b, j, t, ctx),
        }
    }

    /// Numeric alternative form (see [`FamilySpec::q_series_alt`]).
    pub fn q_function_alt(&self, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
        if t.is_zero() {
            return Ok(numeric::at_origin(j));
        }
        match &self.kind {
            Kind::Jacobi { alpha, beta } => classical::jacobi_eval(alpha, beta, j, t, ctx, true),
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_eval(a, b, q, j, t, ctx, true),
            Kind::BigQJacobi { .. } => Err(Error::Unsupported("big_q_jacobi alternatives are tilde forms".into())),
            _ => Err(Error::Unsupported(format!("{} has no alternative form", self.id))),
        }
    }

    /// Numeric `Q̃_j(t)`.
    pub fn q_tilde_function(&self, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
        if !self.has_tilde() {
            return Err(Error::UnsupportedTilde(self.id.to_string()));
        }
        if t.is_zero() {
            return Ok(numeric::at_origin(j));
        }
        match &self.kind {
            Kind::LittleQJacobi { a, b, q } => qfamilies::little_tilde_eval(a, b, q, j, t, ctx),
            Kind::BigQJacobi { a, b, c, q } => qfamilies::big_tilde_eval(a, b, c, q, j, t, ctx, false),
            Kind::AlSalamCarlitz { a, q } => qfamilies::asc_tilde_eval(a, q, j, t, ctx),
            _ => unreachable!("has_tilde checked"),
        }
    }

    /// Second closed form of the big q-Jacobi `Q̃_j` (the `2φ2` one).
    pub fn q_tilde_function_alt(&self, j: usize, t: &BigFloat, ctx: &PrecisionContext) -> Result<SeriesValue, Error> {
        match &self.kind {
            Kind::BigQJacobi { a, b, c, q } => {
                if t.is_zero() {
                    return Ok(numeric::at_origin(j));
                }
                qfamilies::big_tilde_eval(a, b, c, q, j, t, ctx, true)
            }
            _ => Err(Error::Unsupported(format!("{} has no alternative tilde form", self.id))),
        }
    }

    /// Closed-form tableau entry `H_{i,n}` (polynomials-as-moments families).
    pub fn tableau_closed_form(&self, i: usize, n: usize) -> Result<Q, Error> {
        if n < i {
            return Ok(Q::zero());
        }
        let m = n - i;
        match &self.kind {
            Kind::HermiteMoments { x } => Ok(moments::hermite_h(i, m, x)),
            Kind::LaguerreMoments { alpha, x } => Ok(moments::laguerre_h(alpha, x, i, m)),
            Kind::MeixnerMoments { beta, c, x } => Ok(moments::meixner_h(beta, c, x, i, m)),
            Kind::GegenbauerMoments { nu, x } => Ok(moments::gegenbauer_h(nu, x, i, m)),
            _ => Err(Error::Unsupported(format!("{} has no closed-form tableau", self.id))),
        }
    }

    /// Names of the functions this family provides (for the catalog).
    pub fn functions(&self) -> Vec<&'static str> {
        let mut f = Vec::new();
        if self.is_exact() {
            f.extend(["b", "lambda", "tableau", "q_series"]);
        }
        if !matches!(self.kind, Kind::MeixnerPollaczekMoments { .. }) {
            f.push("q_function");
        }
        if self.has_tilde() {
            f.extend(["q_tilde_series", "q_tilde_function"]);
        }
        if matches!(self.kind, Kind::Jacobi { .. } | Kind::LittleQJacobi { .. }) {
            f.push("q_function_alt");
        }
        if matches!(self.kind, Kind::BigQJacobi { .. }) {
            f.push("q_tilde_function_alt");
        }
        if self.tableau_closed_form(0, 0).is_ok() {
            f.push("tableau_closed_form");
        }
        f
    }
}

/// `q^{C(n,2)}` (exact).
pub(crate) fn q_tri(q: &Q, n: usize) -> Q {
    q.pow(tri(n)).expect("q != 0")
}

/// One catalog row.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: FamilyId,
    pub params: Vec<ParamInfo>,
    pub functions: Vec<&'static str>,
    pub translation: &'static str,
    pub normalization: &'static str,
}

pub fn catalog() -> Vec<CatalogEntry> {
    FamilyId::ALL
        .into_iter()
        .map(|id| {
            let f = make_family(id, &Params::new()).expect("catalog defaults are valid");
            CatalogEntry {
                id,
                params: id.params(),
                functions: f.functions(),
                translation: f.translation().name(),
                normalization: match f.normalization() {
                    Normalization::Factorial => "n!",
                    Normalization::QFactorial(_) => "(q;q)_n",
                },
            }
        })
        .collect()
}

/// Parse `k=v` pairs into a parameter map.
pub fn parse_params<'a>(pairs: impl IntoIterator<Item = &'a str>) -> Result<Params, Error> {
    let mut out = Params::new();
    for pair in pairs {
        let (k, v) = pair.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {pair:?}")))?;
        out.insert(k.trim().to_string(), v.trim().parse()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
