//! The verification harness. Every addition theorem and auxiliary identity is
//! a registry entry that evaluates its left side and a truncated right side
//! and reports how well they agree.
//!
//! Numeric entries compare multiprecision values against a relative
//! tolerance; exact entries compare coefficient tables (or determinants,
//! polynomials) in rational arithmetic and pass only on equality.

mod exact;
mod identities;
mod numeric;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::families::Params;
use crate::scalar::{BigFloat, ExactRational, PrecisionContext};

type Q = ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Theorem,
    Identity,
}

/// A reported quantity: multiprecision for numeric entries, `p/q` for exact ones.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Float(BigFloat),
    Exact(Q),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Float(f) => f.to_f64(),
            Value::Exact(q) => q.to_f64(),
        }
    }

    pub fn to_float(&self, bits: u32) -> BigFloat {
        match self {
            Value::Float(f) => f.with_prec(bits),
            Value::Exact(q) => BigFloat::from_rational(q, bits),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub s: Option<Q>,
    pub t: Option<Q>,
    pub mode: Mode,
    pub lhs: Value,
    pub rhs_partial: Value,
    pub n_terms: usize,
    pub abs_error: Value,
    pub rel_error: Value,
    pub tail_estimate: Value,
    pub pass: bool,
    /// Why the case could not be evaluated, if it could not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// One registered theorem or identity with its default parameter set.
pub struct Entry {
    pub id: &'static str,
    pub kind: EntryKind,
    pub mode: Mode,
    pub summary: &'static str,
    /// Accepted parameters; `None` marks an optional one whose absence
    /// means "sweep the built-in set".
    params: &'static [(&'static str, Option<&'static str>)],
    /// Default `(s, t)`, for entries evaluated at a point pair.
    st: Option<(&'static str, &'static str)>,
    /// Default truncation (numeric) or degree (exact).
    n: usize,
    /// Gamma/Bessel-path entries are judged at 100× the context tolerance.
    relaxed: bool,
    run: fn(&Case, &PrecisionContext) -> Result<Outcome, Error>,
}

impl Entry {
    pub fn param_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.params.iter().map(|(k, _)| *k)
    }

    pub fn default_n(&self) -> usize {
        self.n
    }

    pub fn takes_point(&self) -> bool {
        self.st.is_some()
    }
}

/// Fully resolved inputs of one run.
pub(crate) struct Case {
    params: Params,
    s: Option<Q>,
    t: Option<Q>,
    n: usize,
}

impl Case {
    fn get(&self, k: &str) -> &Q {
        &self.params[k]
    }

    fn opt(&self, k: &str) -> Option<&Q> {
        self.params.get(k)
    }

    /// Subset of the parameters, for handing to `make_family`.
    fn subset(&self, keys: &[&str]) -> Params {
        keys.iter().filter_map(|k| self.params.get(*k).map(|v| (k.to_string(), v.clone()))).collect()
    }

    fn s(&self, ctx: &PrecisionContext) -> BigFloat {
        ctx.rational(self.s.as_ref().expect("entry has a point"))
    }

    fn t(&self, ctx: &PrecisionContext) -> BigFloat {
        ctx.rational(self.t.as_ref().expect("entry has a point"))
    }

    fn seed(&self) -> u64 {
        self.opt("seed").and_then(|v| v.to_i64()).unwrap_or(0) as u64
    }
}

/// What a run produced, before it is judged.
pub(crate) enum Outcome {
    Numeric(NumericOutcome),
    /// `(lhs, rhs)` pairs that must agree exactly.
    Exact { pairs: Vec<(Q, Q)>, n_terms: usize, notes: Vec<(String, String)> },
}

pub(crate) struct NumericOutcome {
    lhs: BigFloat,
    rhs: BigFloat,
    n_terms: usize,
    tail: BigFloat,
    /// Additional relative discrepancy not visible in `lhs - rhs` (the
    /// imaginary part of a right side whose left side is real).
    residual: BigFloat,
    /// Extra report fields (e.g. the worst sweep point).
    notes: Vec<(String, String)>,
}

impl NumericOutcome {
    fn rel_error(&self) -> BigFloat {
        &relative(&self.lhs, &self.rhs) + &self.residual
    }
}

fn relative(lhs: &BigFloat, rhs: &BigFloat) -> BigFloat {
    let d = (lhs - rhs).abs();
    if lhs.is_zero() { d } else { &d / &lhs.abs() }
}

static REGISTRY: &[Entry] = &[
    Entry {
        id: "affine",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "affine change of variable: Q̄_0(s+t) = Σ λ_1⋯λ_n a^{-2n} Q̄_n(s) Q̄_n(t) (derangement family)",
        params: &[("alpha", Some("1/2")), ("x", Some("1/3"))],
        st: Some(("1/5", "3/10")),
        n: 25,
        relaxed: false,
        run: numeric::affine,
    },
    Entry {
        id: "asc_noncomm",
        kind: EntryKind::Theorem,
        mode: Mode::Exact,
        summary: "Al-Salam–Carlitz, st = qts: S_s Q_0(t) = Σ λ_1⋯λ_n Q_n(t) Q_n(s), coefficientwise",
        params: &[("q", Some("1/2")), ("a", Some("1/3"))],
        st: None,
        n: 12,
        relaxed: false,
        run: exact::asc_noncomm,
    },
    Entry {
        id: "asc_qtrans",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "Al-Salam–Carlitz q-translation identity",
        params: &[("q", Some("1/2")), ("a", Some("1/3"))],
        st: Some(("1/20", "1/10")),
        n: 25,
        relaxed: false,
        run: numeric::asc_qtrans,
    },
    Entry {
        id: "askey_wilson",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "Askey–Wilson slice (a, √q, -√q, -q): Q_0(s+t) = Σ (q², a²q;q)_{2n}/(4^n (aq, aq²;q)_{2n}) Q_n(s) Q_n(t)",
        params: &[("q", Some("1/2")), ("a", Some("1/3"))],
        st: Some(("1/5", "1/5")),
        n: 20,
        relaxed: true,
        run: numeric::askey_wilson,
    },
    Entry {
        id: "bessel_1f1_link",
        kind: EntryKind::Identity,
        mode: Mode::Numeric,
        summary: "e^{-x} 1F1(ν+1/2; 2ν+1; 2x) = Γ(ν+1)(2/x)^ν I_ν(x)",
        params: &[("nu", Some("3/2")), ("x", Some("2/5"))],
        st: None,
        n: 0,
        relaxed: true,
        run: identities::bessel_1f1_link,
    },
    Entry {
        id: "bessel_plus",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "J_ν(x+y)/(x+y)^ν = Γ(ν)/(xy/2)^ν Σ (ν+n)(-1)^n (2ν)_n/n! J_{ν+n}(x) J_{ν+n}(y)  (s = y, t = x)",
        params: &[("nu", None)],
        st: Some(("3/10", "1/2")),
        n: 25,
        relaxed: true,
        run: numeric::bessel_plus,
    },
    Entry {
        id: "bessel_reduction",
        kind: EntryKind::Identity,
        mode: Mode::Numeric,
        summary: "(z/2)^{μ-ν} J_ν(z) as a series in J_{μ+2n}(z)",
        params: &[("mu", Some("1")), ("nu", Some("2")), ("z", Some("7/10"))],
        st: None,
        n: 25,
        relaxed: true,
        run: identities::bessel_reduction,
    },
    Entry {
        id: "big_qj",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "big q-Jacobi q-translation addition formula",
        params: &[("q", Some("1/2")), ("a", Some("1/3")), ("b", Some("1/4")), ("c", Some("1/5"))],
        st: Some(("1/20", "1/10")),
        n: 25,
        relaxed: false,
        run: numeric::big_qj,
    },
    Entry {
        id: "classical_generic",
        kind: EntryKind::Theorem,
        mode: Mode::Exact,
        summary: "Q_0(x+y) = Σ λ_1⋯λ_n Q_n(x) Q_n(y) for a seeded random rational J-fraction",
        params: &[("seed", Some("0"))],
        st: None,
        n: 12,
        relaxed: false,
        run: exact::classical_generic,
    },
    Entry {
        id: "conf_hyp_1f1",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "1F1(α+1; α+β+2; t+s) as a bilinear series in 1F1(α+n+1; α+β+2n+2; ·)",
        params: &[("alpha", Some("1/2")), ("beta", Some("1/3"))],
        st: Some(("1/5", "3/10")),
        n: 25,
        relaxed: false,
        run: numeric::conf_hyp_1f1,
    },
    Entry {
        id: "connection_rogers",
        kind: EntryKind::Identity,
        mode: Mode::Exact,
        summary: "connection formula C_n(x;γ|q) in terms of C_{n-2k}(x;β|q), polynomial coefficients",
        params: &[("beta", Some("1/3")), ("gamma", Some("1/5")), ("q", Some("1/2"))],
        st: None,
        n: 8,
        relaxed: false,
        run: identities::connection_rogers,
    },
    Entry {
        id: "gegenbauer_moments",
        kind: EntryKind::Theorem,
        mode: Mode::Exact,
        summary: "ultraspherical polynomials C_n^ν(x) as moments, coefficientwise",
        params: &[("nu", Some("3/2")), ("x", Some("1/2"))],
        st: None,
        n: 12,
        relaxed: false,
        run: exact::gegenbauer_moments,
    },
    Entry {
        id: "hankel_affine",
        kind: EntryKind::Identity,
        mode: Mode::Exact,
        summary: "Hankel determinants under x ↦ ax+b: D̄_n = a^{-n(n+1)} D_n (derangement family)",
        params: &[("alpha", Some("1/2")), ("x", Some("1/3"))],
        st: None,
        n: 5,
        relaxed: false,
        run: identities::hankel_affine,
    },
    Entry {
        id: "hankel_gegenbauer",
        kind: EntryKind::Identity,
        mode: Mode::Exact,
        summary: "det((i+j)!/(2ν)_{i+j} C_{i+j}^ν(x)) in closed form",
        params: &[("nu", None), ("x", None)],
        st: None,
        n: 5,
        relaxed: false,
        run: identities::hankel_gegenbauer,
    },
    Entry {
        id: "heine_transform",
        kind: EntryKind::Identity,
        mode: Mode::Numeric,
        summary: "Heine: 2φ1(a,b;c;q,z) = (b,az;q)_∞/(c,z;q)_∞ 2φ1(c/b,z;az;q,b), seeded parameters",
        params: &[("seed", Some("0"))],
        st: None,
        n: 0,
        relaxed: false,
        run: identities::heine_transform,
    },
    Entry {
        id: "hermite_convolution",
        kind: EntryKind::Identity,
        mode: Mode::Exact,
        summary: "H_{m+n}(x)/(m!n!) = Σ_k (-2)^k/k! H_{m-k}(x)/(m-k)! H_{n-k}(x)/(n-k)!",
        params: &[("x", None)],
        st: None,
        n: 8,
        relaxed: false,
        run: identities::hermite_convolution,
    },
    Entry {
        id: "hermite_moments",
        kind: EntryKind::Theorem,
        mode: Mode::Exact,
        summary: "Hermite polynomials H_n(x) as moments: Q_0(s+t) = Σ n!(-2)^n Q_n(t) Q_n(s), coefficientwise",
        params: &[("x", Some("1"))],
        st: None,
        n: 12,
        relaxed: false,
        run: exact::hermite_moments,
    },
    Entry {
        id: "laguerre_moments",
        kind: EntryKind::Theorem,
        mode: Mode::Exact,
        summary: "Laguerre polynomials L_n^(α)(x) as moments, coefficientwise",
        params: &[("alpha", Some("1/2")), ("x", Some("1/2"))],
        st: None,
        n: 12,
        relaxed: false,
        run: exact::laguerre_moments,
    },
    Entry {
        id: "little_qj",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "little q-Jacobi q-translation addition formula (2φ1 × 1φ1 form)",
        params: &[("q", Some("1/2")), ("a", Some("1/3")), ("b", Some("1/4"))],
        st: Some(("1/20", "1/10")),
        n: 25,
        relaxed: false,
        run: numeric::little_qj,
    },
    Entry {
        id: "little_qj_alt",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "little q-Jacobi addition formula (1φ1 × 1φ1 form)",
        params: &[("q", Some("1/2")), ("a", Some("1/3")), ("b", Some("1/4"))],
        st: Some(("1/20", "1/10")),
        n: 25,
        relaxed: false,
        run: numeric::little_qj_alt,
    },
    Entry {
        id: "meixner_moments",
        kind: EntryKind::Theorem,
        mode: Mode::Exact,
        summary: "Meixner polynomials M_n(x; β, c) as moments, coefficientwise",
        params: &[("beta", Some("5/2")), ("c", Some("1/3")), ("x", Some("1/2"))],
        st: None,
        n: 12,
        relaxed: false,
        run: exact::meixner_moments,
    },
    Entry {
        id: "mp_moments",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "Meixner–Pollaczek polynomials as moments (complex weights), φ = π·phi_over_pi",
        params: &[("lambda", Some("1")), ("phi_over_pi", Some("1/3")), ("x", Some("1/2"))],
        st: Some(("1/5", "3/10")),
        n: 25,
        relaxed: true,
        run: numeric::mp_moments,
    },
    Entry {
        id: "ogf_variant",
        kind: EntryKind::Theorem,
        mode: Mode::Exact,
        summary: "(x h_0(x) - y h_0(y))/(x - y) = Σ λ_1⋯λ_n h_n(x) h_n(y) for a seeded random J-fraction",
        params: &[("seed", Some("0"))],
        st: None,
        n: 12,
        relaxed: false,
        run: exact::ogf_variant,
    },
    Entry {
        id: "phi21_phi22",
        kind: EntryKind::Identity,
        mode: Mode::Numeric,
        summary: "2φ1(a,b;c;q,z) = (az;q)_∞/(z;q)_∞ 2φ2(a, c/b; c, az; q, bz), seeded parameters",
        params: &[("seed", Some("0"))],
        st: None,
        n: 0,
        relaxed: false,
        run: identities::phi21_phi22,
    },
    Entry {
        id: "plane_wave_cheby",
        kind: EntryKind::Identity,
        mode: Mode::Numeric,
        summary: "e^{xy} = (2/y) Σ (n+1) I_{n+1}(y) U_n(x)",
        params: &[("x", Some("1/2")), ("y", Some("2/5"))],
        st: None,
        n: 25,
        relaxed: true,
        run: identities::plane_wave_cheby,
    },
    Entry {
        id: "plane_wave_jacobi",
        kind: EntryKind::Identity,
        mode: Mode::Numeric,
        summary: "plane-wave expansion of e^{xy} in Jacobi polynomials",
        params: &[("alpha", Some("1/2")), ("beta", Some("1/3")), ("x", Some("1/2")), ("y", Some("2/5"))],
        st: None,
        n: 25,
        relaxed: true,
        run: identities::plane_wave_jacobi,
    },
    Entry {
        id: "plane_wave_ultra",
        kind: EntryKind::Identity,
        mode: Mode::Numeric,
        summary: "e^{xy} = Γ(ν)(y/2)^{-ν} Σ (ν+n) I_{ν+n}(y) C_n^ν(x)",
        params: &[("nu", Some("3/2")), ("x", Some("1/2")), ("y", Some("2/5"))],
        st: None,
        n: 25,
        relaxed: true,
        run: identities::plane_wave_ultra,
    },
    Entry {
        id: "q_ultra",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "continuous q-ultraspherical: Q_0(s+t) = Σ (q,β²;q)_n/(4^n (β,qβ;q)_n) Q_n(s) Q_n(t)",
        params: &[("q", Some("1/2")), ("beta", Some("1/3"))],
        st: Some(("1/5", "1/5")),
        n: 20,
        relaxed: true,
        run: numeric::q_ultra,
    },
    Entry {
        id: "q_ultra_beta0",
        kind: EntryKind::Theorem,
        mode: Mode::Numeric,
        summary: "β → 0 limit: F_0(s+t) = Σ (q;q)_n/4^n F_n(s) F_n(t)",
        params: &[("q", Some("1/2"))],
        st: Some(("1/5", "1/5")),
        n: 20,
        relaxed: true,
        run: numeric::q_ultra_beta0,
    },
];

/// All registered entries, sorted by id.
pub fn registry() -> &'static [Entry] {
    REGISTRY
}

pub fn find_entry(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// Run-time overrides applied on top of an entry's defaults.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub params: Params,
    pub s: Option<Q>,
    pub t: Option<Q>,
    pub n: Option<usize>,
    /// Seed for entries that draw random instances (ignored by the others).
    pub seed: Option<u64>,
}

fn resolve(e: &Entry, o: &Overrides) -> Result<Case, Error> {
    let mut params = Params::new();
    for (k, d) in e.params {
        if let Some(d) = d {
            params.insert(k.to_string(), d.parse()?);
        }
    }
    for (k, v) in &o.params {
        if !e.params.iter().any(|(name, _)| name == k) {
            return Err(Error::InvalidParams(format!("{} has no parameter {k:?}", e.id)));
        }
        params.insert(k.clone(), v.clone());
    }
    if let (Some(seed), true) = (o.seed, params.contains_key("seed")) {
        params.insert("seed".into(), Q::from(seed as i64));
    }
    let (s, t) = match e.st {
        Some((s, t)) => (Some(o.s.clone().unwrap_or(s.parse()?)), Some(o.t.clone().unwrap_or(t.parse()?))),
        None => {
            if o.s.is_some() || o.t.is_some() {
                return Err(Error::InvalidParams(format!("{} does not take s, t", e.id)));
            }
            (None, None)
        }
    };
    Ok(Case { params, s, t, n: o.n.unwrap_or(e.n), })
}

impl Overrides {
    /// The part of these overrides that `e` accepts.
    pub fn restricted_to(&self, e: &Entry) -> Overrides {
        let point = e.takes_point();
        Overrides {
            params: self.params.iter().filter(|(k, _)| e.param_names().any(|n| n == k.as_str())).map(|(k, v)| (k.clone(), v.clone())).collect(),
            s: self.s.clone().filter(|_| point),
            t: self.t.clone().filter(|_| point),
            n: self.n,
            seed: self.seed,
        }
    }

    /// Overrides `e` would not accept: unknown parameter names, and `s`/`t`
    /// for an entry evaluated without a point.
    pub fn rejected_by(&self, e: &Entry) -> Vec<String> {
        let mut out: Vec<String> = self.params.keys().filter(|k| !e.param_names().any(|n| n == k.as_str())).cloned().collect();
        if !e.takes_point() {
            out.extend(self.s.iter().map(|_| "s".to_string()));
            out.extend(self.t.iter().map(|_| "t".to_string()));
        }
        out
    }
}

/// Evaluate one entry and judge it.
pub fn run_entry(e: &Entry, o: &Overrides, ctx: &PrecisionContext) -> Result<VerificationReport, Error> {
    let case = resolve(e, o)?;
    let outcome = (e.run)(&case, ctx)?;
    let mut params: BTreeMap<String, String> = case.params.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
    let bits = ctx.precision_bits;
    let report = |params, lhs, rhs, n_terms, abs, rel, tail, pass| VerificationReport {
        id: e.id.to_string(),
        params,
        s: case.s.clone(),
        t: case.t.clone(),
        mode: e.mode,
        lhs,
        rhs_partial: rhs,
        n_terms,
        abs_error: abs,
        rel_error: rel,
        tail_estimate: tail,
        pass,
        error: None,
    };
    Ok(match outcome {
        Outcome::Numeric(o) => {
            let tol = if e.relaxed { &ctx.rel_tolerance * &BigFloat::from_i64(100) } else { ctx.rel_tolerance.clone() };
            let rel = o.rel_error();
            let pass = rel.is_finite() && rel <= tol;
            params.extend(o.notes.iter().cloned());
            let f = |x: &BigFloat| Value::Float(x.with_prec(bits));
            report(
                params,
                f(&o.lhs),
                f(&o.rhs),
                o.n_terms,
                f(&(&o.lhs - &o.rhs).abs()),
                f(&rel),
                f(&o.tail),
                pass,
            )
        }
        Outcome::Exact { pairs, n_terms, notes } => {
            let lhs: Q = pairs.iter().map(|(l, _)| l.clone()).sum();
            let rhs: Q = pairs.iter().map(|(_, r)| r.clone()).sum();
            let mut abs = Q::zero();
            let mut scale = Q::zero();
            for (l, r) in &pairs {
                let d = (l - r).abs();
                if d > abs {
                    abs = d;
                }
                if l.abs() > scale {
                    scale = l.abs();
                }
            }
            let rel = if scale.is_zero() { abs.clone() } else { &abs / &scale };
            let pass = abs.is_zero();
            params.insert("checked".into(), pairs.len().to_string());
            params.extend(notes);
            report(params, Value::Exact(lhs), Value::Exact(rhs), n_terms, Value::Exact(abs), Value::Exact(rel), Value::Exact(Q::zero()), pass)
        }
    })
}

fn run_kind(
    kind: EntryKind,
    id: &str,
    o: &Overrides,
    ctx: &PrecisionContext,
) -> Result<VerificationReport, Error> {
    let e = find_entry(id).filter(|e| e.kind == kind).ok_or_else(|| Error::UnknownTheorem(id.to_string()))?;
    run_entry(e, o, ctx)
}

/// Run the addition theorem `id`; unspecified parameters take the registry
/// defaults.
pub fn verify_theorem(
    id: &str,
    params: &Params,
    s: Option<Q>,
    t: Option<Q>,
    n: Option<usize>,
    ctx: &PrecisionContext,
) -> Result<VerificationReport, Error> {
    let o = Overrides { params: params.clone(), s, t, n, seed: None };
    run_kind(EntryKind::Theorem, id, &o, ctx)
}

/// Run the identity `id`.
pub fn verify_identity(id: &str, params: &Params, ctx: &PrecisionContext) -> Result<VerificationReport, Error> {
    let o = Overrides { params: params.clone(), ..Default::default() };
    run_kind(EntryKind::Identity, id, &o, ctx)
}

/// Entries whose id matches the glob `pattern` (`*`, `?`, `[...]`); all of
/// them for `None`.
pub fn matching(pattern: Option<&str>) -> Result<Vec<&'static Entry>, Error> {
    let pat = match pattern {
        None => return Ok(REGISTRY.iter().collect()),
        Some(p) => glob::Pattern::new(p).map_err(|e| Error::Parse(format!("bad id pattern {p:?}: {e}")))?,
    };
    Ok(REGISTRY.iter().filter(|e| pat.matches(e.id)).collect())
}

/// Run every matching entry (in parallel) at its defaults plus whatever part
/// of `o` it accepts. Failures are recorded in the reports, never raised;
/// output is sorted by id.
pub fn run_suite_with(pattern: Option<&str>, o: &Overrides, ctx: &PrecisionContext) -> Vec<VerificationReport> {
    let entries = matching(pattern).unwrap_or_default();
    let mut out: Vec<VerificationReport> = entries
        .par_iter()
        .map(|e| {
            let o = o.restricted_to(e);
            run_entry(e, &o, ctx).unwrap_or_else(|err| failed(e, &o, &err))
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

pub fn run_suite(pattern: Option<&str>, ctx: &PrecisionContext) -> Vec<VerificationReport> {
    run_suite_with(pattern, &Overrides::default(), ctx)
}

fn failed(e: &Entry, o: &Overrides, err: &Error) -> VerificationReport {
    let nan = || Value::Float(BigFloat::zero());
    VerificationReport {
        id: e.id.to_string(),
        params: o.params.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
        s: o.s.clone(),
        t: o.t.clone(),
        mode: e.mode,
        lhs: nan(),
        rhs_partial: nan(),
        n_terms: 0,
        abs_error: nan(),
        rel_error: nan(),
        tail_estimate: nan(),
        pass: false,
        error: Some(err.to_string()),
    }
}

/// Pass/fail totals.
pub fn tally(reports: &[VerificationReport]) -> (usize, usize) {
    let passed = reports.iter().filter(|r| r.pass).count();
    (passed, reports.len() - passed)
}
