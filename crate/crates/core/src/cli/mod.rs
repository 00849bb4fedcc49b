//! The `jfrac` command line. Everything routes through [`run`], which takes
//! the arguments, environment and output streams explicitly so that the
//! binary and the tests exercise the same code.

mod config;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub use config::{Format, Layer, PRECISION_ENV, RunConfig};

use crate::error::Error;
use crate::families::{FamilyId, catalog, make_family, parse_params};
use crate::jfraction::{HankelKind, JFraction, StieltjesTableau, hankel, jfraction_from_moments_partial, tableau_from_jfraction};
use crate::motzkin::{PathWeights, path_weight_sum};
use crate::scalar::ExactRational;
use crate::theorems::{Overrides, VerificationReport, matching, registry, run_entry, tally};

type Q = ExactRational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NON_REGULAR: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "jfrac", version, about = "Stieltjes tableaux, J-fractions and addition-theorem verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// `key = value` config file (flags take precedence).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    precision_bits: Option<u32>,
    /// Relative tolerance for numeric verification, e.g. 1e-30.
    #[arg(long, global = true)]
    rel_tolerance: Option<String>,
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Truncation / degree.
    #[arg(long = "N", global = true)]
    n: Option<usize>,
    /// Seed for randomised instances.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_q(s: &str) -> Result<Q, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A J-fraction given either as a catalog family or as explicit lists.
#[derive(Args, Debug)]
struct Source {
    /// Catalog family id (see `catalog`).
    #[arg(long, conflicts_with_all = ["b", "lambda"])]
    family: Option<String>,
    /// Family parameter `key=value` (repeatable).
    #[arg(long = "param", value_name = "KEY=VALUE", requires = "family")]
    params: Vec<String>,
    /// `b_0,b_1,...` as integers, `p/q` or decimals.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_q)]
    b: Option<Vec<Q>>,
    /// `λ_1,λ_2,...`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_q)]
    lambda: Option<Vec<Q>>,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum Kind {
    #[value(name = "D")]
    D,
    Chi,
    Delta,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Stieltjes tableau H_{i,n}, 0 ≤ i ≤ n ≤ N.
    Tableau(Source),
    /// Moments μ_0..μ_N.
    Moments(Source),
    /// J-fraction coefficients recovered from moments.
    Jfraction {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_q, required = true)]
        moments: Vec<Q>,
    },
    /// Hankel determinant of a moment sequence.
    Hankel {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_q)]
        moments: Option<Vec<Q>>,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "D")]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Row count parameter of Δ_{i,n}.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Families and registered theorems.
    Catalog,
    /// Weighted Motzkin path sum (brute-force oracle).
    Oracle {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long, default_value_t = 0)]
        to: usize,
        #[arg(long)]
        steps: usize,
    },
    /// Verify theorems and identities whose id matches a glob pattern.
    Verify(VerifyArgs),
    /// Full-suite report for CI.
    Report {
        #[command(flatten)]
        v: VerifyArgs,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Id or glob (`little_*`).
    pattern: Option<String>,
    #[arg(long, conflicts_with = "pattern")]
    all: bool,
    /// Parameter override `key=value` (repeatable).
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
    s: Option<Q>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
    t: Option<Q>,
    /// Unknown ids and inapplicable overrides are errors (exit 2).
    #[arg(long)]
    strict: bool,
}

/// A failure with the exit code it maps to.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonRegular(_) => EXIT_NON_REGULAR,
            Error::NonConvergent { .. } | Error::PoleInDenominator { .. } | Error::GammaPole(_) | Error::DivisionByZero => 1,
            _ => EXIT_INVALID,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(1, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INVALID, msg.into())
}

/// Run the CLI on `args` (including the program name). Returns the exit code.
pub fn run<I, T>(args: I, env: &BTreeMap<String, String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, env, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let env: BTreeMap<String, String> = std::env::vars().collect();
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    run(std::env::args_os(), &env, &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cli: Cli, env: &BTreeMap<String, String>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let flags = Layer {
        precision_bits: cli.precision_bits,
        rel_tolerance: cli.rel_tolerance.clone(),
        max_terms: cli.max_terms,
        truncation: cli.n,
        format: cli.format,
        seed: cli.seed,
    };
    let file = match &cli.config {
        Some(p) => Layer::load(p)?,
        None => Layer::default(),
    };
    let explicit_n = flags.truncation.or(file.truncation);
    let cfg = RunConfig::resolve(&flags, &file, env)?;
    // explicit lists default to the order they determine, families to 10
    let order = |src: &Source| explicit_n.unwrap_or_else(|| src.b.as_ref().map_or(10, Vec::len));
    match cli.cmd {
        Cmd::Tableau(src) => {
            let tab = src.tableau(order(&src))?;
            emit_tableau(&tab, cfg.format, out)?;
        }
        Cmd::Moments(src) => {
            let mu = src.tableau(order(&src))?.moments();
            emit_list("moments", &mu, cfg.format, out)?;
        }
        Cmd::Jfraction { moments } => {
            let jf = jfraction_from_moments_partial(&moments)?;
            emit_jfraction(&jf, cfg.format, out)?;
        }
        Cmd::Hankel { moments, source, kind, n: order, i } => {
            let mu = match moments {
                Some(m) => m,
                None if source.given() => source.tableau(2 * order + 1)?.moments(),
                None => return Err(invalid("give --moments or a J-fraction source")),
            };
            let kind = match kind {
                Kind::D => HankelKind::D(order),
                Kind::Chi => HankelKind::Chi(order),
                Kind::Delta => HankelKind::Delta(i.ok_or_else(|| invalid("--kind delta needs --i"))?, order),
            };
            emit_scalar("hankel", &hankel(&mu, kind)?, cfg.format, out)?;
        }
        Cmd::Catalog => emit_catalog(cfg.format, out)?,
        Cmd::Oracle { source, from, to, steps } => {
            let w = match (&source.b, &source.lambda) {
                (Some(b), Some(l)) => PathWeights::new(b.clone(), l.clone()),
                _ if source.family.is_some() => PathWeights::from_jfraction(&source.jfraction(steps.max(from).max(to) + 1)?),
                _ => return Err(invalid("give --family or both --b and --lambda")),
            };
            let v = path_weight_sum(&w, from, to, steps)?;
            emit_scalar("paths", &v, cfg.format, out)?;
        }
        Cmd::Verify(v) => {
            let doc = verify(&v, &cfg, explicit_n)?;
            emit_reports(&doc, cfg.format, out)?;
            return Ok(verdict(&doc.reports));
        }
        Cmd::Report { v, out: path } => {
            let v = VerifyArgs { all: v.all || v.pattern.is_none(), ..v };
            let doc = verify(&v, &cfg, explicit_n)?;
            let (passed, failed) = tally(&doc.reports);
            match path {
                Some(p) => {
                    let mut f = std::fs::File::create(&p)?;
                    emit_reports(&doc, cfg.format, &mut f)?;
                }
                None => emit_reports(&doc, cfg.format, out)?,
            }
            writeln!(err, "{passed} passed, {failed} failed")?;
            return Ok(verdict(&doc.reports));
        }
    }
    Ok(EXIT_OK)
}

fn verdict(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_VERIFY_FAILED }
}

impl Source {
    fn given(&self) -> bool {
        self.family.is_some() || self.b.is_some() || self.lambda.is_some()
    }

    /// Enough of the J-fraction for a tableau of order `n`.
    fn jfraction(&self, n: usize) -> Result<JFraction, Failure> {
        if let Some(name) = &self.family {
            let id: FamilyId = name.parse()?;
            let params = parse_params(self.params.iter().map(String::as_str))?;
            return Ok(make_family(id, &params)?.jfraction(n)?);
        }
        let b = self.b.clone().unwrap_or_default();
        let lambda = self.lambda.clone().unwrap_or_default();
        if n > 0 && (b.len() < n || lambda.len() + 1 < n) {
            return Err(invalid(format!(
                "order {n} needs b_0..b_{} and lambda_1..lambda_{} (got {} and {})",
                n - 1,
                n - 1,
                b.len(),
                lambda.len()
            )));
        }
        Ok(JFraction::new(b, lambda)?)
    }

    fn tableau(&self, n: usize) -> Result<StieltjesTableau, Failure> {
        Ok(tableau_from_jfraction(&self.jfraction(n)?, n)?)
    }
}

// --- verification -----------------------------------------------------------

#[derive(Serialize)]
struct SuiteDocument {
    suite_version: &'static str,
    config: RunConfig,
    reports: Vec<VerificationReport>,
}

fn verify(v: &VerifyArgs, cfg: &RunConfig, n: Option<usize>) -> Result<SuiteDocument, Failure> {
    let pattern = match (&v.pattern, v.all) {
        (_, true) => None,
        (Some(p), false) => Some(p.as_str()),
        (None, false) => return Err(invalid("give an id pattern or --all")),
    };
    let entries = matching(pattern)?;
    if v.strict && entries.is_empty() {
        return Err(invalid(format!("no registered theorem or identity matches {:?}", pattern.unwrap_or("*"))));
    }
    let o = Overrides { params: parse_params(v.params.iter().map(String::as_str))?, s: v.s.clone(), t: v.t.clone(), n, seed: Some(cfg.seed) };
    if v.strict {
        for e in &entries {
            let bad = o.rejected_by(e);
            if !bad.is_empty() {
                return Err(invalid(format!("{} does not accept {}", e.id, bad.join(", "))));
            }
        }
    }
    let ctx = cfg.context()?;
    let mut reports: Vec<VerificationReport> = entries
        .par_iter()
        .map(|e| {
            let o = o.restricted_to(e);
            run_entry(e, &o, &ctx).unwrap_or_else(|err| failed_report(e.id, e.mode, &err))
        })
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteDocument { suite_version: env!("CARGO_PKG_VERSION"), config: cfg.clone(), reports })
}

fn failed_report(id: &str, mode: crate::theorems::Mode, err: &Error) -> VerificationReport {
    let zero = || crate::theorems::Value::Exact(Q::zero());
    VerificationReport {
        id: id.to_string(),
        params: BTreeMap::new(),
        s: None,
        t: None,
        mode,
        lhs: zero(),
        rhs_partial: zero(),
        n_terms: 0,
        abs_error: zero(),
        rel_error: zero(),
        tail_estimate: zero(),
        pass: false,
        error: Some(err.to_string()),
    }
}

// --- output -------------------------------------------------------------------

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Failure(1, e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows(out: &mut dyn Write, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Failure(1, e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

fn joined(v: &[Q]) -> String {
    v.iter().map(Q::to_string).collect::<Vec<_>>().join(",")
}

fn emit_tableau(tab: &StieltjesTableau, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let d = tab.degree();
    let cells = || (0..=d).flat_map(move |i| (i..=d).map(move |n| (i, n)));
    match format {
        Format::Json => {
            let cells: Vec<_> = cells().map(|(i, n)| json!({"i": i, "n": n, "value": tab.get(i, n)})).collect();
            json_line(out, &json!({"N": d, "cells": cells}))
        }
        Format::Csv => csv_rows(out, &["i", "n", "value"], cells().map(|(i, n)| vec![i.to_string(), n.to_string(), tab.get(i, n).to_string()])),
        Format::Text => {
            for i in 0..=d {
                writeln!(out, "row {i}: {}", joined(&tab.row(i)))?;
            }
            Ok(())
        }
    }
}

fn emit_list(name: &str, v: &[Q], format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Json => json_line(out, &json!({ name: v })),
        Format::Csv => csv_rows(out, &["i", "n", "value"], v.iter().enumerate().map(|(n, x)| vec!["0".into(), n.to_string(), x.to_string()])),
        Format::Text => Ok(writeln!(out, "{}", joined(v))?),
    }
}

fn emit_jfraction(jf: &JFraction, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Json => json_line(out, &json!({"b": jf.b(), "lambda": jf.lambdas()})),
        Format::Csv => {
            let b = jf.b().iter().enumerate().map(|(n, x)| vec!["b".into(), n.to_string(), x.to_string()]);
            let l = jf.lambdas().iter().enumerate().map(|(n, x)| vec!["lambda".into(), (n + 1).to_string(), x.to_string()]);
            csv_rows(out, &["coefficient", "n", "value"], b.chain(l))
        }
        Format::Text => Ok(writeln!(out, "b: {}\nlambda: {}", joined(jf.b()), joined(jf.lambdas()))?),
    }
}

fn emit_scalar(name: &str, v: &Q, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Json => json_line(out, &json!({ name: v })),
        Format::Csv => csv_rows(out, &["value"], [vec![v.to_string()]]),
        Format::Text => Ok(writeln!(out, "{v}")?),
    }
}

fn emit_catalog(format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let families = catalog();
    let theorems: Vec<_> = registry()
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "kind": e.kind,
                "mode": e.mode,
                "summary": e.summary,
                "params": e.param_names().collect::<Vec<_>>(),
                "N": e.default_n(),
            })
        })
        .collect();
    match format {
        Format::Json => json_line(out, &json!({"families": families, "theorems": theorems})),
        Format::Csv => {
            let fam = families.iter().map(|f| {
                let ps: Vec<_> = f.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
                vec!["family".into(), f.id.to_string(), ps.join(" ")]
            });
            let thm = registry().iter().map(|e| vec![format!("{:?}", e.kind).to_lowercase(), e.id.to_string(), e.summary.to_string()]);
            csv_rows(out, &["section", "id", "detail"], fam.chain(thm))
        }
        Format::Text => {
            writeln!(out, "families:")?;
            for f in &families {
                let ps: Vec<_> = f.params.iter().map(|p| format!("{}={} ({})", p.name, p.default, p.constraint)).collect();
                writeln!(out, "  {:28} {}", f.id.to_string(), ps.join(", "))?;
            }
            writeln!(out, "theorems and identities:")?;
            for e in registry() {
                writeln!(out, "  {:22} {}", e.id, e.summary)?;
            }
            Ok(())
        }
    }
}

fn emit_reports(doc: &SuiteDocument, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Json => json_line(out, doc),
        Format::Csv => csv_rows(
            out,
            &["id", "mode", "pass", "n_terms", "rel_error", "abs_error", "tail_estimate"],
            doc.reports.iter().map(|r| {
                vec![
                    r.id.clone(),
                    format!("{:?}", r.mode).to_lowercase(),
                    r.pass.to_string(),
                    r.n_terms.to_string(),
                    value_string(&r.rel_error),
                    value_string(&r.abs_error),
                    value_string(&r.tail_estimate),
                ]
            }),
        ),
        Format::Text => {
            for r in &doc.reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                let detail = match &r.error {
                    Some(e) => format!("error: {e}"),
                    None => format!("rel_error {:.3e}  N={}", r.rel_error.to_f64(), r.n_terms),
                };
                writeln!(out, "{verdict} {:22} {detail}", r.id)?;
            }
            let (p, f) = tally(&doc.reports);
            Ok(writeln!(out, "{p} passed, {f} failed")?)
        }
    }
}

fn value_string(v: &crate::theorems::Value) -> String {
    serde_json::to_value(v).ok().and_then(|j| j.as_str().map(str::to_string)).unwrap_or_default()
}
