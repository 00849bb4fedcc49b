//! Acceptance run: one PASS/FAIL line per criterion, at the pinned
//! tolerances. Runs without the libtest harness so the lines always show.

use std::process::Command;
use std::time::{Duration, Instant};

use jfrac::families::{FamilyId, FamilySpec, Params, make_family};
use jfrac::jfraction::{continued_fraction_moments, jfraction_from_moments, tableau_from_jfraction, verify_convolution};
use jfrac::motzkin::{PathWeights, path_weight_sum};
use jfrac::scalar::{BigFloat, ExactRational, PrecisionContext};
use jfrac::theorems::{Mode, VerificationReport, verify_identity, verify_theorem};

type Q = ExactRational;

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

fn params(kv: &[(&str, &str)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), q(v))).collect()
}

fn five_families() -> Vec<FamilySpec> {
    [
        (FamilyId::Hermite, params(&[])),
        (FamilyId::Laguerre, params(&[("alpha", "0")])),
        (FamilyId::Ultraspherical, params(&[("nu", "1")])),
        (FamilyId::AlSalamCarlitz, params(&[("a", "1/3"), ("q", "1/2")])),
        (FamilyId::LittleQJacobi, params(&[("a", "1/3"), ("b", "1/4"), ("q", "1/2")])),
    ]
    .into_iter()
    .map(|(id, p)| make_family(id, &p).unwrap())
    .collect()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn verdict(ok: bool, detail: String) -> Outcome {
    Outcome { ok, detail }
}

/// `rel_error ≤ tol` for a numeric report (not just the report's own verdict).
fn within(r: &VerificationReport, tol: f64) -> Result<f64, String> {
    if let Some(e) = &r.error {
        return Err(format!("{}: {e}", r.id));
    }
    let rel = r.rel_error.to_f64();
    if r.mode == Mode::Numeric && rel <= tol { Ok(rel) } else { Err(format!("{}: rel_error {rel:.3e} > {tol:.0e}", r.id)) }
}

fn exact(r: &VerificationReport) -> Result<String, String> {
    if r.mode == Mode::Exact && r.pass {
        Ok(format!("{}: {} exact checks", r.id, r.params.get("checked").map(String::as_str).unwrap_or("?")))
    } else {
        Err(format!("{}: exact mismatch (abs {})", r.id, r.abs_error.to_f64()))
    }
}

fn collect(results: Vec<Result<String, String>>) -> Outcome {
    let ok = results.iter().all(Result::is_ok);
    let detail = results.into_iter().map(|r| r.unwrap_or_else(|e| format!("FAILED {e}"))).collect::<Vec<_>>().join("; ");
    verdict(ok, detail)
}

fn theorem(id: &str, p: &[(&str, &str)], st: Option<(&str, &str)>, n: Option<usize>, ctx: &PrecisionContext) -> VerificationReport {
    let (s, t) = match st {
        Some((s, t)) => (Some(q(s)), Some(q(t))),
        None => (None, None),
    };
    verify_theorem(id, &params(p), s, t, n, ctx).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn identity(id: &str, p: &[(&str, &str)], ctx: &PrecisionContext) -> VerificationReport {
    verify_identity(id, &params(p), ctx).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn c1_tableau_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for f in five_families() {
        let jf = f.jfraction(10).unwrap();
        let tab = tableau_from_jfraction(&jf, 10).unwrap();
        let w = PathWeights::from_jfraction(&jf);
        for n in 0..=10 {
            for i in 0..=n {
                if path_weight_sum(&w, 0, i, n).unwrap() != tab.get(i, n) {
                    return fail(format!("{}: H_{{{i},{n}}} differs from the path sum", f.id()));
                }
                checked += 1;
            }
        }
    }
    let el = start.elapsed();
    verdict(el <= Duration::from_secs(10), format!("{checked} cells equal, {:.2} s (limit 10 s)", el.as_secs_f64()))
}

fn c2_convolution() -> Outcome {
    let mut checked = 0;
    for f in five_families() {
        let jf = f.jfraction(16).unwrap();
        let tab = tableau_from_jfraction(&jf, 16).unwrap();
        for k in 0..=16 {
            for l in 0..=16 - k {
                if !verify_convolution(&tab, &jf, k, l).unwrap() {
                    return fail(format!("{}: k={k}, l={l}", f.id()));
                }
                checked += 1;
            }
        }
    }
    pass(format!("{checked} (k, l) pairs exact"))
}

fn c3_round_trip() -> Outcome {
    let mut fams = five_families();
    fams.push(make_family(FamilyId::Derangement, &Params::new()).unwrap());
    for f in &fams {
        for n in 0..=12 {
            let mu = f.moments(2 * n + 1).unwrap();
            let jf = jfraction_from_moments(&mu, n).unwrap();
            let want = f.jfraction(n + 1).unwrap();
            let same = (0..=n).all(|k| jf.b_at(k).unwrap() == want.b_at(k).unwrap())
                && (1..=n).all(|k| jf.lambda_at(k).unwrap() == want.lambda_at(k).unwrap());
            // and back: the recovered coefficients regenerate the moments
            // through the truncated continued fraction
            let back = continued_fraction_moments(&jf, n + 1, 2 * n + 1).unwrap();
            if !same || back != mu {
                return fail(format!("{}: N = {n}", f.id()));
            }
        }
    }
    pass(format!("{} families, N ≤ 12, exact both ways", fams.len()))
}

fn c4_conf_hyp(ctx: &PrecisionContext) -> Outcome {
    let r = theorem("conf_hyp_1f1", &[("alpha", "1/2"), ("beta", "1/3")], Some(("1/5", "3/10")), Some(25), ctx);
    let main = within(&r, 1e-30).map(|e| format!("rel_error {e:.2e}"));
    let z = theorem("conf_hyp_1f1", &[("alpha", "0"), ("beta", "0")], Some(("1/10", "1/10")), Some(25), ctx);
    let bits = ctx.working_bits();
    let x = BigFloat::from_rational(&q("1/5"), bits);
    let closed = &(&x.exp() - &BigFloat::one()) / &x;
    let err = (&(&z.lhs.to_float(bits) - &closed).abs() / &closed).to_f64();
    let side = if err <= 1e-30 { Ok(format!("LHS vs (e^0.2-1)/0.2 {err:.2e}")) } else { Err(format!("closed form off by {err:.2e}")) };
    collect(vec![main, side])
}

fn c5_bessel(ctx: &PrecisionContext) -> Outcome {
    collect(
        ["1/2", "1", "3/2"]
            .iter()
            .map(|nu| {
                let r = theorem("bessel_plus", &[("nu", nu)], Some(("3/10", "1/2")), Some(25), ctx);
                within(&r, 1e-28).map(|e| format!("nu={nu}: {e:.2e}"))
            })
            .collect(),
    )
}

const LITTLE: [(&str, &str); 3] = [("q", "1/2"), ("a", "1/3"), ("b", "1/4")];
const ST: Option<(&str, &str)> = Some(("1/20", "1/10"));

fn c6_little(ctx: &PrecisionContext) -> Outcome {
    let a = theorem("little_qj", &LITTLE, ST, Some(25), ctx);
    let b = theorem("little_qj_alt", &LITTLE, ST, Some(25), ctx);
    let bits = ctx.working_bits();
    let (x, y) = (a.rhs_partial.to_float(bits), b.rhs_partial.to_float(bits));
    let mutual = (&(&x - &y).abs() / &x.abs()).to_f64();
    collect(vec![
        within(&a, 1e-30).map(|e| format!("2φ1×1φ1 {e:.2e}")),
        within(&b, 1e-30).map(|e| format!("1φ1×1φ1 {e:.2e}")),
        if mutual <= 1e-30 { Ok(format!("forms agree {mutual:.2e}")) } else { Err(format!("forms differ {mutual:.2e}")) },
    ])
}

fn c7_big(ctx: &PrecisionContext) -> Outcome {
    let r = theorem("big_qj", &[("q", "1/2"), ("a", "1/3"), ("b", "1/4"), ("c", "1/5")], ST, Some(25), ctx);
    collect(vec![within(&r, 1e-30).map(|e| format!("rel_error {e:.2e}"))])
}

fn c8_noncomm(ctx: &PrecisionContext) -> Outcome {
    collect(vec![exact(&theorem("asc_noncomm", &[("q", "1/2"), ("a", "1/3")], None, Some(12), ctx))])
}

fn c9_asc(ctx: &PrecisionContext) -> Outcome {
    let r = theorem("asc_qtrans", &[("q", "1/2"), ("a", "1/3")], ST, Some(25), ctx);
    collect(vec![within(&r, 1e-30).map(|e| format!("rel_error {e:.2e}"))])
}

fn c10_bessel_q(ctx: &PrecisionContext) -> Outcome {
    let st = Some(("1/5", "1/5"));
    let cases = [
        theorem("q_ultra", &[("q", "1/2"), ("beta", "1/3")], st, Some(20), ctx),
        theorem("askey_wilson", &[("q", "1/2"), ("a", "1/3")], st, Some(20), ctx),
        theorem("q_ultra_beta0", &[("q", "1/2")], st, Some(20), ctx),
    ];
    collect(cases.iter().map(|r| within(r, 1e-28).map(|e| format!("{} {e:.2e}", r.id))).collect())
}

fn c11_moments(ctx: &PrecisionContext) -> Outcome {
    let mut out = vec![
        exact(&theorem("hermite_moments", &[("x", "1")], None, Some(12), ctx)),
        exact(&theorem("laguerre_moments", &[("alpha", "1/2"), ("x", "1/2")], None, Some(12), ctx)),
        exact(&theorem("gegenbauer_moments", &[("nu", "3/2"), ("x", "1/2")], None, Some(12), ctx)),
        within(&theorem("mp_moments", &[("lambda", "1"), ("phi_over_pi", "1/3"), ("x", "1/2")], Some(("1/5", "3/10")), Some(25), ctx), 1e-28)
            .map(|e| format!("mp_moments {e:.2e}")),
    ];
    // closed-form H_{i,i+n} against the recurrence tableau, i ≤ 4, n ≤ 8
    for (id, p) in [
        (FamilyId::HermiteMoments, params(&[("x", "1")])),
        (FamilyId::LaguerreMoments, params(&[("alpha", "1/2"), ("x", "1/2")])),
        (FamilyId::GegenbauerMoments, params(&[("nu", "3/2"), ("x", "1/2")])),
    ] {
        let f = make_family(id, &p).unwrap();
        let tab = f.tableau(12).unwrap();
        let ok = (0..=4).all(|i| (0..=8).all(|n| f.tableau_closed_form(i, i + n).unwrap() == tab.get(i, i + n)));
        out.push(if ok { Ok(format!("{id} closed-form tableau")) } else { Err(format!("{id} closed-form tableau")) });
    }
    collect(out)
}

fn c12_hankel_hermite(ctx: &PrecisionContext) -> Outcome {
    let mut out = Vec::new();
    for nu in ["3/2", "2"] {
        for x in ["2", "1/2"] {
            let r = verify_identity("hankel_gegenbauer", &params(&[("nu", nu), ("x", x)]), ctx).unwrap();
            out.push(exact(&r).map(|s| format!("{s} (nu={nu}, x={x})")));
        }
    }
    for x in ["0", "1", "1/2"] {
        out.push(exact(&identity("hermite_convolution", &[("x", x)], ctx)).map(|s| format!("{s} (x={x})")));
    }
    collect(out)
}

fn c13_identities(ctx: &PrecisionContext) -> Outcome {
    let pw = [("x", "1/2"), ("y", "2/5")];
    collect(vec![
        within(&identity("bessel_reduction", &[("mu", "1"), ("nu", "2"), ("z", "7/10")], ctx), 1e-28).map(|e| format!("bessel_reduction {e:.2e}")),
        within(&identity("plane_wave_ultra", &[pw[0], pw[1], ("nu", "3/2")], ctx), 1e-28).map(|e| format!("plane_wave_ultra {e:.2e}")),
        within(&identity("plane_wave_cheby", &pw, ctx), 1e-28).map(|e| format!("plane_wave_cheby {e:.2e}")),
        exact(&identity("connection_rogers", &[("beta", "1/3"), ("gamma", "1/5"), ("q", "1/2")], ctx)),
    ])
}

fn c14_determinism() -> Outcome {
    let run = || {
        let start = Instant::now();
        let o = Command::new(env!("CARGO_BIN_EXE_jfrac"))
            .args(["verify", "--all", "--format", "json"])
            .env_remove("JFRAC_PRECISION_BITS")
            .output()
            .expect("binary runs");
        (o, start.elapsed())
    };
    let (a, ta) = run();
    let (b, tb) = run();
    let same = a.stdout == b.stdout;
    let all_pass = a.status.code() == Some(0);
    let slow = ta.max(tb);
    verdict(
        same && all_pass && slow <= Duration::from_secs(300),
        format!(
            "byte-identical: {same}, all pass: {all_pass}, slowest run {:.1} s (limit 300 s), {} bytes",
            slow.as_secs_f64(),
            a.stdout.len()
        ),
    )
}

fn main() {
    let ctx = PrecisionContext::new(256);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 tableau = Motzkin path sums", Box::new(c1_tableau_oracle)),
        ("2 convolution identity", Box::new(c2_convolution)),
        ("3 moments <-> J-fraction round trip", Box::new(c3_round_trip)),
        ("4 confluent 1F1 addition theorem", Box::new(|| c4_conf_hyp(&ctx))),
        ("5 Bessel J addition", Box::new(|| c5_bessel(&ctx))),
        ("6 little q-Jacobi (both forms)", Box::new(|| c6_little(&ctx))),
        ("7 big q-Jacobi", Box::new(|| c7_big(&ctx))),
        ("8 Al-Salam-Carlitz, st = qts", Box::new(|| c8_noncomm(&ctx))),
        ("9 Al-Salam-Carlitz q-translation", Box::new(|| c9_asc(&ctx))),
        ("10 q-ultraspherical, Askey-Wilson, beta -> 0", Box::new(|| c10_bessel_q(&ctx))),
        ("11 polynomials as moments", Box::new(|| c11_moments(&ctx))),
        ("12 Gegenbauer Hankel, Hermite convolution", Box::new(|| c12_hankel_hermite(&ctx))),
        ("13 identity suite", Box::new(|| c13_identities(&ctx))),
        ("14 determinism and suite time", Box::new(c14_determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let o = check();
        if !o.ok {
            failed += 1;
        }
        println!("[{}] {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
