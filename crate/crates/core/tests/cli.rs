use std::process::{Command, Output};

use jfrac::scalar::ExactRational;

fn jfrac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jfrac"))
        .args(args)
        .env_remove("JFRAC_PRECISION_BITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn tableau_csv_has_motzkin_row_zero() {
    let o = jfrac(&["tableau", "--b", "0,0,0,0", "--lambda", "1,1,1,1", "--N", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,n,value"));
    let row0: Vec<_> = lines.filter(|l| l.starts_with("0,")).map(|l| l.rsplit(',').next().unwrap().to_string()).collect();
    assert_eq!(row0, ["1", "0", "1", "0", "2"]);
}

#[test]
fn hermite_tableau_entry() {
    let o = jfrac(&["tableau", "--family", "hermite", "--N", "2"]);
    let v = json(&o);
    let cell = v["cells"].as_array().unwrap().iter().find(|c| c["i"] == 0 && c["n"] == 2).unwrap();
    assert_eq!(cell["value"], "1/2");
}

#[test]
fn empty_tableau_is_one_cell() {
    let o = jfrac(&["tableau", "--N", "0", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "i,n,value\n0,0,1\n");
}

#[test]
fn jfraction_from_moments() {
    let o = jfrac(&["jfraction", "--moments", "1,0,1,0,2", "--format", "text"]);
    assert_eq!(stdout(&o), "b: 0,0\nlambda: 1,1\n");
}

#[test]
fn hankel_two_by_two() {
    let o = jfrac(&["hankel", "--moments", "1,0,1/2", "--kind", "D", "--n", "1", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "1/2");
}

#[test]
fn oracle_counts_dyck_paths() {
    let o = jfrac(&["oracle", "--b", "0,0", "--lambda", "1,1", "--from", "0", "--to", "0", "--steps", "4", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn exit_codes() {
    assert_eq!(jfrac(&["jfraction", "--moments", "1,0,0,0,2"]).status.code(), Some(1));
    assert_eq!(jfrac(&["tableau", "--b", "0,0", "--lambda", "0", "--N", "2"]).status.code(), Some(1));
    assert_eq!(jfrac(&["tableau", "--family", "no_such_family"]).status.code(), Some(2));
    assert_eq!(jfrac(&["tableau", "--b", "1/0"]).status.code(), Some(2));
    assert_eq!(jfrac(&["verify", "nonexistent*", "--strict"]).status.code(), Some(2));
    assert_eq!(jfrac(&["verify", "conf_hyp_1f1", "--param", "gamma=1", "--strict"]).status.code(), Some(2));
    assert_eq!(jfrac(&["verify", "little_qj", "--param", "q=2"]).status.code(), Some(3));
}

#[test]
fn verify_unknown_pattern_is_empty() {
    let o = jfrac(&["verify", "nonexistent*"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_one_theorem_report_schema() {
    let o = jfrac(&["verify", "conf_hyp_1f1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["config"]["precision_bits"], 256);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    for key in ["id", "params", "s", "t", "mode", "lhs", "rhs_partial", "n_terms", "abs_error", "rel_error", "tail_estimate", "pass"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["pass"], true);
    assert_eq!(r["s"], "1/5");
    assert!(r["lhs"].as_str().unwrap().len() > 70, "full-precision decimal");
}

#[test]
fn exact_outputs_round_trip() {
    let o = jfrac(&["moments", "--family", "little_q_jacobi", "--N", "6"]);
    for v in json(&o)["moments"].as_array().unwrap() {
        let s = v.as_str().unwrap();
        let q: ExactRational = s.parse().unwrap();
        assert_eq!(q.to_string(), s);
    }
}

#[test]
fn config_file_and_env_precedence() {
    let dir = std::env::temp_dir().join(format!("jfrac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.conf");
    std::fs::write(&cfg, "precision_bits = 192\nformat = json\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let bits = |o: Output| json(&o)["config"]["precision_bits"].clone();
    assert_eq!(bits(jfrac(&["verify", "nonexistent*", "--config", cfg])), 192);
    assert_eq!(bits(jfrac(&["verify", "nonexistent*", "--config", cfg, "--precision-bits", "320"])), 320);
    let env = Command::new(env!("CARGO_BIN_EXE_jfrac"))
        .args(["verify", "nonexistent*"])
        .env("JFRAC_PRECISION_BITS", "160")
        .output()
        .unwrap();
    assert_eq!(bits(env), 160);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn seeded_verification_is_reproducible() {
    let a = jfrac(&["verify", "classical_generic", "--seed", "7"]);
    let b = jfrac(&["verify", "classical_generic", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["reports"][0]["params"]["seed"], "7");
}

#[test]
fn catalog_lists_families_and_theorems() {
    let v = json(&jfrac(&["catalog"]));
    assert!(v["families"].as_array().unwrap().len() >= 20);
    assert!(v["theorems"].as_array().unwrap().iter().any(|t| t["id"] == "big_qj"));
}
