//! The generated header is valid C, and a C program written against it
//! builds; it is also linked and run when the static library has been built
//! (`cargo build -p jfrac-ffi`).

use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().filter(|o| o.status.success()).map(|_| cc)
}

fn static_lib() -> Option<PathBuf> {
    let target = std::env::var("CARGO_TARGET_DIR").map(PathBuf::from).unwrap_or_else(|_| manifest().join("../../target"));
    ["debug", "release"].iter().map(|p| target.join(p).join("libjfrac_ffi.a")).find(|p| p.exists())
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(manifest().join("include/jfrac.h")).unwrap();
    for name in [
        "JFRAC_STATUS_NON_REGULAR",
        "typedef struct JfracJFraction JfracJFraction;",
        "jfrac_last_error(void)",
        "jfrac_string_free(",
        "jfrac_tableau_get(",
        "jfrac_verify(",
        "jfrac_suite_free(",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_compiles_against_the_header() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipped");
        return;
    };
    let out = std::env::temp_dir().join(format!("jfrac-smoke-{}", std::process::id()));
    let include = manifest().join("include");
    let src = manifest().join("tests/smoke.c");
    let obj = out.with_extension("o");
    let st = Command::new(&cc).args(["-std=c99", "-Wall", "-Werror", "-c"]).arg("-I").arg(&include).arg(&src).arg("-o").arg(&obj).status().unwrap();
    assert!(st.success(), "smoke.c does not compile");

    let Some(lib) = static_lib() else {
        eprintln!("libjfrac_ffi.a not built; link step skipped");
        return;
    };
    link_and_run(&cc, &obj, &lib, &out);
    std::fs::remove_file(&obj).ok();
}

fn link_and_run(cc: &str, obj: &Path, lib: &Path, exe: &Path) {
    let st = Command::new(cc).arg(obj).arg(lib).args(["-lpthread", "-ldl", "-lm"]).arg("-o").arg(exe).status().unwrap();
    assert!(st.success(), "link failed");
    let run = Command::new(exe).output().unwrap();
    assert!(run.status.success(), "smoke program failed: {:?} {}", run.status, String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
    std::fs::remove_file(exe).ok();
}
