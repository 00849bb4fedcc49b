//! C ABI over the `jfrac` core.
//!
//! Conventions:
//! - every function returns a [`JfracStatus`]; results come back through
//!   out-pointers, which are written only on success;
//! - exact values cross the boundary as `"p/q"` strings (`char*`) that the
//!   caller releases with [`jfrac_string_free`];
//! - handles are opaque and released with their `_free` function (passing
//!   NULL is a no-op);
//! - on failure, [`jfrac_last_error`] describes the most recent error on the
//!   calling thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString, c_char};
use std::panic::{AssertUnwindSafe, catch_unwind};

use jfrac::Error;
use jfrac::families::{FamilyId, make_family, parse_params};
use jfrac::jfraction::{HankelKind, JFraction, StieltjesTableau, hankel, jfraction_from_moments_partial, tableau_from_jfraction};
use jfrac::motzkin::{PathWeights, path_weight_sum};
use jfrac::scalar::{ExactRational, PrecisionContext};
use jfrac::theorems::{VerificationReport, run_suite};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JfracStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidParams = 4,
    NonRegular = 5,
    NonConvergent = 6,
    Domain = 7,
    UnknownTheorem = 8,
    Insufficient = 9,
    OutOfRange = 10,
    /// Any other library error, or a caught panic.
    Internal = 99,
}

/// A J-fraction `(b_0, b_1, ...; λ_1, λ_2, ...)`.
pub struct JfracJFraction(JFraction);

/// A Stieltjes tableau `H_{i,n}`, `0 ≤ i ≤ n ≤ N`.
pub struct JfracTableau(StieltjesTableau);

/// Reports from a verification run, sorted by id.
pub struct JfracSuite(Vec<VerificationReport>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Fail(JfracStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let s = match e {
            Error::Parse(_) => JfracStatus::Parse,
            Error::InvalidParams(_) => JfracStatus::InvalidParams,
            Error::NonRegular(_) => JfracStatus::NonRegular,
            Error::NonConvergent { .. } => JfracStatus::NonConvergent,
            Error::Domain(_) | Error::DivisionByZero | Error::PoleInDenominator { .. } | Error::GammaPole(_) => JfracStatus::Domain,
            Error::UnknownTheorem(_) => JfracStatus::UnknownTheorem,
            Error::Insufficient(_) => JfracStatus::Insufficient,
            _ => JfracStatus::Internal,
        };
        Fail(s, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Run `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> JfracStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            JfracStatus::Ok
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            JfracStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(JfracStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| Fail(JfracStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_rationals(p: *const *const c_char, len: usize, what: &str) -> Result<Vec<ExactRational>, Fail> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(null(what));
    }
    let items = unsafe { std::slice::from_raw_parts(p, len) };
    items.iter().map(|&s| Ok(unsafe { read_str(s, what) }?.parse()?)).collect()
}

fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    unsafe { out.write(v) };
    Ok(())
}

fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Fail(JfracStatus::Internal, "string contains NUL".into()))?;
    write_out(out, c.into_raw())
}

fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[unsafe(no_mangle)]
pub extern "C" fn jfrac_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// J-fraction from explicit `b_0..b_{nb-1}` and `λ_1..λ_{nl}` given as
/// rational strings (`"3"`, `"-1/2"`, `"0.25"`).
///
/// # Safety
/// The arrays must hold `nb` / `nl` valid C strings.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_jfraction_new(
    b: *const *const c_char,
    nb: usize,
    lambda: *const *const c_char,
    nl: usize,
    out: *mut *mut JfracJFraction,
) -> JfracStatus {
    guard(|| {
        let b = unsafe { read_rationals(b, nb, "b") }?;
        let l = unsafe { read_rationals(lambda, nl, "lambda") }?;
        let jf = JFraction::new(b, l)?;
        write_out(out, Box::into_raw(Box::new(JfracJFraction(jf))))
    })
}

/// J-fraction of a catalog family with enough coefficients for order `n`.
/// `params` is `"key=value,key=value"` (may be NULL or empty for defaults).
///
/// # Safety
/// `family` must be a valid C string; `params` NULL or a valid C string.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_jfraction_from_family(
    family: *const c_char,
    params: *const c_char,
    n: usize,
    out: *mut *mut JfracJFraction,
) -> JfracStatus {
    guard(|| {
        let id: FamilyId = unsafe { read_str(family, "family") }?.parse()?;
        let p = if params.is_null() { "" } else { unsafe { read_str(params, "params") }? };
        let p = parse_params(p.split(',').map(str::trim).filter(|s| !s.is_empty()))?;
        let jf = make_family(id, &p)?.jfraction(n)?;
        write_out(out, Box::into_raw(Box::new(JfracJFraction(jf))))
    })
}

/// The coefficients determined by moments `μ_0..μ_{len-1}` (`μ_0 = 1`).
///
/// # Safety
/// `moments` must hold `len` valid C strings.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_jfraction_from_moments(
    moments: *const *const c_char,
    len: usize,
    out: *mut *mut JfracJFraction,
) -> JfracStatus {
    guard(|| {
        let mu = unsafe { read_rationals(moments, len, "moments") }?;
        let jf = jfraction_from_moments_partial(&mu)?;
        write_out(out, Box::into_raw(Box::new(JfracJFraction(jf))))
    })
}

/// # Safety
/// `jf` must be NULL or a live handle from this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_jfraction_free(jf: *mut JfracJFraction) {
    if !jf.is_null() {
        drop(unsafe { Box::from_raw(jf) });
    }
}

/// Number of `b` and `λ` coefficients held.
///
/// # Safety
/// `jf` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_jfraction_len(jf: *const JfracJFraction, nb: *mut usize, nl: *mut usize) -> JfracStatus {
    guard(|| {
        let jf = &handle(jf, "jfraction")?.0;
        write_out(nb, jf.b().len())?;
        write_out(nl, jf.lambdas().len())
    })
}

/// `b_n` as a `"p/q"` string.
///
/// # Safety
/// `jf` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_jfraction_b(jf: *const JfracJFraction, n: usize, out: *mut *mut c_char) -> JfracStatus {
    guard(|| {
        let v = handle(jf, "jfraction")?.0.b_at(n)?.to_string();
        write_string(out, v)
    })
}

/// `λ_n` (`n ≥ 1`) as a `"p/q"` string.
///
/// # Safety
/// `jf` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_jfraction_lambda(jf: *const JfracJFraction, n: usize, out: *mut *mut c_char) -> JfracStatus {
    guard(|| {
        if n == 0 {
            return Err(Fail(JfracStatus::OutOfRange, "lambda is indexed from 1".into()));
        }
        let v = handle(jf, "jfraction")?.0.lambda_at(n)?.to_string();
        write_string(out, v)
    })
}

/// Weighted Motzkin path sum from level `from` to `to` in `steps` steps.
///
/// # Safety
/// `jf` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_path_weight_sum(
    jf: *const JfracJFraction,
    from: usize,
    to: usize,
    steps: usize,
    out: *mut *mut c_char,
) -> JfracStatus {
    guard(|| {
        let w = PathWeights::from_jfraction(&handle(jf, "jfraction")?.0);
        write_string(out, path_weight_sum(&w, from, to, steps)?.to_string())
    })
}

/// Tableau of order `n` (needs `b_0..b_{n-1}`, `λ_1..λ_{n-1}`).
///
/// # Safety
/// `jf` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_tableau_new(jf: *const JfracJFraction, n: usize, out: *mut *mut JfracTableau) -> JfracStatus {
    guard(|| {
        let tab = tableau_from_jfraction(&handle(jf, "jfraction")?.0, n)?;
        write_out(out, Box::into_raw(Box::new(JfracTableau(tab))))
    })
}

/// # Safety
/// `t` must be NULL or a live handle from this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_tableau_free(t: *mut JfracTableau) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

/// Order `N` of the tableau.
///
/// # Safety
/// `t` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_tableau_degree(t: *const JfracTableau, out: *mut usize) -> JfracStatus {
    guard(|| write_out(out, handle(t, "tableau")?.0.degree()))
}

/// `H_{i,n}` as a `"p/q"` string; zero for `i > n`.
///
/// # Safety
/// `t` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_tableau_get(t: *const JfracTableau, i: usize, n: usize, out: *mut *mut c_char) -> JfracStatus {
    guard(|| {
        let tab = &handle(t, "tableau")?.0;
        if n > tab.degree() {
            return Err(Fail(JfracStatus::OutOfRange, format!("n = {n} exceeds the tableau order {}", tab.degree())));
        }
        write_string(out, tab.get(i, n).to_string())
    })
}

/// Hankel determinant `D_n = det(μ_{i+j})_{0 ≤ i,j ≤ n}`.
///
/// # Safety
/// `moments` must hold `len` valid C strings.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_hankel_d(moments: *const *const c_char, len: usize, n: usize, out: *mut *mut c_char) -> JfracStatus {
    guard(|| {
        let mu = unsafe { read_rationals(moments, len, "moments") }?;
        write_string(out, hankel(&mu, HankelKind::D(n))?.to_string())
    })
}

/// Run every registered theorem and identity whose id matches the glob
/// `pattern` (NULL for all) at its defaults.
///
/// # Safety
/// `pattern` must be NULL or a valid C string.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_verify(pattern: *const c_char, precision_bits: u32, out: *mut *mut JfracSuite) -> JfracStatus {
    guard(|| {
        let pat = if pattern.is_null() { None } else { Some(unsafe { read_str(pattern, "pattern") }?) };
        if let Some(p) = pat {
            jfrac::theorems::matching(Some(p))?;
        }
        if !(16..=1 << 16).contains(&precision_bits) {
            return Err(Fail(JfracStatus::InvalidParams, format!("precision_bits {precision_bits} out of range")));
        }
        let reports = run_suite(pat, &PrecisionContext::new(precision_bits));
        write_out(out, Box::into_raw(Box::new(JfracSuite(reports))))
    })
}

/// # Safety
/// `s` must be NULL or a live handle from this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_suite_free(s: *mut JfracSuite) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Number of reports, and how many passed.
///
/// # Safety
/// `s` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_suite_counts(s: *const JfracSuite, total: *mut usize, passed: *mut usize) -> JfracStatus {
    guard(|| {
        let r = &handle(s, "suite")?.0;
        write_out(total, r.len())?;
        write_out(passed, r.iter().filter(|r| r.pass).count())
    })
}

fn report<'a>(s: *const JfracSuite, idx: usize) -> Result<&'a VerificationReport, Fail> {
    let r: &'a Vec<VerificationReport> = &handle(s, "suite")?.0;
    r.get(idx).ok_or_else(|| Fail(JfracStatus::OutOfRange, format!("report {idx} of {}", r.len())))
}

/// Id and verdict of report `idx`.
///
/// # Safety
/// `s` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_suite_report(s: *const JfracSuite, idx: usize, id: *mut *mut c_char, pass: *mut bool) -> JfracStatus {
    guard(|| {
        let r = report(s, idx)?;
        write_out(pass, r.pass)?;
        write_string(id, r.id.clone())
    })
}

/// Report `idx` as a JSON object (same schema as the CLI).
///
/// # Safety
/// `s` must be a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn jfrac_suite_report_json(s: *const JfracSuite, idx: usize, out: *mut *mut c_char) -> JfracStatus {
    guard(|| {
        let r = report(s, idx)?;
        let j = serde_json::to_string(r).map_err(|e| Fail(JfracStatus::Internal, e.to_string()))?;
        write_string(out, j)
    })
}

#[cfg(test)]
mod tests {
    use std::ptr;

    use super::*;

    fn cstrs(v: &[&str]) -> (Vec<CString>, Vec<*const c_char>) {
        let owned: Vec<CString> = v.iter().map(|s| CString::new(*s).unwrap()).collect();
        let ptrs = owned.iter().map(|c| c.as_ptr()).collect();
        (owned, ptrs)
    }

    fn take(s: *mut c_char) -> String {
        let v = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
        unsafe { jfrac_string_free(s) };
        v
    }

    fn last_error() -> String {
        unsafe { CStr::from_ptr(jfrac_last_error()) }.to_str().unwrap().to_string()
    }

    #[test]
    fn motzkin_tableau_through_handles() {
        let (_b, b) = cstrs(&["0", "0", "0", "0"]);
        let (_l, l) = cstrs(&["1", "1", "1", "1"]);
        let mut jf = ptr::null_mut();
        assert_eq!(unsafe { jfrac_jfraction_new(b.as_ptr(), 4, l.as_ptr(), 4, &mut jf) }, JfracStatus::Ok);
        let mut tab = ptr::null_mut();
        assert_eq!(unsafe { jfrac_tableau_new(jf, 4, &mut tab) }, JfracStatus::Ok);
        let row0: Vec<String> = (0..=4)
            .map(|n| {
                let mut s = ptr::null_mut();
                assert_eq!(unsafe { jfrac_tableau_get(tab, 0, n, &mut s) }, JfracStatus::Ok);
                take(s)
            })
            .collect();
        assert_eq!(row0, ["1", "0", "1", "0", "2"]);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { jfrac_path_weight_sum(jf, 0, 0, 4, &mut s) }, JfracStatus::Ok);
        assert_eq!(take(s), "2");
        assert_eq!(unsafe { jfrac_tableau_get(tab, 0, 9, &mut s) }, JfracStatus::OutOfRange);
        unsafe {
            jfrac_tableau_free(tab);
            jfrac_jfraction_free(jf);
        }
    }

    #[test]
    fn family_and_moments_round_trip() {
        let fam = CString::new("hermite").unwrap();
        let mut jf = ptr::null_mut();
        assert_eq!(unsafe { jfrac_jfraction_from_family(fam.as_ptr(), ptr::null(), 3, &mut jf) }, JfracStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { jfrac_jfraction_lambda(jf, 1, &mut s) }, JfracStatus::Ok);
        assert_eq!(take(s), "1/2");
        unsafe { jfrac_jfraction_free(jf) };

        let (_m, m) = cstrs(&["1", "0", "1", "0", "2"]);
        let mut jf = ptr::null_mut();
        assert_eq!(unsafe { jfrac_jfraction_from_moments(m.as_ptr(), 5, &mut jf) }, JfracStatus::Ok);
        let (mut nb, mut nl) = (0, 0);
        assert_eq!(unsafe { jfrac_jfraction_len(jf, &mut nb, &mut nl) }, JfracStatus::Ok);
        assert_eq!((nb, nl), (2, 2));
        unsafe { jfrac_jfraction_free(jf) };

        let (_h, h) = cstrs(&["1", "0", "1/2"]);
        assert_eq!(unsafe { jfrac_hankel_d(h.as_ptr(), 3, 1, &mut s) }, JfracStatus::Ok);
        assert_eq!(take(s), "1/2");
    }

    #[test]
    fn errors_set_status_and_message() {
        let (_m, m) = cstrs(&["1", "0", "0", "0", "2"]);
        let mut jf = ptr::null_mut();
        assert_eq!(unsafe { jfrac_jfraction_from_moments(m.as_ptr(), 5, &mut jf) }, JfracStatus::NonRegular);
        assert!(jf.is_null());
        assert!(last_error().contains("not regular"));

        let (_b, b) = cstrs(&["1/0"]);
        assert_eq!(unsafe { jfrac_jfraction_new(b.as_ptr(), 1, ptr::null(), 0, &mut jf) }, JfracStatus::Domain);
        assert_eq!(unsafe { jfrac_jfraction_new(ptr::null(), 1, ptr::null(), 0, &mut jf) }, JfracStatus::NullPointer);
        let fam = CString::new("nope").unwrap();
        assert_eq!(unsafe { jfrac_jfraction_from_family(fam.as_ptr(), ptr::null(), 3, &mut jf) }, JfracStatus::InvalidParams);
        assert_eq!(unsafe { jfrac_tableau_degree(ptr::null(), ptr::null_mut()) }, JfracStatus::NullPointer);
        unsafe { jfrac_jfraction_free(ptr::null_mut()) };
    }

    #[test]
    fn verify_filtered_suite() {
        let pat = CString::new("little_*").unwrap();
        let mut suite = ptr::null_mut();
        assert_eq!(unsafe { jfrac_verify(pat.as_ptr(), 128, &mut suite) }, JfracStatus::Ok);
        let (mut total, mut passed) = (0, 0);
        assert_eq!(unsafe { jfrac_suite_counts(suite, &mut total, &mut passed) }, JfracStatus::Ok);
        assert_eq!((total, passed), (2, 2));
        let (mut id, mut ok) = (ptr::null_mut(), false);
        assert_eq!(unsafe { jfrac_suite_report(suite, 1, &mut id, &mut ok) }, JfracStatus::Ok);
        assert_eq!((take(id).as_str(), ok), ("little_qj_alt", true));
        let mut j = ptr::null_mut();
        assert_eq!(unsafe { jfrac_suite_report_json(suite, 0, &mut j) }, JfracStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(j)).unwrap();
        assert_eq!(v["id"], "little_qj");
        assert_eq!(unsafe { jfrac_suite_report(suite, 2, &mut id, &mut ok) }, JfracStatus::OutOfRange);
        unsafe { jfrac_suite_free(suite) };
    }
}
