//! C ABI over the `minseq` library.
//!
//! Objects cross the boundary as opaque handles created by `*_parse` (or
//! returned through out-parameters) and released with the matching
//! `*_free`. Every fallible function returns a [`MinseqStatus`]; on failure
//! [`minseq_last_error_message`] describes the error for the calling thread.
//! Strings returned to the caller are released with [`minseq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use minseq::metatheory::{contains, elaborate};
use minseq::{
    check_derivation, is_minimal, is_valid, minimize, parse_derivation, parse_sequent, prove_minimal,
    search, Derivation, SearchBounds, SearchOutcome, Sequent, System,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinseqStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    InvalidArgument = 1,
    ParseError = 2,
    /// The sequent is not classically valid.
    NotValid = 3,
    /// The sequent is valid but not minimal.
    NotMinimal = 4,
    /// The derivation uses a rule the target system cannot simulate.
    NotContained = 5,
    /// A library invariant was violated; the call had no effect.
    Internal = 6,
}

/// Verdict of [`minseq_search`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinseqVerdict {
    Derivable = 0,
    UnderivableDefinitive = 1,
    UnderivableWithinCaps = 2,
    Exhausted = 3,
}

/// Opaque sequent handle.
pub struct MinseqSequent(Sequent);

/// Opaque system handle.
pub struct MinseqSystem(System);

/// Opaque derivation handle.
pub struct MinseqDerivation(Derivation);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let text = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("no interior nul"));
}

struct Fail(MinseqStatus, String);

fn fail<T>(status: MinseqStatus, msg: impl ToString) -> Result<T, Fail> {
    Err(Fail(status, msg.to_string()))
}

/// Runs `f`, recording any error and containing panics.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MinseqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            MinseqStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            MinseqStatus::Internal
        }
    }
}

unsafe fn utf8<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return fail(MinseqStatus::InvalidArgument, "null string");
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|_| fail(MinseqStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .map_or_else(|| fail(MinseqStatus::InvalidArgument, "null handle"), Ok)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return fail(MinseqStatus::InvalidArgument, "null out-parameter");
    }
    out.write(value);
    Ok(())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn minseq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn minseq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn minseq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a sequent such as `"P & Q, ~P"`.
///
/// # Safety
/// `input` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_sequent_parse(
    input: *const c_char,
    out: *mut *mut MinseqSequent,
) -> MinseqStatus {
    guard(|| {
        let s = parse_sequent(utf8(input)?).or_else(|e| fail(MinseqStatus::ParseError, e))?;
        put(out, boxed(MinseqSequent(s)))
    })
}

/// Renders a sequent in canonical syntax.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_sequent_render(
    s: *const MinseqSequent,
    out: *mut *mut c_char,
) -> MinseqStatus {
    guard(|| put(out, c_string(get(s)?.0.to_string())))
}

/// # Safety
/// `s` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn minseq_sequent_free(s: *mut MinseqSequent) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_sequent_is_valid(
    s: *const MinseqSequent,
    out: *mut bool,
) -> MinseqStatus {
    guard(|| {
        let v = is_valid(&get(s)?.0).or_else(|e| fail(MinseqStatus::InvalidArgument, e))?;
        put(out, v)
    })
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_sequent_is_minimal(
    s: *const MinseqSequent,
    out: *mut bool,
) -> MinseqStatus {
    guard(|| {
        let v = is_minimal(&get(s)?.0).or_else(|e| fail(MinseqStatus::InvalidArgument, e))?;
        put(out, v)
    })
}

/// A minimal subsequent of a valid sequent.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_sequent_minimize(
    s: *const MinseqSequent,
    out: *mut *mut MinseqSequent,
) -> MinseqStatus {
    guard(|| {
        let s = &get(s)?.0;
        if !is_valid(s).or_else(|e| fail(MinseqStatus::InvalidArgument, e))? {
            return fail(MinseqStatus::NotValid, "sequent is not valid");
        }
        let m = minimize(s).or_else(|e| fail(MinseqStatus::Internal, e))?;
        put(out, boxed(MinseqSequent(m)))
    })
}

/// Parses a system: a preset name (`mp`, `gs1p`, ...) or a comma list of rules.
///
/// # Safety
/// `input` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_system_parse(
    input: *const c_char,
    out: *mut *mut MinseqSystem,
) -> MinseqStatus {
    guard(|| {
        let sys = System::parse(utf8(input)?).or_else(|e| fail(MinseqStatus::ParseError, e))?;
        put(out, boxed(MinseqSystem(sys)))
    })
}

/// # Safety
/// `s` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn minseq_system_free(s: *mut MinseqSystem) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Whether `outer` contains `inner` (every rule of `inner` is derived in `outer`).
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_system_contains(
    outer: *const MinseqSystem,
    inner: *const MinseqSystem,
    out: *mut bool,
) -> MinseqStatus {
    guard(|| put(out, contains(&get(outer)?.0, &get(inner)?.0)))
}

/// Builds the minimal-calculus derivation of a minimal sequent.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_prove(
    s: *const MinseqSequent,
    out: *mut *mut MinseqDerivation,
) -> MinseqStatus {
    guard(|| {
        let s = &get(s)?.0;
        if !is_valid(s).or_else(|e| fail(MinseqStatus::InvalidArgument, e))? {
            return fail(MinseqStatus::NotValid, "sequent is not valid");
        }
        let d = prove_minimal(s).or_else(|e| fail(MinseqStatus::NotMinimal, e))?;
        put(out, boxed(MinseqDerivation(d)))
    })
}

/// Parses the derivation format, e.g. `"(par [P | ~P] (ax [P, ~P]))"`.
///
/// # Safety
/// `input` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_derivation_parse(
    input: *const c_char,
    out: *mut *mut MinseqDerivation,
) -> MinseqStatus {
    guard(|| {
        let d = parse_derivation(utf8(input)?.trim())
            .or_else(|e| fail(MinseqStatus::ParseError, e))?;
        put(out, boxed(MinseqDerivation(d)))
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_derivation_render(
    d: *const MinseqDerivation,
    out: *mut *mut c_char,
) -> MinseqStatus {
    guard(|| put(out, c_string(get(d)?.0.to_string())))
}

/// # Safety
/// `d` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn minseq_derivation_free(d: *mut MinseqDerivation) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Checks a derivation in a system. `ok` receives the verdict; when it is
/// false the last error message lists the violations.
///
/// # Safety
/// Both handles must be live; `ok` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_check(
    sys: *const MinseqSystem,
    d: *const MinseqDerivation,
    ok: *mut bool,
) -> MinseqStatus {
    let mut violations = String::new();
    let status = guard(|| {
        let report = check_derivation(&get(sys)?.0, &get(d)?.0);
        violations = report
            .violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n");
        put(ok, report.ok())
    });
    if status == MinseqStatus::Ok {
        set_error(violations);
    }
    status
}

/// Rewrites a derivation into `target`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minseq_elaborate(
    d: *const MinseqDerivation,
    target: *const MinseqSystem,
    out: *mut *mut MinseqDerivation,
) -> MinseqStatus {
    guard(|| {
        let e = elaborate(&get(d)?.0, &get(target)?.0)
            .or_else(|e| fail(MinseqStatus::NotContained, e))?;
        put(out, boxed(MinseqDerivation(e)))
    })
}

/// Backward proof search. Zero caps select the defaults. When the verdict
/// is `Derivable` and `proof` is non-null, it receives the derivation.
///
/// # Safety
/// Both handles must be live; `verdict` must be writable; `proof` may be null.
#[no_mangle]
pub unsafe extern "C" fn minseq_search(
    sys: *const MinseqSystem,
    s: *const MinseqSequent,
    max_width: usize,
    max_depth: usize,
    verdict: *mut MinseqVerdict,
    proof: *mut *mut MinseqDerivation,
) -> MinseqStatus {
    guard(|| {
        let s = &get(s)?.0;
        let mut b = SearchBounds::for_goal(s);
        if max_width > 0 {
            b.max_width = max_width;
        }
        if max_depth > 0 {
            b.max_depth = max_depth;
        }
        let (v, d) = match search(&get(sys)?.0, s, &b) {
            SearchOutcome::Derivable(d) => (MinseqVerdict::Derivable, Some(d)),
            SearchOutcome::Underivable { definitive: true } => {
                (MinseqVerdict::UnderivableDefinitive, None)
            }
            SearchOutcome::Underivable { definitive: false } => {
                (MinseqVerdict::UnderivableWithinCaps, None)
            }
            SearchOutcome::Exhausted => (MinseqVerdict::Exhausted, None),
        };
        put(verdict, v)?;
        if !proof.is_null() {
            proof.write(d.map_or(ptr::null_mut(), |d| boxed(MinseqDerivation(d))));
        }
        Ok(())
    })
}
