use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use minseq_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(minseq_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    minseq_string_free(s);
    out
}

unsafe fn sequent(text: &str) -> *mut MinseqSequent {
    let mut s = ptr::null_mut();
    assert_eq!(minseq_sequent_parse(c(text).as_ptr(), &mut s), MinseqStatus::Ok);
    s
}

unsafe fn system(text: &str) -> *mut MinseqSystem {
    let mut s = ptr::null_mut();
    assert_eq!(minseq_system_parse(c(text).as_ptr(), &mut s), MinseqStatus::Ok);
    s
}

#[test]
fn parse_render_and_validity() {
    unsafe {
        let s = sequent("((P&Q)|(~Q&P))|~P");
        let mut text = ptr::null_mut();
        assert_eq!(minseq_sequent_render(s, &mut text), MinseqStatus::Ok);
        assert_eq!(take(text), "(P & Q | ~Q & P) | ~P");
        let (mut valid, mut minimal) = (false, false);
        assert_eq!(minseq_sequent_is_valid(s, &mut valid), MinseqStatus::Ok);
        assert_eq!(minseq_sequent_is_minimal(s, &mut minimal), MinseqStatus::Ok);
        assert!(valid && minimal);
        minseq_sequent_free(s);
    }
}

#[test]
fn parse_errors_set_message() {
    unsafe {
        let mut s = ptr::null_mut();
        let status = minseq_sequent_parse(c("P &").as_ptr(), &mut s);
        assert_eq!(status, MinseqStatus::ParseError);
        assert!(s.is_null());
        assert!(last_error().contains("byte 3"), "{}", last_error());
        assert_eq!(
            minseq_sequent_parse(ptr::null(), &mut s),
            MinseqStatus::InvalidArgument
        );
        let mut sys = ptr::null_mut();
        assert_eq!(
            minseq_system_parse(c("bogus").as_ptr(), &mut sys),
            MinseqStatus::ParseError
        );
    }
}

#[test]
fn null_out_parameters_rejected() {
    unsafe {
        let s = sequent("P, ~P");
        assert_eq!(
            minseq_sequent_is_valid(s, ptr::null_mut()),
            MinseqStatus::InvalidArgument
        );
        assert_eq!(
            minseq_sequent_is_valid(ptr::null(), &mut false),
            MinseqStatus::InvalidArgument
        );
        minseq_sequent_free(s);
        minseq_sequent_free(ptr::null_mut());
    }
}

#[test]
fn minimize_and_prove() {
    unsafe {
        let s = sequent("Q, P, ~P");
        let mut m = ptr::null_mut();
        assert_eq!(minseq_sequent_minimize(s, &mut m), MinseqStatus::Ok);
        let mut text = ptr::null_mut();
        minseq_sequent_render(m, &mut text);
        assert_eq!(take(text), "P, ~P");
        let mut d = ptr::null_mut();
        assert_eq!(minseq_prove(s, &mut d), MinseqStatus::NotMinimal);
        let bad = sequent("P & ~P");
        assert_eq!(minseq_prove(bad, &mut d), MinseqStatus::NotValid);
        assert_eq!(minseq_sequent_minimize(bad, &mut m), MinseqStatus::NotValid);
        minseq_sequent_free(m);
        minseq_sequent_free(s);
        minseq_sequent_free(bad);
    }
}

#[test]
fn prove_check_elaborate() {
    unsafe {
        let s = sequent("((P&Q)|(~Q&P))|~P");
        let mut d = ptr::null_mut();
        assert_eq!(minseq_prove(s, &mut d), MinseqStatus::Ok);
        let (mp, mp_minus, pp) = (system("mp"), system("mp-"), system("pp"));
        let mut ok = false;
        assert_eq!(minseq_check(mp, d, &mut ok), MinseqStatus::Ok);
        assert!(ok);
        assert_eq!(minseq_check(mp_minus, d, &mut ok), MinseqStatus::Ok);
        assert!(!ok);
        assert!(last_error().contains("RuleNotInSystem"), "{}", last_error());
        let mut e = ptr::null_mut();
        assert_eq!(minseq_elaborate(d, pp, &mut e), MinseqStatus::Ok);
        assert_eq!(minseq_check(pp, e, &mut ok), MinseqStatus::Ok);
        assert!(ok);
        let plus = system("plus");
        let mut f = ptr::null_mut();
        assert_eq!(minseq_elaborate(d, plus, &mut f), MinseqStatus::NotContained);
        let mut contained = false;
        assert_eq!(minseq_system_contains(pp, mp, &mut contained), MinseqStatus::Ok);
        assert!(contained);
        assert_eq!(minseq_system_contains(mp_minus, mp, &mut contained), MinseqStatus::Ok);
        assert!(!contained);
        for h in [mp, mp_minus, pp, plus] {
            minseq_system_free(h);
        }
        minseq_derivation_free(d);
        minseq_derivation_free(e);
        minseq_sequent_free(s);
    }
}

#[test]
fn derivation_roundtrip() {
    unsafe {
        let text = "(par [P | ~P] (ax [P, ~P]))";
        let mut d = ptr::null_mut();
        assert_eq!(minseq_derivation_parse(c(text).as_ptr(), &mut d), MinseqStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(minseq_derivation_render(d, &mut out), MinseqStatus::Ok);
        assert_eq!(take(out), text);
        minseq_derivation_free(d);
        assert_eq!(
            minseq_derivation_parse(c("(nope [P])").as_ptr(), &mut d),
            MinseqStatus::ParseError
        );
    }
}

#[test]
fn search_verdicts() {
    unsafe {
        let s = sequent("((P&Q)|(~Q&P))|~P");
        let (mp_minus, np) = (system("mp-"), system("np"));
        let mut v = MinseqVerdict::Exhausted;
        let mut d = ptr::null_mut();
        assert_eq!(minseq_search(mp_minus, s, 0, 0, &mut v, &mut d), MinseqStatus::Ok);
        assert_eq!(v, MinseqVerdict::UnderivableDefinitive);
        assert!(d.is_null());
        assert_eq!(minseq_search(np, s, 0, 0, &mut v, &mut d), MinseqStatus::Ok);
        assert_eq!(v, MinseqVerdict::Derivable);
        let mut ok = false;
        minseq_check(np, d, &mut ok);
        assert!(ok);
        assert_eq!(minseq_search(np, s, 0, 0, &mut v, ptr::null_mut()), MinseqStatus::Ok);
        minseq_derivation_free(d);
        minseq_system_free(mp_minus);
        minseq_system_free(np);
        minseq_sequent_free(s);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(minseq_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("include/minseq.h"),
    )
    .unwrap();
    for name in [
        "typedef struct MinseqSequent MinseqSequent;",
        "MINSEQ_STATUS_NOT_CONTAINED = 5",
        "MINSEQ_VERDICT_EXHAUSTED = 3",
        "minseq_search(",
        "minseq_last_error_message(void)",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "minseq.h"

int main(void) {
    MinseqSequent *s = NULL;
    MinseqSystem *mp = NULL;
    MinseqDerivation *d = NULL;
    char *text = NULL;
    bool ok = false;
    if (minseq_sequent_parse("P | ~P", &s) != MINSEQ_STATUS_OK) return 1;
    if (minseq_system_parse("mp", &mp) != MINSEQ_STATUS_OK) return 2;
    if (minseq_prove(s, &d) != MINSEQ_STATUS_OK) return 3;
    if (minseq_check(mp, d, &ok) != MINSEQ_STATUS_OK || !ok) return 4;
    if (minseq_derivation_render(d, &text) != MINSEQ_STATUS_OK) return 5;
    printf("%s\n", text);
    minseq_string_free(text);
    if (minseq_sequent_parse("P &", &s) != MINSEQ_STATUS_PARSE_ERROR) return 6;
    if (strlen(minseq_last_error_message()) == 0) return 7;
    minseq_derivation_free(d);
    minseq_system_free(mp);
    minseq_sequent_free(s);
    return 0;
}
"#;

/// Compiles a C client against the header and static library when a C
/// compiler and the archive are available.
#[test]
fn c_client_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(Into::into)
        .unwrap_or_else(|| manifest.join("../../target"));
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .and_then(Path::parent)
        .map(Path::to_path_buf)
        .unwrap_or_else(|| target.join("debug"));
    let archive = profile_dir.join("libminseq_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !archive.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or {} missing", archive.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("minseq-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("client.c");
    let exe = dir.join("client");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C client failed to compile");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "(par [P | ~P] (ax [P, ~P]))\n"
    );
    let _ = std::fs::remove_dir_all(&dir);
}
