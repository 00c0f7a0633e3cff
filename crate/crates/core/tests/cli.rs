use std::io::Write;
use std::process::{Command, Output, Stdio};

fn minseq(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_minseq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn minseq");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = minseq(args, "");
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn valid_and_invalid() {
    assert_eq!(run(&["valid", "P, ~P"]), (0, "valid\n".into()));
    assert_eq!(run(&["valid", "P, Q"]), (1, "invalid\n".into()));
}

#[test]
fn minimal_and_minimize() {
    assert_eq!(run(&["minimal", "P, ~P"]).0, 0);
    assert_eq!(run(&["minimal", "P, ~P, Q"]), (1, "not minimal\n".into()));
    assert_eq!(run(&["minimize", "Q, P, ~P"]), (0, "P, ~P\n".into()));
    assert_eq!(run(&["minimize", "P"]), (1, "invalid\n".into()));
}

#[test]
fn parse_renders_canonically() {
    assert_eq!(
        run(&["parse", "((P&Q)|(~Q&P))|~P"]),
        (0, "(P & Q | ~Q & P) | ~P\n".into())
    );
}

#[test]
fn parse_error_is_usage() {
    let out = minseq(&["valid", "P &"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("byte 3"));
}

#[test]
fn prove_rejects_invalid() {
    assert_eq!(run(&["prove", "P & ~P"]), (1, "not valid\n".into()));
}

#[test]
fn random_policy_needs_seed() {
    assert_eq!(run(&["prove", "P | ~P", "--policy", "random"]).0, 2);
    let a = run(&["prove", "P & Q | ~P, ~Q | P", "--policy", "random", "--seed", "5"]);
    let b = run(&["prove", "P & Q | ~P, ~Q | P", "--policy", "random", "--seed", "5"]);
    assert_eq!(a, b);
}

#[test]
fn prove_pipes_into_check() {
    let (code, proof) = run(&["prove", "((P&Q)|(~Q&P))|~P"]);
    assert_eq!(code, 0);
    let out = minseq(&["check", "--system", "mp", "-"], &proof);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ok\n");
    let out = minseq(&["check", "--system", "mp-", "-"], &proof);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn prove_into_other_system() {
    let (code, proof) = run(&["prove", "((P&Q)|(~Q&P))|~P", "--system", "pp"]);
    assert_eq!(code, 0);
    let out = minseq(&["check", "--system", "pp", "-"], &proof);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn elaborate_from_stdin() {
    let (_, proof) = run(&["prove", "P | ~P"]);
    let out = minseq(&["elaborate", "--from", "-", "--to", "gs1p"], &proof);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let out = minseq(&["check", "--system", "gs1p", "-"], &text);
    assert_eq!(out.status.code(), Some(0));
    let out = minseq(&["elaborate", "--to", "plus"], &proof);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_reports_violations() {
    let out = minseq(&["check", "--system", "mp"], "(ax [P, ~Q])");
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("root: "), "{text}");
    let out = minseq(&["check", "--system", "mp"], "(bogus [P])");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_exit_codes() {
    assert_eq!(
        run(&["search", "--system", "mp-", "((P&Q)|(~Q&P))|~P"]),
        (1, "underivable (definitive)\n".into())
    );
    let (code, text) = run(&["search", "--system", "np", "((P&Q)|(~Q&P))|~P"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("derivable\n"));
    let (code, text) = run(&["search", "--system", "pp", "P, ~P, Q"]);
    assert_eq!((code, text.as_str()), (3, "no proof within caps\n"));
}

#[test]
fn contains_systems() {
    assert_eq!(run(&["contains", "gs1p", "mp"]).0, 0);
    assert_eq!(run(&["contains", "mp-", "mp"]).0, 1);
    assert_eq!(run(&["contains", "gs1p", "bogus"]).0, 2);
}

#[test]
fn census_small_bound() {
    let out = minseq(&["census", "--max-connectives", "0", "--jobs", "1"], "");
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 65);
    assert!(text.starts_with("rules,predicted,empirical,class,witness,outcome,refuted\n"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn degrees_small_bound() {
    let (code, text) = run(&[
        "degrees",
        "--system",
        "pp",
        "--max-connectives",
        "1",
        "--max-formulas",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(text.contains("sequent-complete: fail: [P, ~P, Q]"), "{text}");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
