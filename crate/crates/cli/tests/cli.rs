use std::process::Command;

use clap::Parser;
use simspec_cli::{render, run, RunConfig, Status};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simspec"))
}

fn run_args(args: &[&str]) -> (String, Status) {
    let config = RunConfig::try_parse_from(std::iter::once("simspec").chain(args.iter().copied())).unwrap();
    let (report, status) = run(&config).unwrap();
    (render(&report, config.format), status)
}

#[test]
fn reports_are_byte_reproducible() {
    for args in [
        &["check", "a2", "--q", "7"][..],
        &["search", "--case", "a3-2w2", "--q", "5", "--family", "sigma_weyl_t"],
        &["spectrum", "--case", "a2-adjoint", "--q", "7", "--element", r#"{"sigma_power":1,"weyl_id":"w","torus":[3,1]}"#],
        &["--format", "text", "check", "induced-negative", "--q", "5"],
    ] {
        let (a, _) = run_args(args);
        let (b, _) = run_args(args);
        assert_eq!(a, b, "{:?}", args);
        assert!(a.ends_with('\n'));
    }
}

#[test]
fn thread_count_does_not_change_the_report() {
    let out = |threads: &str| {
        bin()
            .args(["search", "--case", "a2-adjoint", "--q", "11", "--family", "sigma_weyl_t"])
            .env("SPECTRA_THREADS", threads)
            .output()
            .unwrap()
    };
    let (one, four) = (out("1"), out("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code().unwrap();
    assert_eq!(code(&["check", "a2", "--q", "7"]), 0);
    assert_eq!(code(&["check", "a3-negative", "--q", "5"]), 0);
    // zero weight space carries (x+1)^2, not x^2+x+1
    assert_eq!(code(&["v0", "--q", "4"]), 3);
    assert_eq!(code(&["check", "a2", "--q", "9"]), 1);
    assert_eq!(code(&["check", "d4", "--q", "7"]), 1);
    assert_eq!(code(&["search", "--case", "a2-adjoint", "--q", "7", "--family", "sigma_weyl_t", "--budget", "5"]), 1);
    assert_eq!(code(&["spectrum", "--case", "a2-adjoint", "--q", "7", "--element", "not json"]), 1);
    assert_eq!(code(&["nonsense"]), 2);
}

#[test]
fn budget_exhaustion_still_writes_a_partial_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("partial.json");
    let out = bin()
        .args(["search", "--case", "a2-adjoint", "--q", "7", "--family", "sigma_weyl_t", "--budget", "5", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["report"]["candidates_tested"], 5);
    assert_eq!(v["report"]["exhaustive"], false);
}

#[test]
fn filter_keeps_the_triality_row() {
    let (text, status) = run_args(&["filter", "--type", "D4", "--p", "2", "--sigma-order", "3"]);
    assert_eq!(status, Status::Ok);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(!v["report"]["rows"].as_array().unwrap().is_empty());
}

#[test]
fn text_format_lists_table_rows() {
    let (text, status) = run_args(&["--format", "text", "table1", "verify"]);
    assert!(text.lines().any(|l| l.contains("G2") && l.ends_with("match")));
    assert!(matches!(status, Status::Ok | Status::ClaimMismatch));
}
