//! End-to-end behavior of the binary: exit codes, diagnostics, piping.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_digraph-stats"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn gen_output_pipes_into_analysis_subcommands() {
    let gen = run(&["gen", "gbeta", "--n", "12", "--beta", "4"]);
    assert!(gen.status.success());
    let edges = stdout_str(&gen);
    assert_eq!(edges.lines().count(), 50); // header + n line + 48 edges

    for args in [
        vec!["census", "-"],
        vec!["kfree", "-", "--k", "2"],
        vec!["count", "-", "--s", "3", "--kind", "induced"],
        vec!["cig-report", "-"],
        vec!["bounds", "-"],
    ] {
        let out = run_with_stdin(&args, &edges);
        assert!(
            out.status.success(),
            "{args:?} failed: {}",
            stderr_str(&out)
        );
    }

    let report = run_with_stdin(&["cig-report", "-"], &edges);
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&report)).unwrap();
    assert_eq!(json["p3"], 108);
    assert_eq!(json["alpha"], 5);
}

#[test]
fn census_rejects_digons_loudly() {
    let out = run_with_stdin(&["census", "-"], "2\n0 1\n1 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("digon"));
}

#[test]
fn malformed_input_reports_line_numbers() {
    let out = run_with_stdin(&["census", "-"], "3\n0 1\n0 1\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("line 3"));

    let out = run_with_stdin(&["kfree", "-", "--k", "2"], "3\n0 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("line 2"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // --seed is mandatory for randomized subcommands
    let out = run(&["search", "--objective", "p3", "--free", "2", "--n", "4", "--steps", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_guard_exits_two() {
    let out = run(&["verify", "thomasse", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("limit"));
}

#[test]
fn non_interval_input_is_rejected_by_cig_report() {
    let out = run_with_stdin(&["cig-report", "-"], "4\n0 2\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("interval"));
}

#[test]
fn search_is_seeded_and_bounded() {
    let out = run(&[
        "search",
        "--objective",
        "p3",
        "--free",
        "2",
        "--n",
        "4",
        "--steps",
        "200",
        "--seed",
        "5",
        "--cig-tiebreak",
    ]);
    assert!(out.status.success(), "{}", stderr_str(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(json["best_value"], 4);
    assert_eq!(json["bounds"][0]["holds"], true);
}

#[test]
fn gen_with_removals_roundtrips_via_cig_report() {
    let gen = run(&[
        "gen", "gbeta", "--n", "12", "--beta", "5", "--remove-x", "0,3-8",
    ]);
    assert!(gen.status.success());
    let piped = run_with_stdin(&["cig-report", "-"], &stdout_str(&gen));
    assert!(piped.status.success());
    let via_spec = run(&["cig-report", "gbeta:12:5:x=0,3"]);
    assert_eq!(stdout_str(&piped), stdout_str(&via_spec));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&via_spec)).unwrap();
    assert_eq!(json["p3"], 72);
}

#[test]
fn p4_report_on_layered_tournament() {
    let gen = run(&["gen", "layered", "--n", "8"]);
    let out = run_with_stdin(&["p4-report", "-"], &stdout_str(&gen));
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(json["identities"]["residual_24p4_vs_4s_plus_r"], 0);
    assert!(json["bounds"].as_array().unwrap().iter().all(|b| b["holds"] == true));
}

#[test]
fn p4_report_rejects_graphs_with_short_cycles() {
    let out = run_with_stdin(&["p4-report", "-"], "3\n0 1\n1 2\n2 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("3-free"));
}
