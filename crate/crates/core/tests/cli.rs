//! The binary's output and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fullcomm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_summary_and_formats() {
    let o = run(&["enumerate", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("total: 48\n"));

    let o = run(&["enumerate", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["packets"].as_array().unwrap().len(), 5);

    let o = run(&["enumerate", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 49);
}

#[test]
fn rank_three_is_a_usage_error() {
    let o = run(&["enumerate", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n must be ≥ 4"));
    assert_eq!(run(&["catalan", "--rows", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--n", "5", "--check", "bogus"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn packets_tables() {
    let text = stdout(&run(&["packets", "--n", "4"]));
    assert!(text.contains("k=2: 1 collection × 9 words"));
    let text = stdout(&run(&["packets", "--n", "7"]));
    let sizes: Vec<&str> = text
        .lines()
        .map(|l| l.split(": ").nth(1).unwrap().split(' ').next().unwrap())
        .collect();
    assert_eq!(sizes, ["31", "16", "8", "4", "2", "1", "1", "1"]);
    let text = stdout(&run(&["packets", "--n", "4", "--k", "4"]));
    assert_eq!(text.lines().filter(|l| l.starts_with("    ")).count(), 14);
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--n", "6", "--check", "identity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("593 = 593 PASS"));
    let o = run(&["verify", "--n", "5", "--check", "bijections"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "verify",
        "--n",
        "4",
        "--check",
        "klr,weightgraph",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn catalan_rows() {
    let text = stdout(&run(&["catalan", "--rows", "8"]));
    assert_eq!(text.lines().last(), Some("1 7 27 75 165 297 429 429"));
    assert_eq!(stdout(&run(&["catalan", "--rows", "1"])), "1\n");
    let o = run(&["catalan", "--rows", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 40);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let a = run(&[
        "verify",
        "--n",
        "5",
        "--check",
        "bijections,klr",
        "--jobs",
        "1",
    ]);
    let b = run(&[
        "verify",
        "--n",
        "5",
        "--check",
        "bijections,klr",
        "--jobs",
        "4",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("fullcomm-{}.csv", std::process::id()));
    let o = run(&[
        "packets",
        "--n",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("n,k,suffix,word\n"));
    assert_eq!(text.lines().count(), 49);
}
