//! End-to-end checks of the installed binary: exit codes, determinism,
//! round-trips through serialized plans, and the bench contract.

use std::path::PathBuf;
use std::process::{Command, Output};

use pcopt::{generate, tree_pc_opt, Family};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pcopt"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn temp_file(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pcopt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}

#[test]
fn color_verify_roundtrip_through_file() {
    let colored = run(&["color", "cycle(6)"]);
    assert!(colored.status.success());
    let plan_path = temp_file("c6-plan.json");
    std::fs::write(&plan_path, &colored.stdout).unwrap();

    let verified = run(&["verify", "cycle(6)", "--plan", plan_path.to_str().unwrap()]);
    assert_eq!(verified.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&verified)).unwrap();
    assert_eq!(report["ok"], true);
}

#[test]
fn tampered_plan_fails_with_exit_2() {
    let colored = run(&["color", "cycle(5)"]);
    assert!(colored.status.success());
    let mut plan: serde_json::Value = serde_json::from_str(&stdout_of(&colored)).unwrap();
    let first = plan["recolored"].as_array().unwrap()[0].clone();
    plan["recolored"] = serde_json::Value::Array(vec![first]);
    plan["cost"] = serde_json::json!(2);
    let plan_path = temp_file("c5-broken.json");
    std::fs::write(&plan_path, plan.to_string()).unwrap();

    let verified = run(&[
        "verify",
        "cycle(5)",
        "--plan",
        plan_path.to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert_eq!(verified.status.code(), Some(2));
    let text = stdout_of(&verified);
    assert!(text.contains("ok: false"));
    assert!(text.contains("failing_pair: ("));
}

#[test]
fn input_errors_exit_1() {
    let missing = run(&["analyze", "/no/such/graph.txt"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&missing.stderr).is_empty());

    let unseeded = run(&["exact", "random_tree(6)"]);
    assert_eq!(unseeded.status.code(), Some(1));

    let csv_misuse = run(&["analyze", "path(4)", "--format", "csv"]);
    assert_eq!(csv_misuse.status.code(), Some(1));

    let bad_family = run(&["color", "blob(3)"]);
    assert_eq!(bad_family.status.code(), Some(1));
}

#[test]
fn infeasible_budget_and_cap_exit_3() {
    let exhausted = run(&["exact", "cycle(7)", "--budget", "2"]);
    assert_eq!(exhausted.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&exhausted)).unwrap();
    assert_eq!(report["status"], "budget_exceeded");
    assert_eq!(report["value"], serde_json::Value::Null);

    let capped = bin()
        .args(["analyze", "path(6)"])
        .env("PCOPT_VERTEX_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));

    let overridden = bin()
        .args(["analyze", "path(6)", "--cap", "12"])
        .env("PCOPT_VERTEX_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["analyze", "random_connected(10,0.4)", "--seed", "5"][..],
        &["color", "random_tree(9)", "--seed", "3", "--trace"][..],
        &["exact", "random_connected(8,0.5)", "--seed", "11"][..],
        &["probe", "cycle(7)", "--format", "text"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert!(first.status.success(), "args {args:?}");
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}

#[test]
fn color_trace_flag_controls_trace() {
    let bare = run(&["color", "path(8)"]);
    let plan: serde_json::Value = serde_json::from_str(&stdout_of(&bare)).unwrap();
    assert!(plan["trace"].is_null());

    let traced = run(&["color", "path(8)", "--trace"]);
    let plan: serde_json::Value = serde_json::from_str(&stdout_of(&traced)).unwrap();
    assert!(plan["trace"].is_object());
    assert!(plan["trace"]["branch"].is_string());
}

#[test]
fn verify_witnesses_flag_adds_paths() {
    let colored = run(&["color", "path(5)"]);
    let plan_path = temp_file("p5-plan.json");
    std::fs::write(&plan_path, &colored.stdout).unwrap();

    let plain = run(&["verify", "path(5)", "--plan", plan_path.to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&plain)).unwrap();
    assert!(report.get("witnesses").is_none());

    let with = run(&[
        "verify",
        "path(5)",
        "--plan",
        plan_path.to_str().unwrap(),
        "--witnesses",
    ]);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&with)).unwrap();
    let witnesses = report["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 5 * 4 / 2);
}

#[test]
fn graph_file_input_matches_family_input() {
    let g = generate(&Family::Cycle(6), None).unwrap();
    let path = temp_file("c6.txt");
    std::fs::write(&path, g.to_edge_list()).unwrap();

    let from_file = run(&["exact", path.to_str().unwrap()]);
    let from_family = run(&["exact", "cycle(6)"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_family.stdout);
}

#[test]
fn bench_tree_csv_contract() {
    let out = run(&["bench", "--family", "tree", "--max-n", "8", "--seed", "7"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("instance,alpha,bound,constructed_cost,exact_cost,time_ms")
    );
    let mut rows = 0usize;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 6, "row {line}");
        let constructed: usize = cells[3].parse().unwrap();
        let exact: usize = cells[4].parse().unwrap();
        let bound: usize = cells[2].parse().unwrap();
        assert!(constructed >= exact, "row {line}");
        assert!(constructed <= bound.max(exact), "row {line}");

        // instance reads random_tree(n)#s; the exact column must equal
        // the closed tree formula.
        let inner = cells[0]
            .strip_prefix("random_tree(")
            .and_then(|r| r.split_once(')'))
            .unwrap();
        let n: usize = inner.0.parse().unwrap();
        let seed: u64 = inner.1.strip_prefix('#').unwrap().parse().unwrap();
        let g = generate(&Family::RandomTree { n }, Some(seed)).unwrap();
        assert_eq!(exact, tree_pc_opt(&g, 25).unwrap(), "row {line}");
        rows += 1;
    }
    assert_eq!(rows, 7);
}

#[test]
fn bench_is_deterministic_apart_from_timing() {
    let strip_timing = |text: String| -> Vec<String> {
        text.lines()
            .map(|l| l.rsplit_once(',').map_or(l.to_string(), |(rest, _)| rest.to_string()))
            .collect()
    };
    let first = run(&["bench", "--family", "cycle", "--max-n", "7"]);
    let second = run(&["bench", "--family", "cycle", "--max-n", "7"]);
    assert!(first.status.success());
    assert_eq!(
        strip_timing(stdout_of(&first)),
        strip_timing(stdout_of(&second))
    );
}
