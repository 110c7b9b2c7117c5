use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bruhat-forge")).args(args).output().expect("spawn")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json")
}

fn text(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn analyze_2431() {
    let v = json(&["analyze", "2431", "--family", "A", "--rank", "3"]);
    assert_eq!(v["schema"], "1");
    // (1+q+q²)(1+2q+q²)
    assert_eq!(v["P_w"], serde_json::json!([1, 3, 4, 3, 1]));
    assert_eq!(v["rationallySmooth"], true);
    assert_eq!(v["patternFlags"]["smooth"], true);
    assert_eq!(v["R_w"], v["P_w"]);
}

#[test]
fn analyze_identity_and_4231() {
    let v = json(&["analyze", "1234"]);
    assert_eq!(v["P_w"], serde_json::json!([1]));
    assert_eq!(v["length"], 0);

    let v = json(&["analyze", "4231"]);
    assert_eq!(v["rationallySmooth"], false);
    assert_eq!(v["P_w"], serde_json::json!([1, 3, 5, 6, 4, 1]));
    assert_eq!(v["R_w"], serde_json::json!([1, 4, 4, 4, 4, 1]));
    assert!(v["completeBpChain"].is_object());
}

#[test]
fn analyze_word_infers_rank() {
    let v = json(&["analyze", "s1s2s1"]);
    assert_eq!(v["P_w"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["rank"], 2);
}

#[test]
fn verify_sweeps_pass() {
    for (t, r) in [("pw-eq-rw", "5"), ("bp-four-way", "4"), ("split-pattern", "5")] {
        let v = json(&["verify", t, "--family", "A", "--max-rank", r]);
        assert_eq!(v["passed"], true, "{t}");
        assert_eq!(v["reports"][0]["counterexamples"], serde_json::json!([]));
    }
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "properties", "--trials", "50", "--jobs", "2"];
    assert_eq!(text(&args), text(&args));
}

#[test]
fn enumerate_counts() {
    assert_eq!(text(&["enumerate", "diagrams", "--path", "3", "--format", "text"]).trim(), "22");
    assert_eq!(text(&["enumerate", "smooth", "--family", "A", "--rank", "4", "--format", "text"]).trim(), "88");
    assert_eq!(
        text(&["enumerate", "series", "a", "--terms", "6", "--format", "text"]).trim(),
        "1 2 6 22 88 366"
    );
    let v = json(&["enumerate", "diagrams", "--cycle", "3"]);
    assert_eq!(v["count"], 31);
}

#[test]
fn export_interval_dot() {
    let dot = text(&["export", "interval", "s1s2s1"]);
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (6, 8));
}

#[test]
fn export_to_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("iv.json");
    let p = path.to_str().unwrap();
    let out = run(&["export", "interval", "321", "--format", "json", "--out", p]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "no-such-theorem"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "2x31"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "21", "--family", "Q"]).status.code(), Some(2));
}
