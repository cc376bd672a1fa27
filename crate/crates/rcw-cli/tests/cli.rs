//! End-to-end runs of the installed binary: exit codes, output formats,
//! witness files.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use rcw::Model;

fn rcw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcw"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn scratch(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("rcw-cli-{}-{name}", std::process::id()));
    path
}

#[test]
fn an_underivable_sequent_exits_one_and_writes_its_witness() {
    let path = scratch("witness.json");
    let out = rcw(&[
        "decide",
        "--logic",
        "rcw",
        "--countermodel",
        path.to_str().unwrap(),
        "<w>p & <w>q |- <w>(p & q)",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not provable"));
    let witness = Model::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(witness.node_count(), 3);
    std::fs::remove_file(&path).ok();
}

#[test]
fn a_derivable_sequent_exits_zero() {
    let out = rcw(&["decide", "--logic", "rj", "<w>(p & q) |- <w>p & <w>q"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("is provable"));
}

#[test]
fn a_malformed_sequent_exits_two() {
    let out = rcw(&["decide", "--logic", "rc", "p |-"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("parse error at byte"), "stderr was: {err}");
}

#[test]
fn the_sequent_can_come_from_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rcw"))
        .args(["decide", "--logic", "rj"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("the binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"<0>p & q |- <0>p\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn decide_emits_valid_json() {
    let out = rcw(&[
        "decide",
        "--logic",
        "rcw",
        "--format",
        "json",
        "<w>p & <w>q |- <w>(p & q)",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("stdout is JSON");
    assert_eq!(v["verdict"], "not provable");
    assert_eq!(v["countermodel"]["nodes"].as_array().map(Vec::len), Some(3));
}

#[test]
fn the_oracle_reports_a_one_leaf_proof_for_a_join_instance() {
    let out = rcw(&["oracle", "--logic", "rj", "<1>p & <0>q |- <1>(p & <0>q)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("join"), "stdout was: {text}");
}

#[test]
fn the_oracle_refutes_with_a_model() {
    let out = rcw(&[
        "oracle",
        "--logic",
        "rcw",
        "--format",
        "json",
        "<w>p & <w>q |- <w>(p & q)",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("stdout is JSON");
    assert_eq!(v["result"], "not provable");
    assert!(v["countermodel"].is_object());
}

#[test]
fn starved_budgets_exit_three() {
    let out = rcw(&[
        "oracle",
        "--logic",
        "rc",
        "--depth",
        "1",
        "--size-cap",
        "1",
        "--max-nodes",
        "1",
        "<2><2><2><2>p |- <0>p",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("inconclusive"));
}

#[test]
fn oversized_node_budgets_are_a_usage_error() {
    let out = rcw(&["oracle", "--max-nodes", "6", "p |- p"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn canonical_stages_render_in_all_formats() {
    let out = rcw(&["canonical", "--stage", "tree", "<1>p & <0>(q & <0>p)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("nodes: 4 (root 0)"));

    let out = rcw(&["canonical", "--stage", "rcw", "--format", "json", "<1>p & <0>q"]);
    assert_eq!(out.status.code(), Some(0));
    let m = Model::from_json(&stdout(&out)).expect("stdout is a model");
    assert_eq!(m.node_count(), 3);

    let out = rcw(&["canonical", "--stage", "rj", "--format", "dot", "<1><0>p"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("digraph"));
}

#[test]
fn bench_prints_both_families_and_a_slope() {
    let out = rcw(&["bench", "--logic", "rj", "--start", "8", "--doublings", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("family wide"));
    assert!(text.contains("family chain"));
    assert!(text.contains("fitted log-log slope"));
}

#[test]
fn bench_json_is_structured_and_single_rungs_skip_the_slope() {
    let out = rcw(&[
        "bench",
        "--logic",
        "rc",
        "--start",
        "8",
        "--doublings",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("stdout is JSON");
    let families = v["families"].as_array().unwrap();
    assert_eq!(families.len(), 2);
    assert!(families[0]["slope"].is_null());
}
