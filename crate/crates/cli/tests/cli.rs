//! End-to-end tests against the compiled binary: flag handling, exit
//! codes, output shapes, and byte determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cayley-trees"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output is UTF-8")
}

fn run_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--format", "json"]);
    serde_json::from_str(&run_ok(&full)).expect("output parses as JSON")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("process exits normally")
}

#[test]
fn analyze_reports_the_multi_valued_estimate_tree() {
    let v = run_json(&["analyze", "t2"]);
    assert_eq!(v["n"], 9);
    assert_eq!(v["exact_diameter"], 18);
    assert_eq!(v["f_bound"], 22);
    assert_eq!(v["beta_set"], serde_json::json!([20, 22]));
    assert_eq!(v["beta_max"], 22);
    assert_eq!(v["gap_f"], 4);
    assert_eq!(v["sharp"], false);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn analyze_handles_the_smallest_tree() {
    let v = run_json(&["analyze", "1-2"]);
    assert_eq!(v["exact_diameter"], 1);
    assert_eq!(v["f_bound"], 1);
    assert_eq!(v["beta_set"], serde_json::json!([1]));
    assert_eq!(v["sharp"], true);
    assert_eq!(v["gap_f"], 0);
}

#[test]
fn analyze_nulls_oversize_quantities_with_notes() {
    let v = run_json(&["analyze", "path-11"]);
    assert_eq!(v["exact_diameter"], Value::Null);
    assert_eq!(v["f_bound"], Value::Null);
    assert_eq!(v["beta_set"], serde_json::json!([55]));
    assert_eq!(v["sharp"], Value::Null);
    assert!(!v["notes"].as_array().unwrap().is_empty());
}

#[test]
fn table1_csv_matches_published_statistics() {
    let out = run_ok(&["table1", "5", "7", "--format", "csv"]);
    assert_eq!(
        out,
        "n,s_n,h_n,delta_n,gamma_n\n5,3,2,1,1\n6,6,4,2,1\n7,11,3,3,1\n"
    );
}

#[test]
fn exit_codes_split_validation_from_scale() {
    // validation problems: exit 1
    assert_eq!(exit_code(&["analyze", "1-1"]), 1);
    assert_eq!(exit_code(&["analyze", "1-2,2-1"]), 1);
    assert_eq!(exit_code(&["analyze", "no-such-fixture"]), 1);
    assert_eq!(exit_code(&["table1", "4", "7"]), 1);
    assert_eq!(exit_code(&["caterpillar", "4"]), 1);
    assert_eq!(exit_code(&["sort", "path-3", "[2,1]"]), 1);
    assert_eq!(exit_code(&["analyze", "path-5", "--format", "csv"]), 1);
    assert_eq!(exit_code(&["--no-such-flag", "analyze", "1-2"]), 1);
    // beyond desk scale: exit 2
    assert_eq!(exit_code(&["table1", "5", "10"]), 2);
    assert_eq!(exit_code(&["conjectures", "10"]), 2);
    assert_eq!(exit_code(&["enumerate-trees", "11"]), 2);
    assert_eq!(exit_code(&["analyze", "path-4", "--max-n", "12"]), 2);
    // help and version are successes
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
}

#[test]
fn caterpillar_shows_the_guaranteed_gap() {
    let v = run_json(&["caterpillar", "6"]);
    assert_eq!(v["f_bound"], 13);
    assert_eq!(v["f_bound_swept"], true);
    assert_eq!(v["gap_at_least"], 2);
    let diameter = v["exact_diameter"].as_u64().unwrap();
    let gap = v["gap"].as_u64().unwrap();
    assert_eq!(gap, 13 - diameter);
    assert!(gap >= 2);
}

#[test]
fn sort_compares_word_length_with_exact_distance() {
    let star = run_json(&["sort", "star-5", "(2,3)"]);
    assert_eq!(star["ak_word_length"], 3);
    assert_eq!(star["exact_distance"], 3);
    assert_eq!(star["ak_optimal"], true);
    assert_eq!(star["f_t"], 3);

    let path = run_json(&["sort", "path-5", "[5,4,3,2,1]"]);
    assert_eq!(path["ak_word_length"], 10);
    assert_eq!(path["exact_distance"], 10);
    assert_eq!(path["ak_optimal"], true);
}

#[test]
fn sort_replays_the_long_spider_word() {
    let v = run_json(&[
        "sort",
        "theorem6-7v",
        "(2,4)(3,6)(5,7)",
        "--replay",
        "1-2,1-4,1-2,2-3,1-2,1-6,6-7,1-2,2-3,4-5,1-4,1-6,6-7,1-4,4-5",
    ]);
    assert_eq!(v["f_t"], 15);
    let replay = &v["replay"];
    assert_eq!(replay["valid"], true);
    assert_eq!(replay["length"], 15);
    assert_eq!(replay["first_invalid"], Value::Null);
    assert_eq!(replay["sorted"], true);
    // the replayed word is one move longer than the true distance
    let exact = v["exact_distance"].as_u64().unwrap();
    assert!(exact < 15);
}

#[test]
fn sort_reports_an_inadmissible_replay_step() {
    let v = run_json(&["sort", "path-3", "[1,2,3]", "--replay", "1-2,1-2"]);
    assert_eq!(v["replay"]["first_invalid"], 1);
    assert_eq!(v["replay"]["valid"], false);
    assert_eq!(v["ak_word_length"], 0);
}

#[test]
fn enumerate_trees_lists_all_classes() {
    let v = run_json(&["enumerate-trees", "7"]);
    assert_eq!(v["count"], 11);
    assert_eq!(v["trees"].as_array().unwrap().len(), 11);

    let csv = run_ok(&["enumerate-trees", "7", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 12, "header plus one row per tree");
    assert!(csv.starts_with("index,edges,canonical\n"));
    // the edge list field contains commas, so it must be quoted
    assert!(csv.lines().nth(1).unwrap().contains('"'));
}

#[test]
fn conjecture_scan_reports_structure() {
    let v = run_json(&["conjectures", "5"]);
    assert_eq!(v["trees_scanned"], 7);
    assert!(v["beta_below_diameter"].as_array().is_some());
    assert!(v["multi_valued_beta"].as_array().is_some());
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["analyze", "t1", "--format", "json"],
        vec!["analyze", "theorem6-5v"],
        vec!["table1", "5", "6", "--format", "csv"],
        vec!["sort", "star-4", "(2,3)", "--format", "json"],
    ] {
        assert_eq!(run_ok(&args), run_ok(&args), "args: {args:?}");
    }
}

#[test]
fn cache_directory_is_populated_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = run_ok(&[
        "analyze",
        "star-6",
        "--cache-dir",
        cache,
        "--format",
        "json",
    ]);
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let name = entries[0].as_ref().unwrap().file_name();
    assert!(name.to_str().unwrap().starts_with("bfs-v1-n6-"));
    let second = run_ok(&[
        "analyze",
        "star-6",
        "--cache-dir",
        cache,
        "--format",
        "json",
    ]);
    assert_eq!(first, second);
}
