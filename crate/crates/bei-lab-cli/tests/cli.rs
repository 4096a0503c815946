//! End-to-end checks of the command-line surface.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bei-lab"))
}

fn stdout_of(args: &[&str]) -> (String, bool) {
    let out = bin().args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.success(),
    )
}

#[test]
fn analyze_star_reports_nonvanishing_indices() {
    let (out, ok) = stdout_of(&[
        "analyze",
        "--input",
        r#"{"n":4,"edges":[[1,2],[2,3],[2,4]]}"#,
        "--format",
        "json",
    ]);
    assert!(ok);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["is_block_graph"], true);
    assert_eq!(doc["profile"]["nonvanishing"], serde_json::json!([5, 6]));
    assert_eq!(doc["profile"]["cohen_macaulay"], false);
}

#[test]
fn analyze_k23_has_no_profile() {
    let (out, ok) = stdout_of(&[
        "analyze",
        "--input",
        r#"{"n":5,"edges":[[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]]}"#,
        "--format",
        "json",
    ]);
    assert!(ok);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["is_block_graph"], false);
    assert!(doc["profile"].is_null());
    // The primary decomposition itself still applies.
    assert!(doc["primes"].as_array().unwrap().len() >= 2);
}

#[test]
fn analyze_k2_depth_three() {
    let (out, ok) = stdout_of(&["analyze", "--input", "A_"]);
    assert!(ok);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["profile"]["depth"], 3);
    assert_eq!(doc["profile"]["cohen_macaulay"], true);
}

#[test]
fn corpus_n2_all_has_two_graphs() {
    let (out, ok) = stdout_of(&["corpus", "--exhaustive-n", "2"]);
    assert!(ok);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn corpus_n3_block_dedup_has_four_graphs() {
    let (out, ok) = stdout_of(&[
        "corpus",
        "--exhaustive-n",
        "3",
        "--filter",
        "block",
        "--dedup",
    ]);
    assert!(ok);
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn corpus_sample_is_deterministic() {
    let args = [
        "corpus",
        "--exhaustive-n",
        "4",
        "--sample",
        "3",
        "--seed",
        "7",
    ];
    let (a, ok_a) = stdout_of(&args);
    let (b, ok_b) = stdout_of(&args);
    assert!(ok_a && ok_b);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 3);
}

#[test]
fn verify_gprime_on_tree_passes_for_both_cut_vertices() {
    let (out, ok) = stdout_of(&[
        "verify",
        "--suite",
        "gprime",
        "--input",
        r#"{"n":5,"edges":[[1,2],[2,3],[3,4],[2,5]]}"#,
        "--format",
        "json",
    ]);
    assert!(ok);
    assert!(out.contains("v=2"));
    assert!(out.contains("v=3"));
    assert!(out.contains("0 failures"));
}

#[test]
fn verify_decomposition_exhaustive_n3() {
    let (out, ok) = stdout_of(&[
        "verify",
        "--suite",
        "decomposition",
        "--exhaustive-n",
        "3",
        "--output",
        "json",
    ]);
    assert!(ok);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["failures"], 0);
}

#[test]
fn verify_rejects_composite_prime() {
    let ok = bin()
        .args([
            "verify",
            "--suite",
            "decomposition",
            "--exhaustive-n",
            "3",
            "--prime",
            "32004",
        ])
        .output()
        .unwrap()
        .status
        .success();
    assert!(!ok);
}
