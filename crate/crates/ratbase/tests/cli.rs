//! End-to-end tests of the `ratbase` binary: the documented command-line
//! surface, output formats, error handling, and exit codes.

use std::process::{Command, Output};

fn ratbase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratbase"))
        .args(args)
        .env_remove("RATBASE_FRONTIER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = ratbase(args);
    assert!(
        out.status.success(),
        "`ratbase {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn convert_round_trips_the_documented_examples() {
    assert_eq!(stdout_of(&["convert", "--base", "3/2", "--int", "4"]), "212\n");
    assert_eq!(stdout_of(&["convert", "--base", "3/2", "--word", "212"]), "4\n");
    assert_eq!(stdout_of(&["convert", "--base", "3/2", "--int", "0"]), "ε\n");
}

#[test]
fn convert_handles_huge_integers_and_non_integer_words() {
    let big = "123456789012345678901234567890";
    let word = stdout_of(&["convert", "--base", "7/3", "--int", big]);
    let back = stdout_of(&["convert", "--base", "7/3", "--word", word.trim()]);
    assert_eq!(back.trim(), big);
    // A word that is not a canonical representation evaluates to a fraction.
    assert_eq!(stdout_of(&["convert", "--base", "3/2", "--word", "1"]), "1/2\n");
}

#[test]
fn convert_rejects_foreign_digits_and_missing_args() {
    let out = ratbase(&["convert", "--base", "3/2", "--word", "513"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("digit"));
    let out = ratbase(&["convert", "--base", "3/2"]);
    assert!(!out.status.success());
}

#[test]
fn convert_emits_json_with_string_numbers() {
    let text = stdout_of(&[
        "convert", "--base", "3/2", "--int", "4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["base"], "3/2");
    assert_eq!(v["int"], "4");
    assert_eq!(v["word"], "212");
    assert!(v["int"].is_string(), "numbers travel as strings");
}

#[test]
fn word_prints_the_three_canonical_prefixes() {
    let args = ["word", "--base", "3/2", "--node", "1", "--prefix-len", "7"];
    assert_eq!(stdout_of(&args), "1011000\n");
    let top = stdout_of(&[
        "word", "--base", "3/2", "--node", "1", "--kind", "top", "--prefix-len", "7",
    ]);
    assert_eq!(top, "1221112\n");
    let span = stdout_of(&[
        "word", "--base", "3/2", "--node", "1", "--kind", "span", "--prefix-len", "7",
    ]);
    assert_eq!(span, "0210112\n");
}

#[test]
fn transduce_runs_verifies_and_dumps_psi() {
    let out = stdout_of(&[
        "transduce", "--base", "3/2", "--node", "4", "--prefix-len", "10", "--verify",
    ]);
    assert!(out.contains("verified: equals the bottom word of 5"));
    let psi = stdout_of(&["transduce", "--base", "4/3", "--psi-table"]);
    assert!(psi.contains("ψ(-1) = {(2,0)}"), "got:\n{psi}");
    let explicit = stdout_of(&[
        "transduce", "--base", "3/2", "--input", "101", "--state", "2",
    ]);
    assert_eq!(explicit.lines().next().unwrap().len(), 3, "letter-to-letter");
}

#[test]
fn transduce_verify_needs_node_mode() {
    let out = ratbase(&["transduce", "--base", "3/2", "--input", "10", "--verify"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--node"));
}

#[test]
fn refine_emits_csv_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.csv");
    let args = [
        "refine", "--base", "7/3", "--depth", "3", "--format", "csv",
        "--out", path.to_str().unwrap(),
    ];
    let out = ratbase(&args);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "depth,labels,outer_measure,outer_measure_decimal,ratio_hi"
    );
    assert_eq!(lines.count(), 4, "levels 0..=3");
}

#[test]
fn refine_contraction_refuses_interval_regime_bases() {
    let out = ratbase(&["refine", "--base", "4/3", "--contraction"]);
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("regime"), "distinct regime error, got: {stderr}");
    // Plain refinement still works there.
    let plain = stdout_of(&["refine", "--base", "4/3", "--depth", "2"]);
    assert!(plain.contains("depth"));
}

#[test]
fn dim_reports_bounds_and_labels_the_conjecture() {
    let text = stdout_of(&["dim", "--base", "7/3", "--depth", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let bounds = v["bounds"].as_array().unwrap();
    assert_eq!(bounds.len(), 3, "no two-step bound for 7/3");
    let conjecture = bounds
        .iter()
        .find(|b| b["name"] == "conjecture")
        .expect("conjecture row");
    assert!(conjecture["provenance"]
        .as_str()
        .unwrap()
        .contains("not established"));
    let branching = bounds.iter().find(|b| b["name"] == "branching").unwrap();
    assert!(branching["value"]["lo_decimal"]
        .as_str()
        .unwrap()
        .starts_with("0.81806789"));
}

#[test]
fn check_passes_known_suites_and_rejects_unknown_names() {
    let out = stdout_of(&["check", "--suite", "golden-examples"]);
    assert!(out.contains("PASS"));
    assert!(out.contains("0 failed"));
    let unknown = ratbase(&["check", "--suite", "does-not-exist"]);
    assert!(!unknown.status.success());
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("known suites"));
    let listing = stdout_of(&["check", "--list"]);
    assert!(listing.lines().count() >= 20);
    assert!(listing.contains("enclosure-soundness"));
}

#[test]
fn render_produces_dot_and_svg_with_matching_formats() {
    let dot = stdout_of(&["render", "--base", "3/2", "--kind", "tree", "--depth", "1"]);
    assert!(dot.starts_with("digraph tree_3_2 {"));
    assert!(dot.contains("\"0\" -> \"1\" [label=\"2\"];"));
    let svg = stdout_of(&["render", "--base", "3/2", "--kind", "fractal", "--depth", "2"]);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("</svg>"));
    let mismatch = ratbase(&[
        "render", "--base", "3/2", "--kind", "tree", "--format", "svg",
    ]);
    assert!(!mismatch.status.success());
}

#[test]
fn frontier_cap_flag_and_env_are_honored() {
    let out = ratbase(&[
        "render", "--base", "3/2", "--kind", "tree", "--depth", "9", "--frontier-cap", "4",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let via_env = Command::new(env!("CARGO_BIN_EXE_ratbase"))
        .args(["render", "--base", "3/2", "--kind", "tree", "--depth", "9"])
        .env("RATBASE_FRONTIER_CAP", "4")
        .output()
        .expect("binary runs");
    assert!(!via_env.status.success());
    assert!(String::from_utf8_lossy(&via_env.stderr).contains("cap"));
}

#[test]
fn check_exit_code_is_nonzero_without_suites() {
    let out = ratbase(&["check"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--all"));
}

#[test]
fn base_validation_errors_are_clear() {
    for bad in ["4/2", "2/3", "3", "0/1", "x/y"] {
        let out = ratbase(&["convert", "--base", bad, "--int", "1"]);
        assert!(!out.status.success(), "base {bad} must be rejected");
    }
}
