//! End-to-end tests of the binary: output contracts, exit codes, JSON
//! round-trips, determinism.

use std::io::Write;
use std::process::{Command, Output};

fn braidbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_passes_for_small_n() {
    for n in ["2", "3", "6"] {
        let out = braidbell(&["verify", "--n", n]);
        assert_eq!(out.status.code(), Some(0), "n={n}: {}", stderr(&out));
        assert!(stdout(&out).contains("relations hold"));
    }
}

#[test]
fn verify_rejects_out_of_range() {
    let out = braidbell(&["verify", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--n"));
}

#[test]
fn verify_json_reports_checks() {
    let out = braidbell(&["verify", "--n", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["holds"], true);
    assert!(doc["checks"].as_array().unwrap().len() >= 4);
}

#[test]
fn bell_prints_four_term_superposition() {
    let out = braidbell(&["bell", "--n", "3", "--index", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].contains("|000\u{27e9}:") && lines[0].contains("0.5"));
    assert!(lines[1].contains("|011\u{27e9}:") && lines[1].contains("-0.5"));
    assert!(lines[2].contains("|101\u{27e9}:") && lines[2].contains("-0.5"));
    assert!(lines[3].contains("|110\u{27e9}:") && lines[3].contains("-0.5"));
}

#[test]
fn bell_four_qubits_has_eight_terms() {
    let out = braidbell(&["bell", "--n", "4", "--index", "1"]);
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn bell_two_qubits() {
    let out = braidbell(&["bell", "--n", "2", "--index", "1"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("0.707107"));
}

#[test]
fn bell_index_out_of_range_is_usage_error() {
    let out = braidbell(&["bell", "--n", "3", "--index", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn state_json_round_trips_through_file_input() {
    let out = braidbell(&["bell", "--n", "2", "--index", "4", "--format", "json"]);
    let dir = std::env::temp_dir().join("braidbell-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("phi_plus.json");
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(out.stdout.as_slice()).unwrap();

    let spec = format!("file:{}", path.display());
    let out = braidbell(&["analyze", &spec]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("concurrence: 1"));
    assert!(text.contains("separable (PPT): no"));
}

#[test]
fn analyze_traced_bell_state() {
    let out = braidbell(&["analyze", "bell", "--n", "3", "--index", "1", "--trace", "C"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("lambda: 0.5 0.5 0 0"));
    assert!(text.contains("concurrence: 0"));
    assert!(text.contains("partial transpose eigenvalues: 0 0 0.5 0.5"));
    assert!(text.contains("separable (PPT): yes"));
    assert!(text.contains("-0.25"));
}

#[test]
fn analyze_four_qubit_double_trace_matches() {
    let a = braidbell(&["analyze", "bell", "--n", "4", "--index", "1", "--trace", "C,D"]);
    let b = braidbell(&["analyze", "bell", "--n", "3", "--index", "1", "--trace", "C"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn analyze_requires_two_qubit_reduction() {
    let out = braidbell(&["analyze", "bell", "--n", "3", "--index", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("two-qubit"));
}

#[test]
fn hs_ghz_table() {
    let out = braidbell(&["hs", "ghz"]);
    let text = stdout(&out);
    for needle in ["IZZ", "ZIZ", "ZZI", "XXX", "XYY", "YXY", "YYX"] {
        assert!(text.contains(needle), "missing {needle} in:\n{text}");
    }
    assert!(text.contains("full-weight support: yes"));
    // seven parameters + identity + header + support line
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn hs_traced_four_qubit_has_pair_terms_only() {
    let out = braidbell(&["hs", "bell", "--n", "4", "--index", "1", "--trace", "D"]);
    let text = stdout(&out);
    for needle in ["IYY", "YIY", "YYI"] {
        assert!(text.contains(needle));
    }
    assert!(!text.contains("XXZ"));
    assert!(text.contains("full-weight support: no"));
}

#[test]
fn hs_json_schema() {
    let out = braidbell(&["hs", "bell", "--n", "3", "--index", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 3);
    let coeffs = doc["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 8);
    assert_eq!(coeffs[0]["label"], "III");
    assert_eq!(coeffs[0]["value"], 1.0);
}

#[test]
fn hs_csv_has_header_and_rows() {
    let out = braidbell(&["hs", "ghz", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("label,weight,value"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn braid_word_reproduces_bell_state() {
    let braided = braidbell(&["braid", "s1 s2", "--n", "3", "--input", "1"]);
    let bell = braidbell(&["bell", "--n", "3", "--index", "1"]);
    assert_eq!(stdout(&braided), stdout(&bell));
}

#[test]
fn empty_braid_word_returns_input() {
    let out = braidbell(&["braid", "", "--n", "3", "--input", "5"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("|100\u{27e9}:") && text.contains('1'));
}

#[test]
fn braid_survey_reports_reductions() {
    let out = braidbell(&["braid", "s2 s1", "--n", "3", "--input", "1", "--survey"]);
    let text = stdout(&out);
    assert!(text.contains("survey of two-qubit reductions"));
    assert!(text.contains("A,B"));
    assert!(text.contains("full-weight support:"));
}

#[test]
fn braid_parse_errors_exit_2_with_position() {
    let out = braidbell(&["braid", "s1 t2", "--n", "3", "--input", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("byte 3"));

    let out = braidbell(&["braid", "s4", "--n", "3", "--input", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let first = braidbell(&["hs", "bell", "--n", "3", "--index", "5", "--format", "json"]);
    let second = braidbell(&["hs", "bell", "--n", "3", "--index", "5", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn unknown_state_spec_is_usage_error() {
    let out = braidbell(&["hs", "w-state"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown state spec"));
}

#[test]
fn ghz_rejects_index() {
    let out = braidbell(&["hs", "ghz", "--index", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_letters_and_numbers_agree() {
    let letters = braidbell(&["analyze", "bell", "--n", "3", "--index", "2", "--trace", "B"]);
    let numbers = braidbell(&["analyze", "bell", "--n", "3", "--index", "2", "--trace", "2"]);
    assert_eq!(stdout(&letters), stdout(&numbers));
}
