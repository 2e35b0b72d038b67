//! End-to-end tests of the `hmsector` binary: exit codes, JSON shape,
//! determinism, seed handling, and the report/standalone output contract.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

/// The borderline quintic whose step-3 chain is positive but razor-thin.
const BORDERLINE_QUINTIC: &str = "1,1,1,1001/1000,1,999/1000";
/// A stable quintic that step 3 cannot certify (its chain has a sign change).
const STUBBORN_QUINTIC: &str = "1,1,5,2,4,1/2";
/// A sextic with a negative special minor at step 3.
const NEGATIVE_MINOR_SEXTIC: &str = "1,3,9,3/2,2,1,1/9";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hmsector"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hmsector"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn json_doc(out: &Output) -> Value {
    serde_json::from_str(stdout_str(out).trim()).expect("stdout is one JSON document")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

#[test]
fn certify_success_is_exit_zero_with_exact_evidence() {
    let out = run(&[
        "certify",
        "--poly",
        BORDERLINE_QUINTIC,
        "--m",
        "3",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_doc(&out);
    assert_eq!(doc["status"], "CERTIFIED");
    assert_eq!(doc["method"], "ALL_H_POSITIVE");
    assert_eq!(doc["claim"], "STRICT_EXTERIOR");
    assert_eq!(doc["sector_degrees"], "60");
    let hs: Vec<&str> = doc["evidence"]["h"]
        .as_array()
        .expect("h evidence list")
        .iter()
        .map(|v| v.as_str().expect("exact strings"))
        .collect();
    assert_eq!(hs, ["1", "1", "1", "1/1000", "1/1000", "999/1000"]);
    // Exact values are strings; floats are confined to the oracle subtree.
    assert!(doc["oracle"]["agreed"].as_bool().unwrap());
    assert_eq!(doc["oracle"]["seed"].as_u64().unwrap(), 24301);
    assert!(doc["oracle"]["min_clearance_radians"].as_f64().unwrap() > 0.0);
    assert!(doc["note"].as_str().unwrap().contains("closed sector"));
}

#[test]
fn certify_unknown_is_exit_one_with_ordered_failures() {
    let out = run(&["certify", "--poly", STUBBORN_QUINTIC, "--m", "3", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_doc(&out);
    assert_eq!(doc["status"], "UNKNOWN");
    assert!(doc["method"].is_null());
    let methods: Vec<&str> = doc["failures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["method"].as_str().unwrap())
        .collect();
    assert_eq!(
        methods,
        [
            "ALL_H_POSITIVE",
            "TN_SPECIAL_MINORS",
            "PAIRWISE_HURWITZ",
            "COWLING_THRON"
        ]
    );
}

#[test]
fn certify_step_one_is_informational_with_real_root_check() {
    let out = run(&["certify", "--poly", "1,3,2", "--m", "1", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_doc(&out);
    assert_eq!(doc["status"], "NOT_APPLICABLE");
    assert_eq!(doc["oracle"]["all_real_negative"], Value::Bool(true));
}

#[test]
fn explicit_method_overrides_the_automatic_cascade() {
    // At step 2 the stubborn quintic is certifiable; forcing the total
    // nonnegativity route must yield that route's certificate, not the
    // cascade's first success.
    let out = run(&[
        "certify",
        "--poly",
        STUBBORN_QUINTIC,
        "--m",
        "2",
        "--method",
        "tn",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_doc(&out);
    assert_eq!(doc["status"], "CERTIFIED");
    assert_eq!(doc["method"], "TN_SPECIAL_MINORS");
    assert_eq!(doc["claim"], "OPEN_SECTOR_CLEAR");
}

#[test]
fn repeating_decimal_is_a_usage_error() {
    let out = run(&["minors", "--poly", "1,3,9,3/2,2,1,0.111...", "--m", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("repeating decimals are unsupported"));
    // Single-input text mode keeps stdout clean on errors.
    assert_eq!(stdout_str(&out), "");
}

#[test]
fn conflicting_or_missing_inputs_are_usage_errors() {
    let out = run(&["certify", "--m", "2"]);
    assert_eq!(exit_code(&out), 2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    std::fs::write(&path, "1,2\n").unwrap();
    let out = run(&[
        "certify",
        "--poly",
        "1,2",
        "--poly-file",
        path.to_str().unwrap(),
        "--m",
        "2",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["certify", "--poly", "1,2,1", "--m", "9"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn minors_witness_reports_total_nonnegativity_refutation() {
    let out = run(&[
        "minors",
        "--poly",
        NEGATIVE_MINOR_SEXTIC,
        "--m",
        "3",
        "--witness",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_doc(&out);
    assert_eq!(doc["all_positive"], Value::Bool(false));
    assert_eq!(doc["tn"]["status"], "NOT_TN");
    assert_eq!(doc["tn"]["method"], "WITNESS_FOUND");
    assert_eq!(doc["tn"]["witness"]["value"], "-1/2");
    let values: Vec<&str> = doc["minors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["3", "9", "5/2", "15", "-1/2", "5/3"]);
}

#[test]
fn cfrac_reports_levels_coefficients_and_exponents() {
    let out = run(&[
        "cfrac",
        "--poly",
        BORDERLINE_QUINTIC,
        "--m",
        "3",
        "--pair",
        "0,1",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_doc(&out);
    assert_eq!(doc["levels"], 3);
    let coefficients: Vec<&str> = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(coefficients, ["1", "1000", "1/1000"]);
    assert_eq!(doc["exponents"], serde_json::json!([1, 2, 1]));
}

#[test]
fn factor_verifies_the_bidiagonal_product_on_a_window() {
    let out = run(&[
        "factor", "--poly", "3,7", "--m", "5", "--window", "10", "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_doc(&out);
    assert_eq!(doc["cs"], serde_json::json!(["3/7"]));
    assert_eq!(doc["terminal"], "7");
    assert_eq!(doc["verified"], Value::Bool(true));
    assert_eq!(doc["window"], 10);
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["report", "--poly", BORDERLINE_QUINTIC, "--m", "3", "--json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn environment_seed_overrides_the_flag() {
    let args = ["roots", "--poly", STUBBORN_QUINTIC, "--seed", "7", "--json"];
    let out = run_with_env(&args, "HMSECTOR_SEED", "99");
    assert_eq!(exit_code(&out), 0);
    let doc = json_doc(&out);
    assert_eq!(doc["oracle"]["seed"].as_u64().unwrap(), 99);
    let out = run(&args);
    assert_eq!(json_doc(&out)["oracle"]["seed"].as_u64().unwrap(), 7);
    let out = run_with_env(&args, "HMSECTOR_SEED", "not-a-number");
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("HMSECTOR_SEED"));
}

#[test]
fn report_sections_match_standalone_outputs_byte_for_byte() {
    let poly = BORDERLINE_QUINTIC;
    let report = run(&["report", "--poly", poly, "--m", "3", "--json"]);
    assert_eq!(exit_code(&report), 0);
    let report_text = stdout_str(&report);
    let standalone = [
        vec!["table", "--poly", poly, "--m", "3", "--json"],
        vec!["minors", "--poly", poly, "--m", "3", "--json"],
        vec!["certify", "--poly", poly, "--m", "3", "--json"],
        vec!["roots", "--poly", poly, "--m", "3", "--json"],
    ];
    for args in &standalone {
        let out = run(args);
        let section = stdout_str(&out);
        assert!(
            report_text.contains(section.trim()),
            "standalone `{}` output is not embedded verbatim in the report",
            args[0]
        );
    }
}

#[test]
fn report_exit_code_is_the_worst_of_its_sections() {
    let out = run(&["report", "--poly", STUBBORN_QUINTIC, "--m", "3", "--json"]);
    // Certification is UNKNOWN, so the combined report is informational.
    assert_eq!(exit_code(&out), 1);
    let doc = json_doc(&out);
    assert_eq!(doc["certificate"]["status"], "UNKNOWN");
    assert_eq!(doc["table"]["nondegenerate"], Value::Bool(true));
}

#[test]
fn poly_file_batches_lines_skips_comments_and_keeps_worst_exit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("batch.txt");
    let mut file = std::fs::File::create(&path).unwrap();
    writeln!(file, "# a comment-only line").unwrap();
    writeln!(file, "{BORDERLINE_QUINTIC}   # trailing comment").unwrap();
    writeln!(file).unwrap();
    writeln!(file, "{STUBBORN_QUINTIC}").unwrap();
    drop(file);

    let out = run(&[
        "certify",
        "--poly-file",
        path.to_str().unwrap(),
        "--m",
        "3",
        "--json",
    ]);
    // CERTIFIED (0) and UNKNOWN (1) combine to the worst code.
    assert_eq!(exit_code(&out), 1);
    let doc = json_doc(&out);
    let docs = doc.as_array().expect("batch output is a JSON array");
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["status"], "CERTIFIED");
    assert_eq!(docs[1]["status"], "UNKNOWN");

    // Text mode labels each entry with its source line.
    let out = run(&["certify", "--poly-file", path.to_str().unwrap(), "--m", "3"]);
    let text = stdout_str(&out);
    assert!(text.contains(&format!("== polynomial 1: {BORDERLINE_QUINTIC} ==")));
    assert!(text.contains(&format!("== polynomial 2: {STUBBORN_QUINTIC} ==")));
}

#[test]
fn batch_parse_errors_are_reported_per_line_and_dominate_the_exit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("batch.txt");
    std::fs::write(&path, format!("{BORDERLINE_QUINTIC}\nbogus,line\n")).unwrap();
    let out = run(&[
        "certify",
        "--poly-file",
        path.to_str().unwrap(),
        "--m",
        "3",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 2);
    let doc = json_doc(&out);
    let docs = doc.as_array().unwrap();
    assert_eq!(docs[0]["status"], "CERTIFIED");
    assert!(docs[1]["error"]
        .as_str()
        .unwrap()
        .contains("malformed coefficient"));
    assert!(stderr_str(&out).contains("bogus,line"));
}

#[test]
fn missing_poly_file_is_a_usage_error() {
    let out = run(&[
        "certify",
        "--poly-file",
        "/nonexistent/definitely-missing.txt",
        "--m",
        "3",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("definitely-missing.txt"));
}

#[test]
fn roots_reports_clearance_against_a_requested_sector() {
    let out = run(&["roots", "--poly", BORDERLINE_QUINTIC, "--m", "3", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_doc(&out);
    let oracle = &doc["oracle"];
    assert_eq!(oracle["roots"].as_array().unwrap().len(), 5);
    assert!(oracle["converged"].as_bool().unwrap());
    let clearance = &oracle["clearance"];
    assert_eq!(clearance["m"], 3);
    assert!(clearance["clearance_radians"].as_f64().unwrap() > 0.0);
    let root_slope = clearance["root_slope"].as_f64().unwrap();
    let boundary_slope = clearance["boundary_slope"].as_f64().unwrap();
    assert!(root_slope > boundary_slope);
}

#[test]
fn table_text_lists_rows_quotients_and_leading_coefficients() {
    let out = run(&["table", "--poly", "1,7,21,35,35,21,7,1", "--m", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_str(&out);
    assert!(text.contains("generalized Euclid table (M = 3, n = 7)"));
    assert!(text.contains("h: 1, 7, 21, 30, 28, 81/5, 81/14, 1"));
    assert!(text.contains("nondegenerate: true"));
}
