//! End-to-end tests driving the compiled binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zeromargin"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn uset_prints_the_generating_vectors() {
    let out = run(&["uset", "3"]);
    assert!(out.status.success());
    let parsed: Vec<Vec<i64>> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, vec![vec![1, -2, 1], vec![1, 0, -1]]);
}

#[test]
fn tree_prints_indented_text() {
    let out = run(&["tree", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(1, -2, 1)\n  L: (1, 0, -1)\n");
}

#[test]
fn basis_csv_lists_one_element_per_line() {
    let out = run(&["basis", "2", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "bv,1.1,4,2,2,1,-1,-1,1\n");
}

#[test]
fn basis_json_reports_dimension() {
    let out = run(&["basis", "3", "4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["dimension"], 6);
    assert_eq!(doc["elements"].as_array().unwrap().len(), 6);
    assert_eq!(doc["elements"][0]["entries"][0], "1");
    assert_eq!(doc["elements"][0]["tag"], "bv");
}

#[test]
fn dway_basis_reports_dimension() {
    let out = run(&["basis", "--dway", "3", "3", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["dimension"], 8);
    assert_eq!(doc["elements"][0]["dims"], serde_json::json!([3, 3, 3]));
}

#[test]
fn expand_reports_exact_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "square.csv", "-1,0,1\n0,1,-1\n1,-1,0\n");
    let out = run(&["expand", "--basis", "vmn", "--input", &input]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["residual_is_zero"], true);
    let coeffs: Vec<&str> = doc["coordinates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["coefficient"].as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1/4", "-1/4", "-1/4", "-3/4"]);
}

#[test]
fn expand_accepts_json_documents() {
    let dir = tempfile::tempdir().unwrap();
    let doc = serde_json::json!({
        "rows": 2,
        "cols": 2,
        "entries": ["1/2", "-1/2", "-1/2", "1/2"],
    });
    let input = write_file(dir.path(), "m.json", &doc.to_string());
    let out = run(&["expand", "--basis", "vmn", "--input", &input]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["coordinates"][0]["coefficient"], "1/2");
}

#[test]
fn check_accepts_valid_and_invalid_squares() {
    let dir = tempfile::tempdir().unwrap();
    let latin = write_file(dir.path(), "latin.csv", "1,2,3\n2,3,1\n3,1,2\n");
    let out = run(&["check", "--kind", "latin", "--input", &latin]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["valid"], true);

    let broken = write_file(dir.path(), "broken.csv", "1,2,3\n2,3,1\n3,1,1\n");
    let out = run(&["check", "--kind", "latin", "--input", &broken]);
    assert!(out.status.success(), "an invalid square is still exit 0");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["valid"], false);
}

#[test]
fn check_rejects_non_square_input() {
    let dir = tempfile::tempdir().unwrap();
    let rect = write_file(dir.path(), "rect.csv", "1,2,3\n2,3,1\n");
    let out = run(&["check", "--kind", "latin", "--input", &rect]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn check_rejects_ragged_input() {
    let dir = tempfile::tempdir().unwrap();
    let ragged = write_file(dir.path(), "ragged.csv", "1,2\n3\n");
    let out = run(&["check", "--kind", "latin", "--input", &ragged]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_magic_requires_a_sum() {
    let dir = tempfile::tempdir().unwrap();
    let loshu = write_file(dir.path(), "loshu.csv", "2,7,6\n9,5,1\n4,3,8\n");
    let out = run(&["check", "--kind", "magic", "--input", &loshu]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["check", "--kind", "magic", "--input", &loshu, "--sum", "15"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["valid"], true);
}

#[test]
fn classify_reports_both_symmetries() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "m.csv", "1,-1\n-1,1\n");
    let out = run(&["classify", "--input", &input]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["half_turn"], "centrosymmetric");
    assert_eq!(doc["transpose"], "symmetric");
}

#[test]
fn enumerate_counts_order_three() {
    let out = run(&["enumerate", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "1,2,3,2,3,1,3,1,2");
}

#[test]
fn census_reports_the_two_order_three_classes() {
    let out = run(&["census", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["classes"], 2);
    assert_eq!(
        doc["census"][0]["signature"],
        serde_json::json!(["0", "1/2", "1/2", "0"])
    );
    assert_eq!(doc["census"][1]["size"], 8);
}

#[test]
fn sample_is_reproducible_and_preserves_margins() {
    let args = [
        "sample", "--rows", "3", "2", "--cols", "2", "2", "1", "--steps", "2000", "--seed", "11",
        "--format", "csv",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));

    let grid: Vec<Vec<i64>> = stdout(&first)
        .lines()
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    let row_sums: Vec<i64> = grid.iter().map(|r| r.iter().sum()).collect();
    assert_eq!(row_sums, vec![3, 2]);
    for c in 0..3 {
        let col: i64 = grid.iter().map(|r| r[c]).sum();
        assert_eq!(col, [2, 2, 1][c]);
    }
}

#[test]
fn connectivity_counts_tables() {
    let out = run(&["connectivity", "--rows", "1", "1", "--cols", "1", "1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["connected"], true);
    assert_eq!(doc["tables"], 2);
}

#[test]
fn table_guard_exits_with_code_two() {
    let out = bin()
        .args(["connectivity", "--rows", "2", "2", "--cols", "2", "2"])
        .env("ZEROMARGIN_MAX_TABLES", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_flag_writes_the_payload_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = bin()
        .args(["uset", "4", "--output", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let direct = run(&["uset", "4"]);
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&direct));
}

#[test]
fn bad_arguments_exit_with_code_one() {
    let out = run(&["basis"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["uset", "not-a-number"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("zeromargin"));
}

#[test]
fn verify_reports_all_suites() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("suites passed"));
    assert!(!text.contains("FAIL"));
}
