//! End-to-end checks of the command-line interface: output shapes, exit
//! codes, and the fixture-directory override.

use std::process::{Command, Output};

fn minparab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minparab"))
        .args(args)
        .output()
        .expect("spawn minparab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_text_lists_forms() {
    let out = minparab(&["classify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("split:G2"));
    assert!(text.contains("e6(a1a5)"));
    assert!(text.contains("su(3,4)"));
}

#[test]
fn classify_json_has_all_forms() {
    let out = minparab(&["classify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 78);
    let split_g2 = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["form"] == "split:G2")
        .unwrap();
    assert_eq!(split_g2["r_invariant"], 2);
    assert_eq!(split_g2["m_abelian"], true);
}

#[test]
fn restrict_reports_non_reduced_su() {
    let out = minparab(&["restrict", "--form", "su(3,4)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("non-reduced"));
    assert!(text.contains("BC3"));
}

#[test]
fn cascade_json_matches_e8_tables() {
    let out = minparab(&["cascade", "--form", "split:E8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cascade"]["m"], 8);
    assert_eq!(
        v["cascade"]["layer_sizes"],
        serde_json::json!([57, 33, 17, 1, 9, 1, 1, 1])
    );
    assert_eq!(v["cascade"]["betas"][3]["coeffs"], serde_json::json!([0, 0, 0, 0, 0, 0, 1, 0]));
}

#[test]
fn pfaffian_rejects_non_split_forms() {
    let out = minparab(&["pfaffian", "--form", "complex:A2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = minparab(&["pfaffian", "--form", "split:G2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Pf"));
}

#[test]
fn groups_single_and_all() {
    let out = minparab(&["groups", "--group", "dn:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("order 8"));
    let out = minparab(&["groups", "--all"]);
    let text = stdout(&out);
    assert!(text.contains("W_8"));
    assert!(text.contains("collapses to W_7: true"));
}

#[test]
fn report_json_and_latex() {
    let out = minparab(&["report", "--form", "split:G2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    for key in [
        "real_form",
        "classification",
        "restricted_system",
        "cascade",
        "pfaffian",
        "modular",
        "stabilizers",
        "orbits",
        "m_structure",
        "formula_shape",
        "errata",
    ] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
    let out = minparab(&["report", "--form", "split:G2", "--format", "latex"]);
    let text = stdout(&out);
    assert!(text.starts_with("\\documentclass"));
    assert!(text.contains("\\end{document}"));
}

#[test]
fn appendix_diff_all_is_clean() {
    let out = minparab(&["appendix-diff", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ok   split:E8"));
    assert!(text.contains("errata: e6-s1-first-pair, e6-s2-grouping, f4-beta1-tail"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn unknown_form_is_usage_error() {
    let out = minparab(&["cascade", "--form", "split:E9"]);
    assert_eq!(out.status.code(), Some(1));
    let out = minparab(&["nonsense-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fixture_dir_override_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    // A tampered G2 table: wrong second cascade root.
    let tampered = serde_json::json!({
        "form": "split:G2",
        "betas": [
            {"coeffs": [3, 2], "provenance": "verbatim"},
            {"coeffs": [1, 1], "provenance": "verbatim"}
        ],
        "layers": [[[[0, 1], [3, 1]], [[1, 1], [2, 1]]], []],
        "errata": []
    });
    std::fs::write(
        dir.path().join("g2.json"),
        serde_json::to_string(&tampered).unwrap(),
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_minparab"))
        .args(["appendix-diff", "--form", "split:G2"])
        .env("CASCADE_FIXTURE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "tampered fixture must fail the diff");
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    let out = minparab(&[
        "report",
        "--form",
        "split:G2",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["real_form"], "split:G2");
}
