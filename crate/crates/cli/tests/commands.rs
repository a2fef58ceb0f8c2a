//! End-to-end runs of the `maltsev` binary.

use std::process::{Command, Output};

use maltsev::catalog::{builtin, save};
use serde_json::Value;

fn maltsev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maltsev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn m7_satisfies_all() {
    let o = maltsev(&["check", "m7", "--identity", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("13 of 13 identities hold on m7\n"));
}

#[test]
fn nc3_violation_prints_counterexample() {
    let o = maltsev(&["check", "nc3", "--identity", "sagle-yamaguti"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("FAIL  sagle-yamaguti on nc3"), "{text}");
    assert!(text.contains("x = ") && text.contains("lhs = ") && text.contains("rhs = "));
}

#[test]
fn missing_file_is_an_error() {
    let o = maltsev(&["check", "missing.alg.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing.alg.json"));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_arguments_are_errors() {
    for args in [
        &["check"][..],
        &["check", "so3", "--workers", "zero"],
        &["check", "so3", "--workers", "0"],
        &["check", "so3", "--identity", "no-such"],
        &["table", "nope"],
    ] {
        assert_eq!(maltsev(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn jacobi_must_be_selected_explicitly() {
    let o = maltsev(&["check", "m7", "--identity", "all", "--identity", "jacobi"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  jacobi on m7"));
}

#[test]
fn json_and_text_agree() {
    for name in ["so3", "nc3"] {
        let json = maltsev(&["check", name, "--json"]);
        let text = maltsev(&["check", name]);
        assert_eq!(json.status.code(), text.status.code());
        let reports: Value = serde_json::from_slice(&json.stdout).unwrap();
        let reports = reports.as_array().unwrap();
        assert_eq!(reports.len(), 13);
        let lines: Vec<String> = stdout(&text)
            .lines()
            .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
            .map(String::from)
            .collect();
        assert_eq!(lines.len(), reports.len());
        for (r, line) in reports.iter().zip(&lines) {
            let verdict = if r["holds"].as_bool().unwrap() {
                "PASS"
            } else {
                "FAIL"
            };
            let id = r["identity"].as_str().unwrap();
            assert!(
                line.starts_with(&format!("{verdict}  {id} on {name}")),
                "{line}"
            );
            assert_eq!(r["counterexample"].is_null(), verdict == "PASS");
        }
    }
}

#[test]
fn exhaustive_counts_violations() {
    let o = maltsev(&[
        "check",
        "nc3",
        "--identity",
        "jacobi",
        "--exhaustive",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r[0]["substitutions_checked"], 27);
    assert!(r[0]["violations"].as_u64().unwrap() > 0);
}

#[test]
fn dsl_file_checks_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("ids.txt");
    std::fs::write(
        &good,
        "# ternary bracket collapses on Lie algebras\n[x,y,z] = 2*[[x,y],z]\n",
    )
    .unwrap();
    let good = good.to_str().unwrap();
    let o = maltsev(&["check", "so3", "--dsl", good]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("1 of 1 identities hold"));
    assert_eq!(
        maltsev(&["check", "m7", "--dsl", good]).status.code(),
        Some(1)
    );

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "[x,y] = -[y,x]\n\n[x,y,z\n").unwrap();
    let o = maltsev(&["check", "so3", "--dsl", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let msg = stderr(&o);
    assert!(msg.contains("bad.txt:3:7: expected"), "{msg}");
}

#[test]
fn algebra_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2.alg.json");
    save(&builtin("sl2").unwrap(), &path).unwrap();
    let arg = path.to_str().unwrap();
    assert_eq!(maltsev(&["check", arg]).status.code(), Some(0));
    let file_table = stdout(&maltsev(&["table", arg]));
    assert_eq!(file_table, stdout(&maltsev(&["table", "sl2"])));
    assert_eq!(file_table, "[h, e] = 2*e\n[h, f] = -2*f\n[e, f] = h\n");

    let broken = dir.path().join("broken.alg.json");
    std::fs::write(
        &broken,
        r#"{"name":"b","dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":0,"result":{}}]}"#,
    )
    .unwrap();
    let o = maltsev(&["table", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("brackets[0]"), "{}", stderr(&o));
}

#[test]
fn table_rationals_print_as_fractions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("half.alg.json");
    std::fs::write(
        &path,
        r#"{"name":"half","dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"result":{"1":"-1/2"}}]}"#,
    )
    .unwrap();
    let o = maltsev(&["table", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "[a, b] = -1/2*b\n");
    let o = maltsev(&["table", path.to_str().unwrap(), "--ternary", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
}
