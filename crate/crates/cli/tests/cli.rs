use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const FIELDS: [&str; 7] = ["instance", "valid", "outcome", "failures", "rule_applications", "table_hits", "elapsed_ms"];

fn qchr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qchr")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn check_schema(r: &Value) {
    let obj = r.as_object().expect("report is an object");
    for f in FIELDS {
        assert!(obj.contains_key(f), "missing {f} in {r}");
    }
    for k in obj.keys() {
        assert!(FIELDS.contains(&k.as_str()) || k == "witness", "unexpected field {k}");
    }
    assert!(r["elapsed_ms"].as_f64().unwrap() >= 0.0);
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qchr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn nim_four_is_valid_with_witness() {
    let out = qchr(&["--preset", "nim", "--n", "4", "--witness"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    check_schema(&r);
    assert_eq!(r["valid"], Value::Bool(true));
    assert_eq!(r["witness"], serde_json::json!([1]));
}

#[test]
fn witness_only_on_request() {
    let r = report(&qchr(&["--preset", "nim", "--n", "4"]));
    assert!(r.get("witness").is_none());
}

#[test]
fn nim_two_is_invalid() {
    let out = qchr(&["--preset", "nim", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    check_schema(&r);
    assert_eq!(r["valid"], Value::Bool(false));
}

#[test]
fn program_file_agrees_with_preset() {
    let path = temp("nim.qchr");
    std::fs::write(&path, qchr::games::nim::SOURCE).unwrap();
    for n in [4, 5, 6] {
        let a = report(&qchr(&["--program", path.to_str().unwrap(), "--goal", &format!("nimfibo({n})")]));
        let b = report(&qchr(&["--preset", "nim", "--n", &n.to_string()]));
        assert_eq!(a["valid"], b["valid"]);
        assert_eq!(a["failures"], b["failures"]);
    }
}

#[test]
fn errors_exit_with_two() {
    let bad = temp("bad.qchr");
    std::fs::write(&bad, "r @ a <=> b\n").unwrap();
    let out = qchr(&["--program", bad.to_str().unwrap(), "--goal", "a"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:"));

    assert_eq!(qchr(&["--preset", "nim"]).status.code(), Some(2));
    assert_eq!(qchr(&["--preset", "chess"]).status.code(), Some(2));
    assert_eq!(qchr(&["--program", "/nonexistent", "--goal", "a"]).status.code(), Some(2));
    assert_eq!(qchr(&[]).status.code(), Some(2));
    assert_eq!(qchr(&["--preset", "matrix", "--depth", "3", "--density", "2"]).status.code(), Some(2));
}

#[test]
fn limits_exit_with_two_and_still_report() {
    let out = qchr(&["--preset", "nim", "--n", "25", "--failure-limit", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    check_schema(&r);
    assert_eq!(r["valid"], Value::Null);
    assert_eq!(r["outcome"], "failure limit");
    assert_eq!(r["failures"], 6);
}

#[test]
fn generated_matrices_are_reproducible() {
    let (a, b) = (temp("m-a.txt"), temp("m-b.txt"));
    for p in [&a, &b] {
        let out = qchr(&["--gen-matrix", p.to_str().unwrap(), "--depth", "4", "--seed", "7", "--density", "0.5"]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    for (density, code) in [("1.0", 0), ("0.0", 1)] {
        let p = temp(&format!("m-{density}.txt"));
        qchr(&["--gen-matrix", p.to_str().unwrap(), "--depth", "5", "--density", density]);
        let out = qchr(&["--preset", "matrix", "--matrix", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(code), "density {density}");
    }
}

#[test]
fn connect4_small_board() {
    let out = qchr(&["--preset", "connect4", "--rows", "3", "--cols", "3"]);
    assert_eq!(out.status.code(), Some(0));
    check_schema(&report(&out));
}

#[test]
fn bench_reports_every_instance() {
    let out = qchr(&["--bench", "nim", "--n", "12", "--reps", "2", "--tabling"]);
    assert_eq!(out.status.code(), Some(0));
    let list = report(&out);
    let list = list.as_array().unwrap();
    assert_eq!(list.len(), 11);
    for (r, n) in list.iter().zip(2..) {
        check_schema(r);
        assert_eq!(r["instance"], format!("nim-{n}"));
        assert_eq!(r["valid"], Value::Bool(qchr::games::nim::oracle(n)));
    }
}

#[test]
fn bench_matrix_counts_are_stable() {
    let a = report(&qchr(&["--bench", "matrix", "--depth", "6", "--seed", "3", "--reps", "2"]));
    let b = report(&qchr(&["--bench", "matrix", "--depth", "6", "--seed", "3", "--reps", "1"]));
    let strip = |v: &Value| -> Vec<(Value, Value)> {
        v.as_array().unwrap().iter().map(|r| (r["instance"].clone(), r["failures"].clone())).collect()
    };
    assert_eq!(strip(&a), strip(&b));
    assert!(a.as_array().unwrap().iter().all(|r| r["outcome"] != "nondeterministic"));
}

#[test]
fn pretty_prints_a_table() {
    let out = qchr(&["--preset", "nim", "--n", "6", "--pretty", "--witness"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("instance"));
    assert!(text.contains("nim-6"));
}
