use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_trace-poincare"));
    c.env_remove("TRACE_POINCARE_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn compute_closed_two_by_two() {
    let o = run(&["compute", "--n", "2", "--k", "4", "--ring", "pure", "--engine", "closed"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("numerator:   1 - 2t + 4t^2 - 2t^3 + t^4"), "{s}");
    assert!(s.contains("denominator: (1 - t)^6 (1 - t^2)^7"), "{s}");
    assert!(s.contains("cyclotomic:  phi_1^13 phi_2^7"), "{s}");
}

#[test]
fn compute_molien_three_by_three() {
    let o = run(&["compute", "--n", "3", "--k", "2", "--ring", "pure", "--engine", "molien", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["numerator"], serde_json::json!(["1/1", "0/1", "-1/1", "0/1", "1/1"]));
    assert_eq!(v["denominator"], serde_json::json!({"1": 2, "2": 4, "3": 4}));
    assert_eq!(v["functional_equation_sign"], 1);
    assert_eq!(v["series"].as_array().unwrap().len(), 10);
}

#[test]
fn compute_short_order_prints_series() {
    let o = run(&["compute", "--n", "2", "--k", "2", "--ring", "pure", "--engine", "molien", "--order", "5"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("series:      1, 2, 6, 10, 20, 30"), "{s}");
    assert!(s.contains("note:"), "{s}");
}

#[test]
fn unsupported_engine_is_a_usage_error() {
    let o = run(&["compute", "--n", "3", "--k", "2", "--engine", "teranishi"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n = 2"));
}

#[test]
fn verify_conjecture_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["verify", "--scope", "conjecture", "--output", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["failed"], 0);
    let summary = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "fixtures matched")
        .unwrap();
    assert_eq!(summary["witness"], "10/10");
    for c in v["checks"].as_array().unwrap() {
        for key in ["name", "inputs", "status", "witness"] {
            assert!(c.get(key).is_some(), "missing {key} in {c}");
        }
    }
}

#[test]
fn verify_fails_with_impossible_tolerance() {
    let o = run(&["verify", "--scope", "asymptotics", "--tolerance", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] ratio test"));
}

fn scan_rows(args: &[&str], cache: Option<&Path>) -> Vec<csv::StringRecord> {
    let mut c = bin();
    c.args(["scan", "--no-timing"]).args(args);
    if let Some(dir) = cache {
        c.env("TRACE_POINCARE_CACHE", dir);
    }
    let o = c.output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    csv::Reader::from_reader(o.stdout.as_slice())
        .records()
        .map(Result::unwrap)
        .collect()
}

#[test]
fn scan_two_by_three_grid() {
    let rows = scan_rows(&["--n", "2..3", "--k", "2..4", "--ring", "pure"], None);
    assert_eq!(rows.len(), 6);
    for r in &rows {
        assert_eq!(&r[6], "match");
        assert_eq!(&r[7], "verified");
    }
}

#[test]
fn scan_probe_smaller() {
    let rows = scan_rows(&["--n", "2", "--k", "2..2", "--ring", "pure", "--probe-smaller"], None);
    assert_eq!(&rows[0][11], "rejected 2/2");
}

#[test]
fn scan_four_by_four_mixed_denominator() {
    // order 0 keeps the engine out of it; only the denominator columns matter
    let rows = scan_rows(&["--n", "4", "--k", "2", "--ring", "mixed", "--order", "0"], None);
    assert_eq!(&rows[0][4], "1:5 2:4 3:5 4:3");
    assert_eq!(&rows[0][6], "match");
    assert_eq!(&rows[0][7], "unverified");
}

#[test]
fn cache_hits_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--n", "3", "--k", "2..3", "--ring", "mixed"];
    let cold = scan_rows(&args, Some(dir.path()));
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 2);
    let warm = scan_rows(&args, Some(dir.path()));
    assert_eq!(cold, warm);

    let compute = |d: &Path| {
        let mut c = bin();
        c.args(["compute", "--n", "3", "--k", "2", "--ring", "mixed", "--json"]);
        c.env("TRACE_POINCARE_CACHE", d);
        c.output().unwrap().stdout
    };
    assert_eq!(compute(dir.path()), compute(dir.path()));
}

#[test]
fn cache_flag_is_overridden_by_env() {
    let flag = tempfile::tempdir().unwrap();
    let env = tempfile::tempdir().unwrap();
    let o = bin()
        .args(["--cache-dir", flag.path().to_str().unwrap()])
        .args(["compute", "--n", "2", "--k", "3"])
        .env("TRACE_POINCARE_CACHE", env.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(std::fs::read_dir(flag.path()).unwrap().count(), 0);
    assert_eq!(std::fs::read_dir(env.path()).unwrap().count(), 1);
}
