use std::process::{Command, Output};

use serde_json::Value;

fn polyalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyalg")).args(args).output().expect("binary should start")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout should be JSON")
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn verify_all_is_byte_identical() {
    let a = polyalg(&["verify"]);
    let b = polyalg(&["verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reports = json(&a);
    assert!(reports.as_array().unwrap().len() > 14);
}

#[test]
fn exit_codes() {
    assert_eq!(polyalg(&["verify", "--catalog", "q2-minus"]).status.code(), Some(0));
    // j = 0 leaves too few samples to certify the degree.
    assert_eq!(polyalg(&["verify", "--catalog", "q2-minus", "--j", "0"]).status.code(), Some(1));
    assert_eq!(polyalg(&["verify", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(polyalg(&["verify", "--catalog", "q2-minus", "--set", "L=x"]).status.code(), Some(2));
    assert_eq!(polyalg(&["verify", "--n-max", "1"]).status.code(), Some(2));
    assert_eq!(polyalg(&["--tolerance", "0", "list"]).status.code(), Some(2));
    assert_eq!(polyalg(&["irrep", "--algebra", "q11-minus", "--k", "1/2", "--l", "1/3"]).status.code(), Some(2));
    assert_eq!(polyalg(&["--help"]).status.code(), Some(0));
}

#[test]
fn irrep_two_dim_casimir() {
    let out = polyalg(&["irrep", "--algebra", "q11-minus", "--k", "1/2", "--l", "3/4"]);
    assert_eq!(out.status.code(), Some(0));
    let report = &json(&out)[0];
    assert_eq!(report["details"]["dim"], 2);
    assert_eq!(report["details"]["casimir"], "7/64");
    assert_eq!(check(report, "casimir-scalar")["status"], "pass");
}

#[test]
fn compose_reports_cubic() {
    let out = polyalg(&["compose", "--left", "su2:j=2", "--right", "su2:j=2", "--variant", "cross", "--pi", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let report = &json(&out)[0];
    assert_eq!(report["details"]["verdict"]["degree"], 3);
    assert_eq!(report["details"]["verdict"]["holds"], true);
    assert_eq!(check(report, "order-theorem")["status"], "pass");
}

#[test]
fn compose_empty_sector_is_a_usage_error() {
    let out = polyalg(&["compose", "--left", "su2:j=2", "--right", "su2:j=2", "--variant", "plus", "--pi", "1/3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Pi"));
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("polyalg-cli-{}.json", std::process::id()));
    let written = polyalg(&["--out", path.to_str().unwrap(), "verify", "--catalog", "fermion"]);
    assert_eq!(written.status.code(), Some(0));
    let file = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(file, polyalg(&["verify", "--catalog", "fermion"]).stdout);
}

#[test]
fn text_format_summarizes() {
    let out = polyalg(&["--format", "text", "verify", "--catalog", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("== q11-minus"));
    assert!(text.trim_end().ends_with("14 entries, 0 with failures"));
}

#[test]
fn list_and_export() {
    let list = json(&polyalg(&["list"]));
    assert_eq!(list.as_array().unwrap().len(), polyalg::catalog::entries().len() + polyalg::cli::SUITES.len());
    let out = polyalg(&["export", "--catalog", "q11-minus"]);
    assert_eq!(out.status.code(), Some(0));
    let export = json(&out);
    assert!(export.to_string().contains("q11-minus"));
}
