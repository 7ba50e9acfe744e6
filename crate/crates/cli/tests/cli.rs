use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supersym"))
        .env_remove("SUPERSYM_FORMAT")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn conjugate() {
    let out = run(&["conj", "(3,1,0;4,3,2,1)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(6,4,1;3)");
}

#[test]
fn monomial_product_table() {
    let out = run(&["mult", "(1,0;1)", "(0;2,1,1)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "(2,1,0;1,1,1)\t-3"), "{text}");
    assert!(text.lines().any(|l| l == "(3,1,0;1,1)\t1"), "{text}");
}

#[test]
fn list_order() {
    let out = run(&["list", "--n", "2", "--m", "1"]);
    assert_eq!(stdout(&out).lines().collect::<Vec<_>>(), ["(2;)", "(0;2)", "(1;1)", "(0;1,1)"]);
}

#[test]
fn compare_orders() {
    let out = run(&["order", "(2;)", "(0;2)"]);
    assert!(stdout(&out).contains("bruhat: (2;) >= (0;2)"));
}

#[test]
fn inner_product_of_expressions() {
    let out = run(&["inner", "p(;2)", "p(;2) + m(;1,1)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn convert_json_round_trips() {
    let out = run(&["--format", "json", "convert", "--from", "e", "--to", "p", "(;2)"]);
    assert!(out.status.success());
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    let x: supersym::BasisExpansion = serde_json::from_value(value).unwrap();
    assert_eq!(x.basis(), supersym::BasisName::P);
    assert_eq!(x.len(), 2);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_supersym"))
        .env("SUPERSYM_FORMAT", "json")
        .args(["build", "--basis", "m", "(1;)", "--nvars", "2"])
        .output()
        .unwrap();
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["terms"].as_array().unwrap().len(), 2);
    assert_eq!(value["terms"][0]["theta"][0], 1);
}

#[test]
fn kernel_suite_passes() {
    let out = run(&["verify", "--suite", "kernel", "--nvars", "4", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn malformed_input_exits_with_usage_error() {
    let out = run(&["conj", "(3,3;1)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offending token"));
    let out = run(&["inner", "q(1;)", "p(1;)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["build", "--basis", "m", "(2,1;)", "--nvars", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
