use std::path::PathBuf;

use serde_json::Value;
use tropdiff::cli::{run_with_cap, Outcome};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn tropdiff(args: &[&str]) -> Outcome {
    run_with_cap(std::iter::once("tropdiff").chain(args.iter().copied()), None)
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = tropdiff(&all);
    assert!(out.code <= 1, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

const PDE_SUPPORTS: &str = "{(2,0),(1,1),(0,2)};{(0,0),(0,1),(3,0),(2,1),(1,2),(0,3)}";

#[test]
fn trop_prints_tropical_coefficients() {
    let out = tropdiff(&["trop", "--poly", "x1[1,0]^2 - 4*x1[0,0]"]);
    assert_eq!(out.stdout, "{(0,0)}*x1[0,0] + {(0,0)}*x1[1,0]^2\n");
    assert_eq!(tropdiff(&["trop", "--poly", "0"]).stdout, "{}\n");
    let out = tropdiff(&["trop", "--poly", "x1[0,0,1,0]*x1[0,0,0,1] + (-t1^2 + t2^2)*x1[1,0,1,0]"]);
    assert!(out.stdout.contains("{(0,2,0,0),(2,0,0,0)}*x1[1,0,1,0]"), "{}", out.stdout);
}

#[test]
fn check_solves_the_pde_system() {
    let sys = data("pde_system.txt");
    let out = tropdiff(&["check", "--system", &sys, "--supports", PDE_SUPPORTS, "--derive-bound", "1"]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.ends_with("solution: true\n"));
}

#[test]
fn empty_supports_leave_only_constant_terms() {
    // Without constant terms every evaluation is empty.
    let ode = tropdiff(&["check", "--system", &data("sqrt_ode.txt"), "--supports", "{}", "--derive-bound", "3"]);
    assert_eq!(ode.code, 0, "{}", ode.stdout);
    // The second equation has the constant 1, which x = 0 cannot cancel.
    let pde = tropdiff(&["check", "--system", &data("pde_system.txt"), "--supports", "{};{}"]);
    assert_eq!(pde.code, 1);
    assert!(pde.stdout.contains("P2 I=(0,0): {(0,0)}"), "{}", pde.stdout);
    assert!(pde.stdout.contains("vertex (0,0): terms [0]"), "{}", pde.stdout);
}

#[test]
fn check_reports_a_lonely_witness() {
    let out = tropdiff(&["check", "--system", &data("sqrt_ode.txt"), "--supports", "{(0)}"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("vertex (0): terms [0]"), "{}", out.stdout);
}

#[test]
fn eval_and_derive() {
    let out = tropdiff(&[
        "eval", "--field", "sqrt:2", "--poly", "x1[1,0]^2 - 4*x1[0,0]", "--at", "t1^2 + sqrtd*t1*t2 + 1/2*t2^2",
    ]);
    assert_eq!((out.stdout.as_str(), out.code), ("0\n", 0));
    let p = "x1[1,1]*x2[0,1] - x1[0,0] + 1";
    assert_eq!(tropdiff(&["derive", "--poly", p, "--order", "(0,0)"]).stdout, format!("{}\n", "1 - x1[0,0] + x1[1,1]*x2[0,1]"));
    let out = tropdiff(&["derive", "--poly", "2*t*x[1] - x[0]", "--order", "(2)"]);
    assert_eq!(out.stdout, "3*x1[2] + (2*t)*x1[3]\n");
}

#[test]
fn enumerate_finds_only_the_empty_support() {
    let out = tropdiff(&["enumerate", "--system", &data("sqrt_ode.txt"), "--box", "(5)", "--derive-bound", "5"]);
    assert_eq!((out.stdout.as_str(), out.code), ("{}\n", 0));
}

#[test]
fn examples_all_pass() {
    let out = tropdiff(&["examples"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(out.stdout.lines().filter(|l| l.starts_with("PASS")).count(), 4);
}

#[test]
fn json_output_follows_the_schema() {
    let v = json(&["vertices", "--set", "{(1,4),(2,3),(3,3),(4,1)}"]);
    assert_eq!(v, serde_json::json!([[1, 4], [4, 1]]));

    let r = json(&["check", "--system", &data("sqrt_ode.txt"), "--supports", "{(0)}"]);
    assert_eq!(r["solution"], Value::Bool(false));
    let report = &r["reports"][0];
    assert!(report["evaluation"].is_array());
    assert!(report["witnesses"].is_object());
    assert_eq!(report["witnesses"]["(0)"], serde_json::json!([0]));

    let t = json(&["trop", "--poly", "x1[1,0]^2 - 4*x1[0,0]"]);
    assert_eq!(t["terms"].as_array().unwrap().len(), 2);
    let s = json(&["eval", "--poly", "x[1]", "--at", "t^3 + O(t^5)"]);
    assert_eq!(s["precision"], serde_json::json!(4));
    let d = json(&["derive", "--poly", "x[0]^2", "--order", "(1)"]);
    assert_eq!(d["text"], "2*x1[0]*x1[1]");
    let e = json(&["enumerate", "--poly", "x[0]", "--box", "(2)"]);
    assert_eq!(e["solutions"].as_array().unwrap().len(), 1);
    let x = json(&["examples"]);
    assert!(x.as_array().unwrap().iter().all(|f| f["passed"] == Value::Bool(true)));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(tropdiff(&["trop", "--poly", "x1[1,0"]).code, 2);
    assert_eq!(tropdiff(&["check", "--system", "/nonexistent", "--supports", "{}"]).code, 2);
    assert_eq!(tropdiff(&["check", "--poly", "x[0]", "--supports", "{(0)};{(1)}"]).code, 2);
    assert_eq!(tropdiff(&["eval", "--poly", "1.5", "--at", "t"]).code, 2);
    let capped = run_with_cap(["tropdiff", "enumerate", "--poly", "x[0,0]", "--box", "(9,9)"], Some("1000"));
    assert_eq!(capped.code, 2);
    assert!(capped.stderr.contains("exceed the cap"), "{}", capped.stderr);
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--poly", "x1[1,0]^2 - 4*x1[0,0]", "--box", "(1,1)"];
    let first = tropdiff(&args);
    for _ in 0..3 {
        assert_eq!(tropdiff(&args), first);
    }
}
