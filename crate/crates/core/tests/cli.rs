use std::process::{Command, Output};

use serde_json::Value;

fn lforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lforge"))
        .args(args)
        .env_clear()
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let out = lforge(&a);
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn zeta_euler_json() {
    let v = json(&["zeta", "euler", "--spec", "primes", "--s", "2", "--bound", "1000"]);
    let value: f64 = v["result"]["value"].as_str().unwrap().parse().unwrap();
    let tail: f64 = v["result"]["tail_bound"].as_str().unwrap().parse().unwrap();
    assert!((value - 1.6449).abs() < tail);
    assert_eq!(v["result"]["bound_used"], 1000);
    assert_eq!(v["config"]["zeta_precision_bits"], 80);
    assert!(v.get("timing").is_none());
}

#[test]
fn ideal_check_reports_witness() {
    let v = json(&["f1", "ideal-check", "x-2"]);
    assert_eq!(v["result"]["verdict"], "NotStable");
    assert_eq!(v["result"]["witness_k"], 2);
}

#[test]
fn universal_pnm_text() {
    let out = lforge(&["universal", "pnm", "2", "2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "x1*x3 - x4");
}

#[test]
fn json_is_deterministic() {
    let args = ["--json", "f1mod", "enumerate", "--p", "5", "--bound", "12"];
    let a = lforge(&args).stdout;
    let b = lforge(&args).stdout;
    assert_eq!(a, b);
    let args = ["--json", "zeta", "euler", "--spec", "primes", "--s", "2.5", "--bound", "20000"];
    assert_eq!(lforge(&args).stdout, lforge(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(lforge(&["nonsense"]).status.code(), Some(2));
    assert_eq!(lforge(&["lambda", "eval", "--ring", "Q", "--elem", "1", "--n", "1"]).status.code(), Some(2));
    let out = lforge(&["--json", "zeta", "euler", "--s", "1", "--bound", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["module"], "zeta_engine");
    assert_eq!(v["error"]["kind"], "invalid_argument");
    let out = lforge(&["--json", "f1mod", "validate", "--n", "5", "--scalars", "1,2,0,3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["witness"], serde_json::json!([2, 2]));
}

#[test]
fn environment_fallback() {
    let out = Command::new(env!("CARGO_BIN_EXE_lforge"))
        .args(["--json", "witt", "ah", "--series", "1+t"])
        .env_clear()
        .env("LFORGE_WITT_LENGTH", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["witt_length"], 3);
    assert_eq!(v["result"]["components"], serde_json::json!(["1", "0", "0"]));
}

#[test]
fn lambda_examples() {
    let v = json(&["lambda", "eval", "--ring", "Z[C2xC3]", "--elem", "g+h", "--n", "2"]);
    assert_eq!(v["result"]["value"], "g*h");
    let v = json(&["lambda", "eval", "--ring", "Z", "--elem", "4", "--n", "2"]);
    assert_eq!(v["result"]["value"], "6");
    let v = json(&["lambda", "degree", "--ring", "Z[C5]", "--elem", "-g"]);
    assert_eq!(v["result"]["degree"], serde_json::json!({ "exceeds_bound": 8 }));
    let v = json(&["lambda", "adams", "--ring", "Z[C3]", "--elem", "g - g^2", "--k", "2"]);
    assert_eq!(v["result"]["value"], "-g + g^2");
}

#[test]
fn module_and_monoid_commands() {
    let v = json(&["f1mod", "homcount", "--p", "5", "--family", "0,0,0"]);
    assert_eq!(v["result"]["hom_count"], 5);
    assert_eq!(v["result"]["hom_count_via_lambda"], 5);
    let v = json(&["monoid", "points", "--domain", "Nplus", "--codomain", "C5"]);
    assert_eq!(v["result"]["count"], 6);
    let v = json(&["f1", "homcount", "C5"]);
    assert_eq!(v["result"]["count"], 6);
    let v = json(&["witt", "ghost", "--components", "3,5,7"]);
    assert_eq!(v["result"]["ghost"], serde_json::json!(["3", "19", "48"]));
}

#[test]
fn verify_quick_passes() {
    let out = lforge(&["verify", "quick"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 10);
}
