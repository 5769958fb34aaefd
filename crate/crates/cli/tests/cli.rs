use std::process::{Command, Output};

use serde_json::Value;

fn finitary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finitary")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = finitary(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(args: &[&str]) -> i32 {
    finitary(args).status.code().expect("exited normally")
}

#[test]
fn contains_and_var_examples() {
    assert_eq!(json(&["cls", "contains", "--family", "sp", "E", "L(1)"]), serde_json::json!({"contains": true}));
    assert_eq!(json(&["ideal", "var", "--family", "sp", "--v", "2"]), serde_json::json!({"var": "sp<=4"}));
    assert_eq!(json(&["ideal", "var", "--family", "so", "--v", "1", "L(2)"])["var"], "so<=2");
}

#[test]
fn normalize_is_a_fixed_point() {
    let first = json(&["cls", "normalize", "--family", "sp", "Linf(2)*L(3)^1*E^2"]);
    let nf = first["normal_form"].as_str().unwrap().to_string();
    assert_eq!(nf, "Linf(2)*L(3)*E^2");
    let second = json(&["cls", "normalize", "--family", "sp", &nf]);
    assert_eq!(first, second);
    assert_eq!(json(&["cls", "normalize", "--family", "sl", "L(1)+R(1)"])["components"], 2);
}

#[test]
fn domain_and_usage_errors_exit_one() {
    assert_eq!(code(&["cls", "normalize", "--family", "so", "Spin*Spin"]), 1);
    assert_eq!(code(&["cls", "normalize", "--family", "sx", "E"]), 1);
    assert_eq!(code(&["no-such-group"]), 1);
    assert_eq!(code(&["verify", "var", "--seed", "3"]), 1);
    assert_eq!(code(&["mat", "rank", "--family", "sp", "[[1,0],[0,1]]"]), 1);
}

#[test]
fn verify_reports_pass_and_failure() {
    let report = json(&["verify", "coherence", "--family", "sl", "--nmax", "3"]);
    assert_eq!(report["passed"], true);
    assert_eq!(report["criteria"][0]["id"], 3);
    assert_eq!(json(&["verify", "7"])["criteria"][0]["name"], "var");
    // sl primes within these bounds collide at every rank up to 4
    assert_eq!(code(&["verify", "separation", "--bounds", "v=1,w=1,m=1,idx=3,exp=1"]), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["ideal", "hasse", "--family", "sp", "--bounds", "v=1,m=1,idx=2,exp=1"];
    assert_eq!(finitary(&args).stdout, finitary(&args).stdout);
    let dot = finitary(&[&args[..], &["--format", "dot"]].concat());
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph ideals_sp {"));
    assert!(text.contains("label=\"I(L(1))\""));
    let keys: Vec<String> = json(&args).as_object().unwrap().keys().cloned().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn matrix_payloads_round_trip() {
    let regular = finitary(&["mat", "regular", "--family", "sp", "--level", "3", "--rank", "4"]);
    let text = String::from_utf8(regular.stdout).unwrap();
    let lifted = json(&["mat", "lift", &text, "--target", "6"]);
    assert_eq!(lifted["shifted_rank"], 3);
    assert_eq!(lifted["lifted"]["form"], "skew");
    let back = json(&[
        "mat",
        "project",
        &lifted.to_string(),
        "--basis",
        "[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0]]",
    ]);
    let original: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back["projected"], original["matrix"]);
}

#[test]
fn shifted_rank_with_rational_entries() {
    let out = json(&["mat", "rank", "--family", "sl", "--level", "1", r#"[["1/2","1"],["0","-1/2"]]"#]);
    assert_eq!(out["min_shifted_rank"], 1);
    assert_eq!(out["in_variety"], true);
    let irr = json(&["mat", "jordan", "--family", "sl", "[[0,2],[1,0]]"]);
    assert_eq!(irr["factors"][0]["factor"], "t^2 - 2");
}

#[test]
fn geometry_reports() {
    let density = json(&["mat", "density", "--family", "so", "--blocks", "A(2),B,C", "--targets", "1,-3"]);
    assert_eq!(density["verified"], true);
    let closure = json(&["mat", "closure-check", "--family", "sp", "--level", "3", "--rank", "4"]);
    assert_eq!(closure["all_certified"], true);
    let member = json(&["mat", "membership", "--family", "sp", "--level", "1", "--samples", "20", "[[1,0],[0,-1]]"]);
    assert_eq!(member["consistent"], true);
}

#[test]
fn representation_queries() {
    let b = json(&["rep", "branch", "--family", "sp", "[1,1]"]);
    assert_eq!(b["terms"]["[1]"], 2);
    assert_eq!(b["terms"]["[0]"], 1);
    let t = json(&["rep", "tensor", "--family", "sl", "[1,0]", "[1,0]"]);
    assert_eq!(t["terms"].as_object().unwrap().len(), 2);
    let catalog = json(&["ideal", "catalog", "--family", "sp", "--vmax", "-1"]);
    assert_eq!(catalog["entries"].as_array().unwrap().len(), 0);
}
