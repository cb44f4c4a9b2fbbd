use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binedge")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn cycle_closure_number() {
    let (code, v) = json(&["mclosed", "--input", "c5.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["m"], 4);
    assert_eq!(v["guards"]["max_n"], 9);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn caterpillar_dimension() {
    let (code, v) = json(&["dim", "--input", "fig2.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 19);
    let out = run(&["dim", "--input", "fig2.json"]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("19\n"));
}

#[test]
fn capped_suite_passes() {
    let (code, v) = json(&["verify", "--all", "--max-n", "6", "--seed", "42"]);
    assert_eq!(code, 0);
    let checks = v["result"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 12);
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert_eq!(v["result"]["complete"], false);
    assert_eq!(v["guards"]["seed"], 42);
}

#[test]
fn oracle_suite() {
    let (code, v) = json(&["verify", "--oracle", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["checks"][0]["cases"], 47);
}

#[test]
fn bundled_instances_load() {
    let (code, v) = json(&["analyze", "--input", "ex25.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["classification"]["n"], 5);
    assert_eq!(v["result"]["classification"]["edges"], 4);
    assert_eq!(v["result"]["basis"]["max_degree"], 5);
    let (_, v) = json(&["analyze", "--input", "fig1.json"]);
    assert_eq!(v["result"]["classification"]["n"], 16);
    assert_eq!(v["result"]["classification"]["is_tree"], true);
    assert_eq!(v["result"]["classification"]["is_caterpillar"], false);
}

#[test]
fn files_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::File::create(&path).unwrap().write_all(b"# path\n4 3\n1 2\n2 3\n3 4\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = json(&["closed-check", "--input", p]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["closed"], true);
    let (_, v) = json(&["closed-check", "--input", p, "--labeling", "1,3,2,4"]);
    assert_eq!(v["result"]["closed"], false);
    assert_eq!(v["result"]["m"], 3);
    let (code, _) = json(&["closed-check", "--input", p, "--format", "json"]);
    assert_eq!(code, 65);
}

#[test]
fn groebner_with_oracle() {
    let (code, v) = json(&["groebner", "--input", "ex25.json", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["oracle"]["matches"], true);
    assert_eq!(v["result"]["stats"]["size"], 8);
    let out = run(&["groebner", "--input", r#"{"n":3,"edges":[[1,2],[2,3]]}"#, "--expanded"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("x1*y2 - x2*y1\nx2*y3 - x3*y2\n"));
}

#[test]
fn labelings() {
    let (code, v) = json(&["label", "--input", "fig3.json", "--algo", "two-phase", "--start", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["labeling"], serde_json::json!([12, 11, 1, 7, 3, 6, 5, 10, 9, 8, 2, 4]));
    assert_eq!(v["result"]["max_admissible_degree"], 3);
    let (code, v) = json(&["label", "--input", "fig4.json", "--algo", "bridge", "--bridge", "3,15"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["consecutive_within_two"], true);
    let p2 = r#"{"n":2,"edges":[[1,2]]}"#;
    let p3 = r#"{"n":3,"edges":[[1,2],[2,3]]}"#;
    let (code, v) = json(&["label", "--input", p2, "--algo", "t1bt2", "--middle", p3, "--right", p2, "--joins", "2,1,3,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["details"]["n"], 7);
    let out = run(&["label", "--input", "fig3.json"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("max admissible degree = 3"));
    let (code, _) = json(&["label", "--input", "fig3.json", "--algo", "alg1"]);
    assert_eq!(code, 64);
    let (code, _) = json(&["label", "--input", "fig1.json"]);
    assert_eq!(code, 1);
}

#[test]
fn cycles_trees_primes_betti() {
    let (_, v) = json(&["cycle-label", "5"]);
    assert_eq!(v["result"]["labeling"], serde_json::json!([1, 3, 5, 2, 4]));
    assert_eq!(v["result"]["max_admissible_degree"], 4);
    let (code, v) = json(&["tree3", "--input", "fig1.json"]);
    assert_eq!((code, v["result"]["answer"].clone()), (0, Value::Bool(false)));
    let (_, v) = json(&["weakly-closed", "--input", "c5.json"]);
    assert_eq!(v["result"]["answer"], false);
    let (_, v) = json(&["primes", "--input", "fig2.json", "--caterpillar"]);
    let (_, w) = json(&["primes", "--input", "fig2.json"]);
    assert_eq!(v["result"]["primes"], w["result"]["primes"]);
    let star = r#"{"n":4,"edges":[[1,2],[2,3],[2,4]]}"#;
    let (code, v) = json(&["betti", "--input", star, "--tree"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["tree"]["lhs"], 4);
    let (_, v) = json(&["betti", "--input", "c5.json"]);
    assert!(v["result"]["certificate"]["beta13"].is_number());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["dim", "--input", "fig2.json", "--bogus"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    let (code, v) = json(&["mclosed", "--input", "fig1.json"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "guard");
    let (code, v) = json(&["tree3", "--input", "c5.json"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
    let (code, _) = json(&["dim", "--input", r#"{"n":3,"edges":[[1,2],"#]);
    assert_eq!(code, 65);
    let (code, _) = json(&["dim", "--input", "/nonexistent/graph.txt"]);
    assert_eq!(code, 66);
    let (code, _) = json(&["betti", "--input", "fig2.json", "--cor37"]);
    assert_eq!(code, 1);
}
