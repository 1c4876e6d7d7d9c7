use std::process::{Command, Output};

use serde_json::Value;

const GENERIC: &str = r#"{"n":2,"entries":[["2","0"],["0","3"]]}"#;
const RESONANT: &str = r#"{"n":2,"entries":[["q^2","0"],["0","1"]]}"#;
const SCALAR: &str = r#"{"n":2,"entries":[["1","0"],["0","1"]]}"#;
const NILPOTENT: &str = r#"{"n":2,"entries":[["0","1"],["0","0"]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qadjoint")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn kernel_reports() {
    let r = report(&["kernel", "--point", GENERIC, "--degree", "2"]);
    assert_eq!((r["kernel"].as_u64(), r["ideal"].as_u64(), r["equal"].as_bool()), (Some(6), Some(6), Some(true)));
    assert!(r["conventions"]["tau"].is_string());

    let r = report(&["kernel", "--point", SCALAR, "--degree", "1"]);
    assert!(r["kernel"].as_u64() > r["ideal"].as_u64());
    assert_eq!(r["ideal_in_kernel"], true);

    let r = report(&["kernel", "--point", NILPOTENT, "--degree", "2", "--q1"]);
    assert_eq!(r["equal"], true);
    assert_eq!(r["q1_kernel"], r["kernel"]);
}

#[test]
fn image_reports() {
    let r = report(&["image", "--point", GENERIC, "--degree", "2", "--q1"]);
    assert_eq!(r["dimension"], 9);
    assert_eq!(r["in_diagonal_coinvariants"], true);
    assert_eq!(r["sl"]["contains_sphere_span"], true);
    assert_eq!(r["q1_equal"], true);

    let r = report(&["image", "--point", RESONANT, "--degree", "2"]);
    let dec = r["sl"]["decomposition"].as_array().unwrap();
    let pairs: Vec<(u64, u64)> = dec.iter().map(|v| (v["two_l"].as_u64().unwrap(), v["multiplicity"].as_u64().unwrap())).collect();
    assert_eq!(pairs, vec![(0, 1), (2, 1)]);

    let r = report(&["image", "--point", GENERIC, "--degree", "0"]);
    assert_eq!(r["dimension"], 1);
    assert_eq!(r["character"]["text"], "1");
}

#[test]
fn identities_all_pass() {
    let out = run(&["identities"]);
    assert!(out.status.success());
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["pass"], true);
    let items = r["items"].as_array().unwrap();
    assert!(items.iter().all(|i| i["pass"] == true));
    assert!(items.iter().any(|i| i["item"] == "difference identity r = 0"));
}

#[test]
fn verify_coinvariants_n3() {
    let r = report(&["verify-coinvariants", "--n", "3"]);
    assert_eq!(r["pass"], true);
    assert_eq!(r["items"].as_array().unwrap().len(), 7);
}

#[test]
fn eval_matches_closed_form() {
    // -q(ξ1 - ξ2) c a = q c a = a c at diag(2, 3)
    let r = report(&["eval", "--point", GENERIC, "--expr", "x21"]);
    assert_eq!(r["sl_value"], "a*c");
    let r = report(&["eval", "--point", RESONANT, "--expr", "x21^2"]);
    assert_eq!(r["sl_value"], "0");
    let r = report(&["eval", "--point", GENERIC, "--expr", "x12", "--coaction", "alpha", "--q1"]);
    assert_eq!(r["q1"], true);
}

#[test]
fn character_command() {
    let r = report(&["character", "--sphere", "1"]);
    assert_eq!(r["sphere"]["character"]["text"], "z^2 + 2 + z^-2");
    let r = report(&["character", "--cr", "1"]);
    assert_eq!(r["cr"]["difference_identity"], true);
    let sym = report(&["character", "--point", GENERIC, "--degree", "2"]);
    let q1 = report(&["character", "--point", GENERIC, "--degree", "2", "--q1"]);
    assert_eq!(sym["image"]["character"], q1["image"]["character"]);
}

#[test]
fn errors_exit_nonzero() {
    let bad = run(&["kernel", "--point", r#"{"n":2,"entries":[["1","1"],["0","0"]]}"#, "--degree", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("x11*x12"));
    let big = run(&["kernel", "--point", GENERIC, "--degree", "9"]);
    assert_eq!(big.status.code(), Some(2));
    assert!(!run(&["kernel", "--point", GENERIC, "--degree", "1", "--coaction", "gamma"]).status.success());
}

#[test]
fn out_flag_and_reproducibility() {
    let dir = std::env::temp_dir().join(format!("qadjoint-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let point = dir.join("point.json");
    std::fs::write(&point, GENERIC).unwrap();
    let path = dir.join("image.json");
    let args = ["image", "--point", point.to_str().unwrap(), "--degree", "2", "--out", path.to_str().unwrap()];
    assert!(run(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    assert!(run(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());
    let r: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(r["dimension"], 9);
    std::fs::remove_dir_all(&dir).unwrap();
}
