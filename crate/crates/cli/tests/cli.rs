use std::process::{Command, Output};

use serde_json::Value;

fn dickson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dickson")).args(args).output().expect("spawn dickson")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = dickson(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn fails(args: &[&str]) -> String {
    let out = dickson(args);
    assert_eq!(out.status.code(), Some(2), "{args:?} should fail");
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const GF9: [&str; 4] = ["--coeff", "gf(3,2)", "--sigma", "frobenius:1"];

fn gf9(cmd: &str, c: &str) -> Value {
    let mut args = vec![cmd];
    args.extend_from_slice(&GF9);
    args.extend_from_slice(&["--c", c]);
    json(&args)
}

#[test]
fn division_verdicts() {
    let v = gf9("division", "1,1");
    assert_eq!(v["command"], "division");
    assert_eq!(v["result"]["verdict"], "proved-division");
    let v = gf9("division", "0,1");
    assert_eq!(v["result"]["verdict"], "proved-not-division");
    assert_eq!(v["result"]["witness_product_vanishes"], true);
}

#[test]
fn autgroup_gf9() {
    let r = &gf9("autgroup", "1,1")["result"];
    assert_eq!(r["order"], 4);
    assert_eq!(r["oracle_agrees"], true);
    assert_eq!(r["table_is_group"], true);
}

#[test]
fn census_gf9() {
    let v = json(&["census", "--p", "3", "--n", "2"]);
    assert_eq!(v["result"]["classes_excluding_id"], 1);
    assert_eq!(v["result"]["classes_including_id"], 2);
    let out = dickson(&["census", "--p", "5", "--n", "3"]);
    assert!(!out.status.success());
}

#[test]
fn quaternion_and_padic() {
    let quat = ["--coeff", "quat(2,3)", "--sigma", "conjugation:0,1,0,0", "--variant", "left"];
    let mut args = vec!["division"];
    args.extend_from_slice(&quat);
    args.extend_from_slice(&["--c", "0,1,1,0"]);
    assert_eq!(json(&args)["result"]["verdict"], "proved-division");
    let v = json(&["division", "--coeff", "qp(5;sqrt_p)", "--sigma", "conjugate", "--c", "0,1"]);
    assert_eq!(v["result"]["verdict"], "proved-division");
    let mut args = vec!["witness-zero-divisor"];
    args.extend_from_slice(&quat);
    assert_eq!(json(&args)["result"]["vanishes"], true);
}

#[test]
fn nuclei_and_wene() {
    let r = &gf9("nuclei", "1,1")["result"];
    assert_eq!(r["left"]["dim"], 1);
    assert_eq!(r["middle"]["dim"], 2);
    let r = &gf9("wene", "2,0")["result"];
    assert_eq!(r["consistent"], true);
}

#[test]
fn iso_scaled_constants() {
    let mut args = vec!["iso"];
    args.extend_from_slice(&GF9);
    let mut other = args.clone();
    args.extend_from_slice(&["--c", "1,1", "--c2", "2,1"]);
    let v = json(&args);
    assert_eq!(v["result"]["verdict"], "isomorphic");
    assert_eq!(v["result"]["witness_verified"], true);
    other.extend_from_slice(&["--c", "1,1", "--c2", "0,1"]);
    assert_eq!(json(&other)["result"]["verdict"], "not-isomorphic");
}

#[test]
fn same_seed_same_result() {
    let run = || {
        let mut v = gf9("construct", "1,1");
        v.as_object_mut().unwrap().remove("wall_time_ms");
        serde_json::to_string(&v).unwrap()
    };
    let first = run();
    assert_eq!(first, run());
    assert!(first.contains("\"unit_law\":true"));
}

#[test]
fn spec_file_input() {
    let dir = std::env::temp_dir().join(format!("dickson-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gf9.json");
    std::fs::write(&path, r#"{"coeff": "gf(3,2)", "sigma": {"frobenius": 1}, "c": "1,1"}"#).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(json(&["division", "--spec", p])["result"]["verdict"], "proved-division");
    // Flags override the file.
    assert_eq!(json(&["division", "--spec", p, "--c", "0,1"])["result"]["verdict"], "proved-not-division");
    std::fs::write(&path, r#"{"coeff": "gf(3,2)", "sigma": "id", "bogus": 1}"#).unwrap();
    fails(&["division", "--spec", p]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_input_exits_nonzero() {
    let err = fails(&["division", "--coeff", "gf(3,2)", "--sigma", "id", "--c", "1,1"]);
    assert!(err.starts_with("error:"), "{err}");
    fails(&["division", "--coeff", "gf(3,2;1,0,0)", "--sigma", "frobenius:1", "--c", "1,1"]);
    let err = fails(&["division", "--coeff", "gf(3,2;1,2,1)", "--sigma", "frobenius:1", "--c", "1,1"]);
    assert!(err.contains("reducible"), "{err}");
    fails(&["division", "--coeff", "qp(2;sqrt_p)", "--sigma", "conjugate", "--c", "0,1"]);
    fails(&["division", "--coeff", "gf(3,2)", "--sigma", "frobenius:1", "--c", "0,0"]);
    fails(&["division", "--coeff", "nope(1)", "--sigma", "id", "--c", "1"]);
    assert!(dickson(&["division", "--coeff", "gf(3,2)", "--sigma", "id", "--c", "1,1", "--allow-identity"]).status.success());
}

#[test]
fn text_output() {
    let out = dickson(&["autgroup", "--coeff", "gf(3,2)", "--sigma", "frobenius:1", "--c", "1,1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("autgroup\n"));
    assert!(text.contains("order "));
    assert!(text.contains("elements:"));
}
