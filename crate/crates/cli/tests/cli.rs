use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).to_string_lossy().into_owned()
}

fn nspairs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nspairs")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--emit", "json"];
    all.extend_from_slice(args);
    let o = nspairs(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nspairs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify_elementary_block() {
    let o = nspairs(&["classify", &corpus("elementary_block.lkm")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("NS-pair: yes"), "{text}");
    assert!(text.contains("S³_(3)") || text.contains("S^3_(3)"), "{text}");

    let v = json(&["classify", &corpus("elementary_block.lkm")]);
    assert_eq!(v["is_ns_pair"], Value::Bool(true));
    assert_eq!(v["link_components"], 3);
}

#[test]
fn classify_rejects_non_unimodular_and_odd() {
    let v = json(&["classify", &corpus("doubled_block.lkm")]);
    assert_eq!(v["is_ns_pair"], Value::Bool(false));
    let v = json(&["classify", &corpus("odd_k3.lkm")]);
    assert_eq!(v["is_ns_pair"], Value::Bool(false));
}

#[test]
fn classify_output_requires_ns_pair() {
    let out = scratch("doubled.nsr");
    let o = nspairs(&["classify", &corpus("doubled_block.lkm"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!out.exists());
}

#[test]
fn missing_and_malformed_inputs_exit_2() {
    assert_eq!(nspairs(&["classify", "/nonexistent/matrix.lkm"]).status.code(), Some(2));
    let bad = scratch("bad.lkm");
    std::fs::write(&bad, "skew 2\n0 1\n-1 x\n").unwrap();
    let o = nspairs(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    assert_eq!(nspairs(&["degree", "x^2 +* y"]).status.code(), Some(2));
    assert_eq!(nspairs(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn degree_with_oracle() {
    let v = json(&["degree", "x^3 - 3*x*y^2", "--oracle", "winding"]);
    assert_eq!(v["result"]["degree"], -2);
    assert_eq!(v["result"]["local_algebra_dim"], 4);
    assert_eq!(v["oracle"]["agrees"], Value::Bool(true));
}

#[test]
fn non_isolated_germ_exits_3() {
    assert_eq!(nspairs(&["degree", "x^2*y"]).status.code(), Some(3));
}

#[test]
fn degree_from_germ_file() {
    let v = json(&["degree", "--file", &corpus("planar.germ"), "--component", "saddle"]);
    assert_eq!(v["result"]["degree"], -1);
    let v = json(&["degree", "--file", &corpus("spatial_map.germ"), "--component", "f2"]);
    assert_eq!(v["result"]["degree"], 0);
    let o = nspairs(&["degree", "--file", &corpus("planar.germ"), "--component", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_sum_from_matrix_and_record() {
    let from_lkm = json(&["construct", "sum", &corpus("elementary_block.lkm")]);
    let from_nsr = json(&["construct", "sum", &corpus("s5_l3.nsr")]);
    for v in [&from_lkm, &from_nsr] {
        assert_eq!(v["source_dim"], 6);
        assert_eq!(v["target_dim"], 3);
        assert_eq!(v["link_components"], 5);
        assert_eq!(v["degree"], -4);
    }
}

#[test]
fn construct_writes_readable_records() {
    let out = scratch("sum.nsr");
    let o = nspairs(&["construct", "sum", &corpus("s5_l3.nsr"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written, std::fs::read_to_string(corpus("germ_6_3.nsr")).unwrap());
    let v = json(&["construct", "project", out.to_str().unwrap()]);
    assert_eq!(v["target_dim"], 2);
}

#[test]
fn construct_higher() {
    let v = json(&["construct", "higher", "--n", "3", "--blocks", "1"]);
    assert_eq!(v["link_components"], 9);
    let o = nspairs(&["construct", "higher", "--n", "3", "--matrix", &corpus("odd_k3.lkm")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn generate_round_trips_through_classify() {
    let out = scratch("gen.lkm");
    let o = nspairs(&["--quiet", "generate", "--blocks", "3", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v = json(&["classify", out.to_str().unwrap()]);
    assert_eq!(v["k"], 6);
    assert_eq!(v["is_ns_pair"], Value::Bool(true));
    assert_eq!(v["link_components"], 7);
}
