use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn tannakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tannakit")).args(args).env_remove("TANNAKIT_THREADS").output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_the_three_variable_ring() {
    let out = tannakit(&["analyze", fixture("kxyz.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let r = &doc["as_regular_check"];
    assert_eq!(r["as_regular"], true);
    assert_eq!(r["global_dimension"], 3);
    assert_eq!(r["relation_dims"], serde_json::json!([3, 3, 1, 0]));
}

#[test]
fn poset_queries() {
    let kxy = fixture("kxy.json");
    let out = tannakit(&["poset", kxy.to_str().unwrap(), "--leq", "r2", "r1 r1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"], true);
    let out = tannakit(&["poset", kxy.to_str().unwrap(), "--interval", "r2", "r1 r1"]);
    assert_eq!(json(&out)["interval"], serde_json::json!(["r2", "r1 r1"]));
    let out = tannakit(&["poset", kxy.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_forms() {
    let out = tannakit(&["classify", fixture("forms.json").to_str().unwrap()]);
    let classes = json(&out)["classes"].clone();
    assert_eq!(classes[0]["members"], serde_json::json!([0, 1]));
    assert_eq!(classes.as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("tannakit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"field":"Q","dim_v":2,"variables":["x","y"],"relations":[[{"coef":"1/0","word":[0,1]}]]}"#)
        .unwrap();
    assert_eq!(tannakit(&["analyze", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(tannakit(&["analyze", dir.join("missing.json").to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(tannakit(&["uaut", fixture("monomial.json").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(tannakit(&["hb", fixture("kxy.json").to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(tannakit(&["frobnicate", fixture("kxy.json").to_str().unwrap()]).status.code(), Some(1));

    let threads = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_tannakit"))
            .args(["hilbert", fixture("kxy.json").to_str().unwrap()])
            .env("TANNAKIT_THREADS", v)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(threads("4"), Some(0));
    assert_eq!(threads("0"), Some(1));
    assert_eq!(threads("many"), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_and_formats() {
    let dir = std::env::temp_dir().join(format!("tannakit-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("uaut.tex");
    let out = tannakit(&[
        "uaut",
        fixture("kxy.json").to_str().unwrap(),
        "--format",
        "latex",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let tex = std::fs::read_to_string(&target).unwrap();
    assert!(tex.contains("\\begin{align*}") && tex.contains("S(a) &= \\delta^{-1} d"));
    let text = tannakit(&["comod", fixture("kxy_f7.json").to_str().unwrap(), "--bound", "2", "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("rank only"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bound_applies_to_the_main_degree() {
    let out = tannakit(&["hilbert", fixture("kxy.json").to_str().unwrap(), "--bound", "3"]);
    assert_eq!(json(&out)["graded_dims"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(tannakit(&["hilbert", fixture("kxy.json").to_str().unwrap(), "--bound", "0"]).status.code(), Some(1));
}
