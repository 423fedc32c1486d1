//! End-to-end tests of the `coxart` binary.

use serde_json::Value;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn coxart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxart")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn documented_examples() {
    let o = coxart(&["reduce", "--type", "A2", "--word", "1 1"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "[]"));
    let o = coxart(&["mu", "--type", "A4", "--J", "3,4", "--K", "2,4"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = coxart(&["mu", "--type", "A4", "--J", "2,4", "--K", "3,4"]);
    assert_eq!(stdout(&o).trim(), "4");
    let o = coxart(&["counts", "--family", "multipar", "--type", "A4"]);
    assert_eq!(stdout(&o).trim(), "68");
    let o = coxart(&["--json", "conjecture", "multipar-closure", "--type", "A5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["extra_products"], 13);
    let o = coxart(&["conjecture", "multipar-closure", "--type", "A5"]);
    assert!(stdout(&o).starts_with("13 extra products"));
}

#[test]
fn computations() {
    let o = coxart(&["nf", "--type", "A2", "--word", "1,2,1,2"]);
    assert_eq!(stdout(&o).trim(), "[[1, 2, 1], [2]]");
    let o = coxart(&["star", "--type", "A2", "--x", "1 2", "--y", "1"]);
    assert_eq!(stdout(&o).trim(), "[1, 2, 1]");
    let o = coxart(&["star-subsets", "--type", "A4", "--J", "2,3,4", "--K", "1,2,3"]);
    assert_eq!(stdout(&o).trim(), "{2,3}");
    let o = coxart(&["--json", "proj", "--type", "A3", "--J", "1,2", "--word", "1 2 3 2 1"]);
    assert_eq!(json(&o)["length"], 3);
    let o = coxart(&["--json", "multipar", "--type", "D4", "--method", "both"]);
    assert_eq!(json(&o)["equal"], true);
    let o = coxart(&["--json", "chebyshev", "--family", "D", "--n", "5"]);
    assert_eq!(json(&o)["matches_recursion"], true);
    let o = coxart(&["--json", "counts", "--family", "hom-b2-b", "--n", "3"]);
    assert_eq!(json(&o)["formula"], 20);
    let o = coxart(&["--json", "burau", "--n", "2", "--q", "2", "--word", "1 2 1"]);
    assert_eq!(json(&o)["symmetric"], true);
    let o = coxart(&["--json", "falsify", "--n", "6", "--J", "1,3,5,7"]);
    assert_eq!(json(&o)["symmetric_powers"], serde_json::json!([]));
    let o = coxart(&["--json", "hom-search", "--target", "A2", "--N", "3", "--fully-supported"]);
    assert_eq!(json(&o)["count"], 3);
    let o = coxart(&["--json", "catalog", "unfold-h3-d6"]);
    assert_eq!((code(&o), json(&o)["verified"].clone()), (0, Value::Bool(true)));
    let o = coxart(&["catalog", "--list"]);
    assert!(stdout(&o).lines().any(|l| l == "sporadic-i12"));
    let o = coxart(&["--json", "run", "idempotents", "--args", r#"{"type":"B3"}"#]);
    assert_eq!(json(&o)["idempotents"], 8);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&coxart(&["reduce", "--type", "X9", "--word", "1"])), 2);
    assert_eq!(code(&coxart(&["reduce", "--type", "A2", "--word", "1 7"])), 2);
    assert_eq!(code(&coxart(&["reduce", "--type", "A2", "--word", "a"])), 2);
    assert_eq!(code(&coxart(&["frobnicate"])), 2);
    assert_eq!(code(&coxart(&["--jobs", "0", "reduce", "--type", "A2"])), 2);
    let o = coxart(&["hom-check", "--source", "A2", "--target", "A3", "--images", "1 3;2"]);
    assert_eq!(code(&o), 1);
    let o = coxart(&["hom-check", "--source", "A2", "--target", "A3", "--images", "1;2"]);
    assert_eq!(code(&o), 0);
    // the B2 -> D5 parameters with n = 2m and K = {n+1} do not give a homomorphism
    let o = coxart(&["catalog", "hom-b2-d", "--params", r#"{"n":4,"m":2,"K":[5]}"#]);
    assert_eq!(code(&o), 1);
    let o = coxart(&["catalog", "hom-b2-d", "--params", r#"{"n":2,"m":2}"#]);
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_coxart"))
        .env("COXART_JOBS", "1")
        .args(["mu", "--type", "A4", "--J", "3,4", "--K", "2,4"])
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn json_output_is_stable_and_sorted() {
    let args = ["--json", "catalog", "tau", "--params", r#"{"n":4,"J":[1,2,4,5]}"#];
    let a = stdout(&coxart(&args));
    let b = stdout(&coxart(&args));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(a.trim()).unwrap();
    assert_eq!(v.to_string(), a.trim());
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

fn write(dir: &Path, name: &str, v: Value) -> String {
    let p = dir.join(name);
    fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn suites_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.json", serde_json::json!({"checks": []}));
    let o = coxart(&["verify", "--suite", &empty, "--no-cache"]);
    assert_eq!(code(&o), 0);

    let good = write(
        dir.path(),
        "good.json",
        serde_json::json!({
            "cache": "results.jsonl",
            "checks": [
                {"name": "mu", "op": "mu", "args": {"type": "A4", "J": [3, 4], "K": [2, 4]},
                 "path": "/mu", "expect": 3, "origin": "published"},
                {"name": "a-reduce", "op": "reduce", "args": {"type": "A2", "word": "1 1"},
                 "path": "/word", "expect": [], "origin": "trivial"}
            ]
        }),
    );
    let cache = dir.path().join("results.jsonl");
    let o = coxart(&["--json", "verify", "--suite", &good]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["passed"], 2);
    // ordered by name
    assert_eq!(r["checks"][0]["name"], "a-reduce");
    assert_eq!(fs::read_to_string(&cache).unwrap().lines().count(), 2);
    let o = coxart(&["--json", "verify", "--suite", &good]);
    assert_eq!(json(&o)["cached"], 2);
    assert_eq!(fs::read_to_string(&cache).unwrap().lines().count(), 2);
    let o = coxart(&["--json", "--jobs", "1", "verify", "--suite", &good, "--force"]);
    assert_eq!(json(&o)["passed"], 2);
    assert_eq!(fs::read_to_string(&cache).unwrap().lines().count(), 4);

    let bad = write(
        dir.path(),
        "bad.json",
        serde_json::json!({"checks": [
            {"name": "mu", "op": "mu", "args": {"type": "A4", "J": [3, 4], "K": [2, 4]},
             "path": "/mu", "expect": 4, "origin": "published"}
        ]}),
    );
    let o = coxart(&["verify", "--suite", &bad, "--cache", dir.path().join("bad.jsonl").to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("expected: 4"));
    assert!(stdout(&o).contains("got:      3"));

    let broken = write(
        dir.path(),
        "broken.json",
        serde_json::json!({"checks": [
            {"name": "x", "op": "mu", "args": {"type": "Q2"}, "origin": "trivial"}
        ]}),
    );
    assert_eq!(code(&coxart(&["verify", "--suite", &broken, "--no-cache"])), 2);
    let unknown = write(
        dir.path(),
        "unknown.json",
        serde_json::json!({"checks": [{"name": "x", "op": "nope", "origin": "trivial"}]}),
    );
    assert_eq!(code(&coxart(&["verify", "--suite", &unknown, "--no-cache"])), 2);
    assert_eq!(code(&coxart(&["verify", "--suite", "/nonexistent/suite.json"])), 2);
}

/// The bundled manifest: every check passes except the catalog sweep, which records the
/// `B_2 → D_5` parameters that are not homomorphisms.
#[test]
fn bundled_suite() {
    let o = coxart(&["--json", "verify", "--suite", "paper", "--no-cache"]);
    let r = json(&o);
    let failed: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] != "pass")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["13-catalog-all"]);
    assert_eq!(code(&o), 1);
    let bad = &r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "13-catalog-all").unwrap()["got"];
    assert_eq!(bad.as_array().unwrap().len(), 2);
    assert!(bad.as_array().unwrap().iter().all(|f| f["family"] == "hom-b2-d" && f["params"]["n"] == 4));
}
