use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn hollow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hollow")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn two_thetas_are_co_uniform_but_not_hollow() {
    let t2 = fixture("theta2.json");
    assert_eq!(code(&hollow(&["check", &t2, "--property", "co-uniform"])), 0);
    let o = hollow(&["check", &t2, "--property", "hollow", "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"]["partner"], serde_json::json!(["θ2"]));
}

#[test]
fn regular_s2_is_hollow() {
    assert_eq!(code(&hollow(&["check", &fixture("s2.json"), "--property", "hollow"])), 0);
}

#[test]
fn subact_properties() {
    let t2 = fixture("theta2.json");
    assert_eq!(code(&hollow(&["check", &t2, "--property", "coessential", "--subact", "T1"])), 0);
    assert_eq!(code(&hollow(&["check", &t2, "--property", "superfluous", "--subact", "T1"])), 1);
    // Inside {θ1} alone the act is simple.
    assert_eq!(code(&hollow(&["check", &t2, "--property", "simple", "--within", "T1"])), 0);
}

#[test]
fn supplements_under_both_readings() {
    let t3 = fixture("theta3.json");
    for r in ["strict", "relaxed"] {
        assert_eq!(code(&hollow(&["check", &t3, "--property", "supplemented", "--reading", r])), 0);
        let o = hollow(&["check", &t3, "--property", "supplement", "--subact", "T12", "--subact", "T3", "--reading", r]);
        assert_eq!(code(&o), 0);
    }
    let s2 = fixture("s2.json");
    assert_eq!(code(&hollow(&["check", &s2, "--property", "supplemented", "--reading", "strict"])), 1);
    assert_eq!(code(&hollow(&["check", &s2, "--property", "supplemented", "--reading", "relaxed"])), 0);
}

#[test]
fn input_errors_exit_with_two() {
    let t3 = fixture("theta3.json");
    assert_eq!(code(&hollow(&["check", &t3, "--property", "supplement", "--subact", "T12"])), 2);
    assert_eq!(code(&hollow(&["check", &t3, "--property", "superfluous", "--subact", "nope"])), 2);
    assert_eq!(code(&hollow(&["check", &t3, "--property", "cover"])), 2);
    assert_eq!(code(&hollow(&["check", "/no/such/file.json", "--property", "hollow"])), 2);
    assert_eq!(code(&hollow(&["check", &t3, "--property", "bogus"])), 2);
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["check", &fixture("theta3.json"), "--property", "co-uniform", "--json"];
    let (a, b) = (hollow(&args), hollow(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&a), 1);
}

#[test]
fn radicals() {
    let v = json(&hollow(&["compute", &fixture("s2.json"), "radical", "--json"]));
    assert_eq!(v["radical"], serde_json::json!(["0"]));
    let v = json(&hollow(&["compute", &fixture("theta2.json"), "radical", "--json"]));
    assert_eq!(v["radical"], serde_json::json!([]));
    assert_eq!(v["maximals"], serde_json::json!([["θ1"], ["θ2"]]));
}

#[test]
fn constructions_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("amalgam.json");
    let out_s = out.display().to_string();
    let o = hollow(&["compute", &fixture("s2.json"), "amalgam", "--subact", "I", "--out", &out_s]);
    assert_eq!(code(&o), 0);
    let v = json(&hollow(&["compute", &out_s, "subacts", "--json"]));
    assert_eq!(v["subacts"].as_array().unwrap().len(), 4);
    assert_eq!(code(&hollow(&["check", &out_s, "--property", "indecomposable"])), 0);
    assert_eq!(code(&hollow(&["check", &out_s, "--property", "hollow"])), 1);

    let coprod = dir.path().join("coproduct.json").display().to_string();
    let o = hollow(&["compute", &fixture("theta2.json"), "coproduct", "--with", &fixture("s2.json"), "--out", &coprod]);
    assert_eq!(code(&o), 0);
    let v = json(&hollow(&["compute", &coprod, "decompose", "--json"]));
    assert_eq!(v["components"].as_array().unwrap().len(), 3);

    let printed = stdout(&hollow(&["compute", &fixture("s2.json"), "amalgam", "--subact", "I"]));
    assert_eq!(printed, std::fs::read_to_string(&out).unwrap());
}

#[test]
fn supplements_listing() {
    let v = json(&hollow(&["compute", &fixture("theta3.json"), "supplements", "--subact", "T12", "--json"]));
    assert_eq!(v["supplements"], serde_json::json!([["θ3"]]));
}

#[test]
fn suite_commands() {
    let o = hollow(&["suite", "--claims", "bogus"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown claim `bogus`"));

    let o = hollow(&["suite", "--monoids", "trivial", "--max-size", "1"]);
    assert_eq!(code(&o), 0);

    let o = hollow(&["suite", "--monoids", "S2", "--max-size", "3", "--claims", "L5.2", "--mode", "both"]);
    let readings: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["reading"].clone())
        .collect();
    assert_eq!(readings, vec![Value::from("strict"), Value::from("relaxed")]);
}

#[test]
fn suite_writes_a_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl").display().to_string();
    let o = hollow(&["suite", "--monoids", "S2,cyclic_group(2)", "--max-size", "3", "--claims", "T3.4,strictness", "--out", &out]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["claim"], "T3.4");
    assert_eq!(lines[0]["corpus"]["monoids"], serde_json::json!(["cyclic_monoid(1,1)", "cyclic_group(2)"]));
    assert!(lines.iter().any(|l| l["strictness"]["implication"] == "co-uniform ⇏ hollow"));
}

#[test]
fn enumeration_commands() {
    let o = hollow(&["enumerate", "--monoid", "S2", "--size", "2", "--count"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = hollow(&["enumerate", "--monoid", "S2", "--size", "2", "--iso", "--count"]);
    assert_eq!(stdout(&o).trim(), "2");
    let lex = stdout(&hollow(&["enumerate", "--monoid", "T2", "--size", "3", "--json"]));
    let search = stdout(&hollow(&["enumerate", "--monoid", "T2", "--size", "3", "--json", "--seed-order", "search"]));
    let (mut a, mut b): (Vec<&str>, Vec<&str>) = (lex.lines().collect(), search.lines().collect());
    assert_eq!(a.len(), b.len());
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn claim_replay_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("instance.json");
    let text = std::fs::read_to_string(fixture("theta2.json"))
        .unwrap()
        .replace(r#""T1": ["θ1"], "T2": ["θ2"]"#, r#""B": ["θ1"], "C": ["θ1"]"#);
    std::fs::write(&path, text).unwrap();
    let p = path.display().to_string();
    let o = hollow(&["check", &p, "--claim", "L2.4(ii)", "--json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["detail"], serde_json::json!({ "C_in_A": false, "C_in_B": true }));
    assert_eq!(code(&hollow(&["check", &p, "--claim", "L2.4(i)"])), 0);
    assert_eq!(code(&hollow(&["check", &p, "--claim", "nope"])), 2);
}
