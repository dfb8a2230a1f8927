use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn framed(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framed")).args(args).current_dir(dir).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn graph_writes_three_files() {
    let d = tempfile::tempdir().unwrap();
    let o = framed(&["graph", "--kind", "cadm", "--g", "3", "--n", "1", "--sig", "-5", "--bound", "12", "--out", "out"], d.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    for ext in ["json", "dot", "csv"] {
        let p = d.path().join(format!("out/cadm_g3_n1_b12.{ext}"));
        assert!(fs::metadata(&p).unwrap().len() > 0, "{ext}");
    }
    let v: Value = serde_json::from_str(&fs::read_to_string(d.path().join("out/cadm_g3_n1_b12.json")).unwrap()).unwrap();
    assert_eq!(v["bound"], 12);
    assert_eq!(v["kind"], "cadm");
    assert!(v["vertices"].as_array().unwrap().len() > 1);
    let e = &v["edges"][0];
    assert_eq!(e[2], "disjoint");
}

#[test]
fn graph_output_is_deterministic() {
    let d = tempfile::tempdir().unwrap();
    for out in ["a", "b"] {
        let o = framed(&["graph", "--kind", "genus_sep", "--g", "3", "--n", "1", "--sig", "-5", "--bound", "14", "--out", out], d.path());
        assert_eq!(code(&o), 0);
    }
    for ext in ["json", "dot", "csv"] {
        let a = fs::read(d.path().join(format!("a/genus_sep_g3_n1_b14.{ext}"))).unwrap();
        let b = fs::read(d.path().join(format!("b/genus_sep_g3_n1_b14.{ext}"))).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn graph_usage_and_resource_errors() {
    let d = tempfile::tempdir().unwrap();
    let o = framed(&["graph", "--kind", "nope", "--g", "3", "--n", "1", "--sig", "-5", "--bound", "8"], d.path());
    assert_eq!(code(&o), 2);
    let o = framed(&["graph", "--kind", "cadm", "--g", "3", "--n", "1", "--sig", "-4", "--bound", "8"], d.path());
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("signature"));
    let o = framed(&["graph", "--kind", "cadm", "--g", "2", "--n", "1", "--sig", "-3", "--bound", "8"], d.path());
    assert_eq!(code(&o), 2);
    let o = framed(&["graph", "--kind", "model_K", "--g", "3", "--n", "1", "--sig", "-5", "--bound", "1000"], d.path());
    assert_eq!(code(&o), 3);
    let o = framed(&["graph", "--g", "3"], d.path());
    assert_eq!(code(&o), 2);
}

#[test]
fn bound_zero_gives_empty_files() {
    let d = tempfile::tempdir().unwrap();
    let o = framed(&["graph", "--kind", "cadm", "--g", "3", "--n", "1", "--sig", "-5", "--bound", "0", "--out", "z"], d.path());
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"));
    let v: Value = serde_json::from_str(&fs::read_to_string(d.path().join("z/cadm_g3_n1_b0.json")).unwrap()).unwrap();
    assert!(v["vertices"].as_array().unwrap().is_empty());
    let csv = fs::read_to_string(d.path().join("z/cadm_g3_n1_b0.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1);
}

#[test]
fn flat_certificate_round_trip() {
    let d = tempfile::tempdir().unwrap();
    let o = framed(&["flat", "--g", "3", "--n", "1", "--sig", "-5", "--out", "c.json"], d.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&fs::read_to_string(d.path().join("c.json")).unwrap()).unwrap();
    let x: Vec<i64> = serde_json::from_value(v["x"].clone()).unwrap();
    assert_eq!(x, vec![11, 22, 33, -68]);
    assert_eq!(code(&framed(&["verify", "c.json"], d.path())), 0);
}

#[test]
fn flat_with_arf() {
    let d = tempfile::tempdir().unwrap();
    for arf in ["0", "1"] {
        let o = framed(&["flat", "--g", "3", "--n", "1", "--sig", "-5", "--arf", arf, "--out", "c.json"], d.path());
        assert_eq!(code(&o), 0);
        let v: Value = serde_json::from_str(&fs::read_to_string(d.path().join("c.json")).unwrap()).unwrap();
        // recompute Σ (x_i + 1)(y_i + 1) mod 2 from the stored basis values
        let vals: Vec<i64> = serde_json::from_value(v["framing"]["gsb_values"].clone()).unwrap();
        let s: i64 = vals.chunks(2).map(|p| (p[0] + 1) * (p[1] + 1)).sum();
        assert_eq!(s.rem_euclid(2).to_string(), arf);
    }
}

#[test]
fn flat_argument_errors() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(&framed(&["flat", "--g", "2", "--n", "1", "--sig", "-3"], d.path())), 2);
    assert_eq!(code(&framed(&["flat", "--g", "3", "--n", "0"], d.path())), 2);
    assert_eq!(code(&framed(&["flat", "--g", "3", "--n", "1", "--sig", "-5", "--arf", "2"], d.path())), 2);
}

#[test]
fn verify_rejects_perturbed_and_truncated() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(&framed(&["flat", "--g", "3", "--n", "1", "--sig", "-5", "--out", "c.json"], d.path())), 0);
    let text = fs::read_to_string(d.path().join("c.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["x"][0] = Value::from(12);
    fs::write(d.path().join("bad.json"), serde_json::to_string(&v).unwrap()).unwrap();
    let o = framed(&["verify", "bad.json"], d.path());
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("first failing check"));
    fs::write(d.path().join("cut.json"), &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&framed(&["verify", "cut.json"], d.path())), 2);
    assert_eq!(code(&framed(&["verify", "missing.json"], d.path())), 2);
    fs::write(d.path().join("other.json"), "{\"hello\": 1}").unwrap();
    assert_eq!(code(&framed(&["verify", "other.json"], d.path())), 2);
}

#[test]
fn verify_graph_snapshots() {
    let d = tempfile::tempdir().unwrap();
    let o = framed(&["graph", "--kind", "model_K", "--g", "3", "--n", "1", "--sig", "-5", "--bound", "8", "--out", "."], d.path());
    assert_eq!(code(&o), 0);
    let p = d.path().join("model_K_g3_n1_b8.json");
    assert_eq!(code(&framed(&["verify", "model_K_g3_n1_b8.json"], d.path())), 0);
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
    v["edges"].as_array_mut().unwrap().pop();
    fs::write(&p, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(code(&framed(&["verify", "model_K_g3_n1_b8.json"], d.path())), 1);
}

#[test]
fn invariants_report() {
    let d = tempfile::tempdir().unwrap();
    let o = framed(&["invariants", "--g", "3", "--n", "1", "--sig", "-5"], d.path());
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["invariants"]["spin_type"], true);
    assert_eq!(v["invariants"]["holomorphic_type"], true);
    assert_eq!(v["invariants"]["arf"], 1);
    let o = framed(&["invariants", "--g", "1", "--n", "1", "--sig", "-1", "--values", "2,4"], d.path());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["invariants"]["arf1"], 2);
    let o = framed(&["invariants", "--g", "3", "--n", "1", "--sig", "-5", "--values", "1,2"], d.path());
    assert_eq!(code(&o), 2);
}

#[test]
fn theta_is_seeded() {
    let d = tempfile::tempdir().unwrap();
    let args = ["theta", "--g", "3", "--n", "1", "--sig", "-5", "--mu", "a1", "--sample", "3"];
    let a = framed(&args, d.path());
    let b = framed(&args, d.path());
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 20_240_611);
    assert_eq!(v["sampled"].as_array().unwrap().len(), 3);
    assert!(v["result"]["diameter_in_target"].as_u64().unwrap() <= 2);
    assert_eq!(code(&framed(&["theta", "--g", "3", "--n", "1", "--sig", "-5", "--mu", "q1"], d.path())), 2);
}

#[test]
fn levels_report() {
    let d = tempfile::tempdir().unwrap();
    let o = framed(&["levels", "--g", "3", "--n", "1", "--sig", "-5", "--mu", "c1"], d.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["splittings"].as_array().unwrap().len(), 1);
    assert_eq!(v["splittings"][0]["n_levels"], 2);
    assert_eq!(v["candidate"]["candidate"], true);
    let o = framed(&["levels", "--g", "3", "--n", "1", "--sig", "-5", "--mu", "a1"], d.path());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["splittings"].as_array().unwrap().is_empty());
    assert_eq!(v["candidate"]["single_admissible"], true);
    let m = r#"{"surface":{"g":3,"n":1},"weights":[1,2,3]}"#;
    assert_eq!(code(&framed(&["levels", "--g", "3", "--n", "1", "--sig", "-5", "--mu", m], d.path())), 2);
}
