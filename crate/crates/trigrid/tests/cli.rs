use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use trigrid::document;

fn trigrid(args: &[&str], stdin: &str) -> Output {
    trigrid_env(args, stdin, &[])
}

fn trigrid_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_trigrid"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).env_remove("TRIGRID_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn trigrid");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&ok(out)).unwrap()
}

const SQUARE: &str = r#"{"type":"combinatorial","n":2,"cells":[[0,0],[0,1],[1,0],[1,1]]}"#;

#[test]
fn analyze_square_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.json");
    std::fs::write(&path, SQUARE).unwrap();
    let v = json(&trigrid(&["analyze", "--input", path.to_str().unwrap()], ""));
    assert_eq!(v["status"], "lagrangian-eligible");
    assert_eq!(v["surface"]["name"], "RP^2");
    assert_eq!(v["surface"]["euler"], 1);
    for g in v["grids"].as_array().unwrap() {
        let comps = g["components"].as_array().unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0]["tb"], -1);
        assert_eq!(comps[0]["rot_abs"], 0);
        assert_eq!(comps[0]["unknot"], "unknot_heuristic");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = trigrid(&["generate", "--family", "n3", "--output", path.to_str().unwrap()], "");
    assert_eq!(ok(&out), "");
    let doc = document::parse(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc.name.as_deref(), Some("n3"));
}

#[test]
fn enumerate_three_up_to_translation() {
    let v = json(&trigrid(&["enumerate", "--n", "3", "--symmetry", "t"], ""));
    assert_eq!(v["count"], 1);
    assert_eq!(v["complete"], true);
    assert_eq!(v["diagrams"][0]["type"], "combinatorial");
}

#[test]
fn staircase_pipeline() {
    let doc = ok(&trigrid(&["generate", "--family", "staircase", "--n", "5"], ""));
    let v = json(&trigrid(&["classify"], &doc));
    assert_eq!(v["orientable"], true);
    assert_eq!(v["euler"], -2);
    assert_eq!(v["name"], "#^2 T^2");
    assert_eq!(v["status"], "simple");
}

#[test]
fn exit_codes() {
    assert_eq!(trigrid(&["validate"], SQUARE).status.code(), Some(0));
    // three cells in one row
    let bad = r#"{"type":"combinatorial","n":3,"cells":[[0,0],[1,0],[2,0]]}"#;
    assert_eq!(trigrid(&["validate"], bad).status.code(), Some(1));
    assert_eq!(trigrid(&["validate"], "{not json").status.code(), Some(1));
    let out = trigrid(&["enumerate", "--n", "6", "--budget-nodes", "100"], "");
    assert_eq!(out.status.code(), Some(2));
    let partial: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(partial["complete"], false);
    assert_eq!(trigrid(&["frobnicate"], "").status.code(), Some(64));
    assert_eq!(trigrid(&["enumerate", "--n", "0"], "").status.code(), Some(64));
    assert_eq!(trigrid(&["obstruct", "--claim", "ab"], SQUARE).status.code(), Some(64));
    assert_eq!(trigrid(&["validate", "--input", "/nonexistent/trigrid.json"], "").status.code(), Some(74));
    assert_eq!(trigrid(&["--help"], "").status.code(), Some(0));
}

#[test]
fn invalid_input_reports_position() {
    let out = trigrid(&["validate"], "{\n  \"type\": \"combinatorial\",\n  \"n\": \"two\"\n}");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn enumerated_documents_round_trip() {
    for n in 1..=4 {
        let v = json(&trigrid(&["enumerate", "--n", &n.to_string()], ""));
        for d in v["diagrams"].as_array().unwrap() {
            let text = serde_json::to_string(d).unwrap();
            let doc = document::parse(text.as_bytes()).unwrap();
            assert_eq!(document::emit(&doc), text);
            assert_eq!(json(&trigrid(&["validate"], &text))["valid"], true);
        }
    }
}

#[test]
fn svg_is_deterministic() {
    let doc = ok(&trigrid(&["generate", "--family", "staircase", "--n", "4"], ""));
    for args in [&["render"][..], &["render", "--grid", "bc"], &["render", "--front", "--grid", "ca"]] {
        let a = ok(&trigrid(args, &doc));
        assert!(a.starts_with("<svg"));
        assert_eq!(a, ok(&trigrid(args, &doc)));
    }
    let p = ok(&trigrid(&["pushoff"], &doc));
    assert_eq!(ok(&trigrid(&["render"], &p)), ok(&trigrid(&["render"], &p)));
}

#[test]
fn job_count_does_not_change_results() {
    let args = ["census", "--n", "5", "--symmetry", "tr"];
    let one = ok(&trigrid_env(&args, "", &[("TRIGRID_JOBS", "1")]));
    let four = ok(&trigrid_env(&args, "", &[("TRIGRID_JOBS", "4")]));
    assert_eq!(one, four);
    assert_eq!(one, ok(&trigrid(&[&args[..], &["--jobs", "3"]].concat(), "")));
}

#[test]
fn pushoff_round_trips_through_grids() {
    let grid = r#"{"type":"grid","n":2,"points":[[0,0],[0,1],[1,0],[1,1]],"label":"ab"}"#;
    let p = ok(&trigrid(&["pushoff"], grid));
    let v: Value = serde_json::from_str(&p).unwrap();
    assert_eq!(v["type"], "geometric");
    let grids = json(&trigrid(&["grids"], &p));
    assert_eq!(grids[0]["type"], "grid");
    assert_eq!(grids.as_array().unwrap().len(), 3);
}
