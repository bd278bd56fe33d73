use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn build(dir: &TempDir, preset: &str, file: &str) -> PathBuf {
    let path = dir.path().join(file);
    let out = ringlab(&["build", preset, "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_writes_loadable_ring_files() {
    let dir = TempDir::new().unwrap();
    for (preset, order) in [("zmod:4", 4), ("tri:2:zmod:2", 8), ("mat:2:zmod:3", 81)] {
        let path = build(&dir, preset, "r.json");
        let ring = ringlab::FiniteRing::load(&path).unwrap();
        assert_eq!(ring.order(), order, "{preset}");
    }
}

#[test]
fn build_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let out = ringlab(&["build", "zmod:0", "-o", s(&dir.path().join("x.json"))]);
    assert_eq!(code(&out), 2);
    let out = ringlab(&["build", "nonsense", "-o", s(&dir.path().join("x.json"))]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn report_z3_z4_and_trivial() {
    let dir = TempDir::new().unwrap();
    let z3 = json(&ringlab(&["report", s(&build(&dir, "zmod:3", "z3.json"))]));
    assert_eq!(z3["delta"]["r1"], serde_json::json!([0, 1, 2]));
    assert_eq!(z3["jacobson"], serde_json::json!([0]));
    assert_eq!(z3["predicates"]["delta-quasipolar"]["holds"], true);
    assert_eq!(z3["predicates"]["j-quasipolar"]["holds"], false);

    let z4 = json(&ringlab(&["report", s(&build(&dir, "zmod:4", "z4.json"))]));
    assert_eq!(z4["delta"]["consensus"], serde_json::json!([0, 2]));
    assert_eq!(z4["predicates"]["local"]["holds"], true);

    let z1 = build(&dir, "zmod:1", "z1.json");
    let trivial = json(&ringlab(&["report", s(&z1)]));
    assert_eq!(trivial["trivial"], true);
    let text = ringlab(&["report", s(&z1), "--format", "text"]);
    assert_eq!(code(&text), 0);
    assert!(String::from_utf8_lossy(&text.stdout).contains("[trivial]"));
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let t23 = build(&dir, "tri:2:zmod:3", "t23.json");
    let out = ringlab(&["check", s(&t23), "delta-quasipolar"]);
    assert_eq!(code(&out), 1);
    let verdict = json(&out);
    assert_eq!(verdict["holds"], false);
    assert!(verdict["failing_element"].is_u64());
    assert!(verdict["spectral_candidates"].is_array());

    let z4 = build(&dir, "zmod:4", "z4.json");
    let out = ringlab(&["check", s(&z4), "strongly-j-clean", "3"]);
    assert_eq!(code(&out), 0);
    let cert = json(&out);
    assert_eq!(cert["witnesses"]["e"], 1);
    assert_eq!(cert["witnesses"]["w"], 2);
    assert!(cert["checks"].as_array().unwrap().iter().all(|c| c["holds"] == true));

    let z2 = build(&dir, "zmod:2", "z2.json");
    assert_eq!(code(&ringlab(&["check", s(&z2), "boolean"])), 0);

    let out = ringlab(&["check", s(&t23), "delta-quasipolar", "9"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["spectral_candidates"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let z4 = build(&dir, "zmod:4", "z4.json");
    assert_eq!(code(&ringlab(&["check", s(&z4), "no-such-property"])), 2);
    assert_eq!(code(&ringlab(&["check", s(&z4), "local", "1"])), 2);
    assert_eq!(code(&ringlab(&["check", s(&z4), "clean", "4"])), 2);
    assert_eq!(code(&ringlab(&["report", s(&dir.path().join("missing.json"))])), 2);
    assert_eq!(code(&ringlab(&["frobnicate"])), 2);
}

#[test]
fn invalid_ring_file_rejected() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    // 1 + 1 = 0 but 1·1 = 0: not unital.
    std::fs::write(&path, r#"{"name":"bad","order":2,"zero":0,"one":1,"add":[[0,1],[1,0]],"mul":[[0,0],[0,0]]}"#)
        .unwrap();
    let out = ringlab(&["report", s(&path)]);
    assert_eq!(code(&out), 2);
}

#[test]
fn delta_prints_five_agreeing_routes() {
    let dir = TempDir::new().unwrap();
    let d = json(&ringlab(&["delta", s(&build(&dir, "tri:2:zmod:2", "t.json"))]));
    for route in ["r1", "r2", "r3", "r4", "r5"] {
        assert_eq!(d[route], serde_json::json!([0, 1, 2, 3]), "{route}");
    }
    assert_eq!(d["agree"], true);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let ring = build(&dir, "dorroh:zmod:4,zmod:2", "d.json");
    for args in [vec!["report", s(&ring)], vec!["report", s(&ring), "--format", "text"], vec!["delta", s(&ring)]] {
        assert_eq!(ringlab(&args).stdout, ringlab(&args).stdout, "{args:?}");
    }
    let again = dir.path().join("d2.json");
    ringlab(&["build", "dorroh:zmod:4,zmod:2", "-o", s(&again)]);
    assert_eq!(std::fs::read(&ring).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn theorem_suite_on_custom_catalogs() {
    let dir = TempDir::new().unwrap();
    let cat = dir.path().join("cat");
    std::fs::create_dir(&cat).unwrap();
    build(&dir, "zmod:2", "cat/z2.json");
    let out = ringlab(&["verify-paper", "--catalog", s(&cat), "--format", "json"]);
    let results = json(&out);
    let violated = results.as_array().unwrap().iter().any(|r| r["status"] == "violated");
    assert_eq!(code(&out), if violated { 1 } else { 0 });

    std::fs::write(cat.join("broken.json"), "{ not json").unwrap();
    assert_eq!(code(&ringlab(&["verify-paper", "--catalog", s(&cat)])), 2);
    assert_eq!(code(&ringlab(&["verify-paper", "--catalog", s(&dir.path().join("absent"))])), 2);
}

#[test]
fn theorem_suite_exit_code_matches_violations() {
    let out = ringlab(&["verify-paper", "--format", "json"]);
    let results = json(&out);
    let entries = results.as_array().unwrap();
    let violated = entries.iter().any(|r| r["status"] == "violated");
    assert_eq!(code(&out), if violated { 1 } else { 0 });
    let disputed: Vec<&Value> = entries.iter().filter(|r| r["status"] == "disputed-paper-claim").collect();
    assert_eq!(disputed.len(), 1);
    assert!(disputed[0]["witnesses"].as_array().unwrap().iter().any(|w| w["ring"] == "Z9"));
}

#[test]
fn search_finds_and_misses() {
    let out = ringlab(&["search", "--hyp", "local,quasipolar", "--concl", "delta-quasipolar"]);
    assert_eq!(code(&out), 1);
    let found = json(&out);
    assert_eq!(found["ring"], "Z9");
    assert_eq!(found["failing_element"], 1);

    let out = ringlab(&["search", "--hyp", "j-quasipolar", "--concl", "delta-quasipolar"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["counterexample"].is_null());
}
