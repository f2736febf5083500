use std::path::PathBuf;
use std::process::{Command, Output};

fn qtilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtilt")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qtilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_main_on_example_files_passes_and_matches_demo() {
    let (a, b) = (scratch("main.json"), scratch("demo.json"));
    let dot = scratch("main.dot");
    let out = qtilt(&[
        "verify-main",
        "--quiver",
        &data("triangle.quiver"),
        "--word",
        &data("triangle.word"),
        "--json",
        a.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(qtilt(&["demo-sec5", "--json", b.to_str().unwrap()]).status.code(), Some(0));
    let ra: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let rb: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    for key in ["A_presentation", "gamma_presentation", "M_summands", "tilting", "two_apr_grid", "iso", "dims"] {
        assert_eq!(ra[key], rb[key], "{key}");
    }
    assert_eq!(ra["verdict"], true);
    assert_eq!(ra["iso"]["dim_gamma"], ra["iso"]["dim_end"]);
    let dot = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(dot.matches("digraph").count(), 3);
}

#[test]
fn identical_configs_give_identical_reports() {
    let (a, b) = (scratch("seed_a.json"), scratch("seed_b.json"));
    for p in [&a, &b] {
        let out = qtilt(&["tilt", "--quiver", &data("a3.quiver"), "--seed", "11", "--json", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn input_errors_exit_with_two() {
    let m0 = qtilt(&["gamma", "--quiver", &data("a3.quiver"), "--word", "1 2 3"]);
    assert_eq!(m0.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&m0.stderr).contains("m ≥ 1"));

    let syntax = qtilt(&["gamma", "--quiver", &data("a3.quiver"), "--word", "3 2 3 1 2 3"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("column"));

    let bad = scratch("bad.quiver");
    std::fs::write(&bad, "vertex 1\narrow a 1 2\n").unwrap();
    let undeclared = qtilt(&["check-word", "--quiver", bad.to_str().unwrap(), "--word", "1 | 1"]);
    assert_eq!(undeclared.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&undeclared.stderr).contains("undeclared vertex 2"));

    assert_eq!(qtilt(&["frobnicate", "--quiver", &data("a3.quiver")]).status.code(), Some(2));
    assert_eq!(qtilt(&["gamma"]).status.code(), Some(2));
}

#[test]
fn renumbering_is_recorded() {
    let out = qtilt(&["check-word", "--quiver", &data("a3_reversed.quiver"), "--word", "1 | 1 2 | 1 2 3"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    let json = &stdout[stdout.find('{').unwrap()..];
    let r: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(r["renumbering"]["1"], 3);
    assert_eq!(r["word"]["normalized"], "3 | 2 3 | 1 2 3");
}

#[test]
fn every_stage_command_runs() {
    for cmd in ["check-word", "gamma", "jacobian", "auslander", "tilt"] {
        let out = qtilt(&[cmd, "--quiver", &data("triangle.quiver"), "--word", "3 | 2 3 | 1 2 3 | 1 2 3"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
    }
}
