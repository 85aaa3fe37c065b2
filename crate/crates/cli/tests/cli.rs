use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn corpus(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../corpus");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn reslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslab"))
        .args(args)
        .env_remove("RESLAB_EDGE_GUARD")
        .output()
        .expect("run reslab")
}

fn reslab_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_reslab"))
        .args(args)
        .env_remove("RESLAB_EDGE_GUARD")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn reslab");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().expect("wait")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn generated_fibonaccene_pipes_into_resonance() {
    let generated = reslab(&["generate", "fibonaccene", "3"]);
    assert_eq!(code(&generated), 0);
    let out = reslab_stdin(&["resonance", "-", "--json"], &generated.stdout);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    // Γ3 is a 4-cycle with a pendant vertex.
    assert_eq!(report["vertex_count"], 5);
    assert_eq!(report["edge_count"], 5);
    assert_eq!(report["connected"], true);
    assert_eq!(report["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(report["guards"]["edge_guard"], 64);
}

#[test]
fn coronene_outer_face_is_not_forcing() {
    let out = reslab(&["check", &corpus("coronene.json"), "--forcing-outer"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("outer face not forcing"));
}

#[test]
fn fibonaccene_passes_every_check() {
    let out = reslab(&["check", &corpus("fibonaccene_4.json"), "--json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let checks = report["checks"].as_object().unwrap();
    assert_eq!(checks.len(), 6);
    assert!(checks.values().all(|c| c["pass"] == true));
}

#[test]
fn gear_is_daisy_but_not_median() {
    let gear = reslab(&["generate", "gear"]);
    let daisy = reslab_stdin(&["check", "-", "--daisy"], &gear.stdout);
    assert_eq!(code(&daisy), 0);
    let median = reslab_stdin(&["check", "-", "--median"], &gear.stdout);
    assert_eq!(code(&median), 1);
    assert!(stdout(&median).contains("not a median graph"));
}

#[test]
fn plane_checks_on_plain_graph_are_input_errors() {
    let path = reslab(&["generate", "path", "4"]);
    let out = reslab_stdin(&["check", "-", "--p2c"], &path.stdout);
    assert_eq!(code(&out), 2);
}

#[test]
fn schema_errors_exit_two_with_context() {
    let out = reslab_stdin(&["mis", "-"], br#"{"vertices": [1, 2], "edges": [[1, 3]]}"#);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("edges[0]"));
    let out = reslab_stdin(&["mis", "-"], b"{\"vertices\": [1,\n");
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = reslab(&["mis", "/nonexistent/graph.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn edge_guard_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_reslab"))
        .args(["resonance", &corpus("coronene.json")])
        .env("RESLAB_EDGE_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit 10"));
    let out = Command::new(env!("CARGO_BIN_EXE_reslab"))
        .args(["resonance", &corpus("hexagon.json"), "--json"])
        .env("RESLAB_EDGE_GUARD", "100")
        .output()
        .unwrap();
    assert_eq!(json(&out)["guards"]["edge_guard"], 100);
}

#[test]
fn classify_tree_prints_one_json_line() {
    let tree = reslab(&["generate", "s3", "2", "3"]);
    let out = reslab_stdin(&["classify-tree", "-", "--json"], &tree.stdout);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.trim_end().lines().count(), 1);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["class"], "S3");
    assert_eq!(v["params"], serde_json::json!([2, 3]));
    assert_eq!(v["mis_predicted"], 4);
    assert_eq!(v["mis_actual"], 4);
}

#[test]
fn classify_rejects_non_trees() {
    let cycle = reslab(&["generate", "cycle", "5"]);
    let out = reslab_stdin(&["classify-tree", "-"], &cycle.stdout);
    assert_eq!(code(&out), 2);
}

#[test]
fn mis_of_plane_graph_uses_the_inner_dual() {
    let out = reslab(&["mis", &corpus("open_coronene.json"), "--json"]);
    let report = json(&out);
    assert_eq!(report["host"], "inner_dual");
    assert_eq!(report["count"], 5);
    assert_eq!(report["independent_sets"], 14);
}

#[test]
fn resonant_sets_of_open_coronene() {
    let out = reslab(&["resonant-sets", &corpus("open_coronene.json"), "--json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let dims: Vec<u64> = report["report"]["maximal_hypercubes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["dimension"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![3, 2, 2, 2, 1]);
    assert_eq!(report["report"]["holds"], true);
}

#[test]
fn bijection_suite_over_the_corpus() {
    let out = reslab(&["verify", "cube-bijection", "--corpus", &corpus("")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("PASS open_coronene.json"));
    assert!(text.contains("SKIP coronene.json"));
    // Lines come out in filename order.
    let names: Vec<&str> = text
        .lines()
        .filter_map(|l| l.split_whitespace().nth(1))
        .filter(|n| n.ends_with(".json") || n.ends_with(".json:"))
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn verify_reports_are_byte_identical() {
    let a = reslab(&["verify", "dual-daisy", "--corpus", &corpus(""), "--json"]);
    let b = reslab(&["verify", "dual-daisy", "--corpus", &corpus(""), "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_suites_pass() {
    for suite in ["counterexamples", "fibonacci", "padovan"] {
        let out = reslab(&["verify", suite]);
        assert_eq!(code(&out), 0, "{suite}: {}", stdout(&out));
    }
    let out = reslab(&["verify", "structure", "--n", "4"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn unknown_suite_and_family_are_input_errors() {
    assert_eq!(code(&reslab(&["verify", "nonsense"])), 2);
    assert_eq!(code(&reslab(&["generate", "nonsense"])), 2);
    assert_eq!(code(&reslab(&["generate", "chain", "4", "LX"])), 2);
}

#[test]
fn resonance_dot_goes_to_a_file() {
    let dir = std::env::temp_dir().join(format!("reslab-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.dot");
    let out = reslab(&[
        "resonance",
        &corpus("naphthalene.json"),
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph resonance"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn export_dot_handles_every_input_kind() {
    for args in [
        &["hexagon"][..],
        &["path", "3"][..],
        &["fibonacci-cube", "3"][..],
    ] {
        let mut gen = vec!["generate"];
        gen.extend_from_slice(args);
        let g = reslab(&gen);
        let out = reslab_stdin(&["export-dot", "-"], &g.stdout);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).starts_with("graph G {"));
    }
}

#[test]
fn open_coronene_face_names_survive_round_trip() {
    let out = reslab(&["generate", "open-coronene"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let names = v["face_names"].as_object().unwrap();
    let keys: Vec<&str> = names.keys().map(String::as_str).collect();
    assert_eq!(keys, ["s1", "s2", "s3", "s4", "s5", "s6"]);
    let shipped: Value =
        serde_json::from_str(&std::fs::read_to_string(corpus("open_coronene.json")).unwrap())
            .unwrap();
    assert_eq!(shipped, v);
}
