//! End-to-end checks of the command-line interface: verbs, exit codes, and
//! byte-identical JSON output.

use std::process::{Command, Output};

fn mincover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mincover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn prism_verify_json_exits_zero_with_group_order() {
    let out = mincover(&["prism", "5", "verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["overall"], "pass");
    let facts = doc["facts"].as_array().unwrap();
    assert!(facts
        .iter()
        .any(|f| f["name"] == "group order" && f["value"] == "6000"));
}

#[test]
fn antiprism_report_shows_octahedron_values() {
    let out = mincover(&["antiprism", "3", "report"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("group order: 48"), "{text}");
    assert!(text.contains("cover genus: 0"), "{text}");
}

#[test]
fn bad_map_file_exits_two_and_names_the_edge() {
    let dir = std::env::temp_dir();
    let path = dir.join("mincover-cli-test-bad-map.json");
    // edge {0, 1} lies on three faces
    std::fs::write(&path, r#"{"faces": [[0,1,2],[0,1,3],[0,1,4],[2,3,4]]}"#).unwrap();
    let out = mincover(&["map", path.to_str().unwrap(), "report"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("{0, 1}"), "stderr should name the edge: {err}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn missing_file_exits_two() {
    let out = mincover(&["map", "/nonexistent/faces.json", "report"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn undersized_polygon_exits_two() {
    let out = mincover(&["prism", "2", "report"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_platonic_name_exits_two() {
    let out = mincover(&["platonic", "hypercube", "report"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tight_coset_cap_exits_three() {
    let out = mincover(&["prism", "5", "verify", "--coset-cap", "50"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let first = mincover(&["prism", "6", "verify", "--json"]);
    let second = mincover(&["prism", "6", "verify", "--json"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}

#[test]
fn stabilizer_verb_emits_family_words() {
    let out = mincover(&["prism", "5", "stabilizer", "--tree", "paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("words [family]"), "{text}");
    assert!(text.contains("h_5 = cabababababc"), "{text}");
    assert!(text.contains("schreier-generates"), "{text}");
}

#[test]
fn paper_tree_on_platonic_exits_two() {
    let out = mincover(&["platonic", "cube", "stabilizer", "--tree", "paper"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn good_map_file_verifies() {
    let dir = std::env::temp_dir();
    let path = dir.join("mincover-cli-test-tetrahedron.json");
    std::fs::write(&path, r#"{"faces": [[0,1,2],[0,3,1],[0,2,3],[1,3,2]]}"#).unwrap();
    let out = mincover(&["map", path.to_str().unwrap(), "verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["overall"], "pass");
    std::fs::remove_file(&path).ok();
}
