//! End-to-end checks of the binary: output shapes, exit codes, and a
//! round-trip through the graph JSON schema.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sympoly"))
}

fn write_fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("sympoly-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn facets_count_only() {
    let c4 = write_fixture("c4.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#);
    let out = bin().arg("facets").arg(&c4).arg("--count-only").output().unwrap();
    assert_eq!(stdout_json(&out), serde_json::json!({"count": 6}));
}

#[test]
fn facets_fvector_from_text_input() {
    let c4 = write_fixture("c4.txt", "0 1\n1 2\n2 3\n0 3\n");
    let out = bin().arg("facets").arg(&c4).arg("--fvector").output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["count"], 6);
    assert_eq!(v["fvector"], serde_json::json!([8, 12, 6]));
}

#[test]
fn volume_and_triangulation_file() {
    let c4 = write_fixture("c4v.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#);
    let tri = std::env::temp_dir().join("sympoly-cli-tests/c4-tri.json");
    let out = bin()
        .arg("volume")
        .arg(&c4)
        .arg("--triangulation")
        .arg(&tri)
        .output()
        .unwrap();
    assert_eq!(stdout_json(&out), serde_json::json!({"volume": 12}));
    let tri_json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&tri).unwrap()).unwrap();
    let facets = tri_json.as_array().unwrap();
    assert_eq!(facets.len(), 6);
    let total: usize = facets
        .iter()
        .map(|f| f["simplices"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 12);
    // Simplices are signed edge ranks; every simplex has n-1 = 3 of them.
    for f in facets {
        for s in f["simplices"].as_array().unwrap() {
            assert_eq!(s.as_array().unwrap().len(), 3);
        }
    }
}

#[test]
fn hstar_shape() {
    let c4 = write_fixture("c4h.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#);
    let out = bin().arg("hstar").arg(&c4).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["hstar"], serde_json::json!([1, 5, 5, 1]));
    assert_eq!(v["gamma"], serde_json::json!([1, 2]));
    assert_eq!(v["volume"], 12);
}

#[test]
fn dual_point_routes_agree() {
    let c6 = write_fixture(
        "c6.json",
        r#"{"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}"#,
    );
    let direct = stdout_json(&bin().arg("dualpoints").arg(&c6).output().unwrap());
    let mobius = stdout_json(&bin().arg("dualpoints-mobius").arg(&c6).output().unwrap());
    assert_eq!(direct["count"], 141);
    assert_eq!(mobius["count"], 141);
}

#[test]
fn flows_on_multigraph() {
    let dual = write_fixture(
        "dual-c4.json",
        r#"{"n":2,"edges":[[0,1],[0,1],[0,1],[0,1]]}"#,
    );
    let out = bin().arg("flows").arg(&dual).arg("--k").arg("2").output().unwrap();
    assert_eq!(stdout_json(&out), serde_json::json!({"count": 6}));
}

#[test]
fn gj_series() {
    let out = bin()
        .args(["gj", "--alphabet", "3", "--bad", "+-,-+,000", "--orders", "5"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["series"], serde_json::json!([1, 3, 7, 16, 36, 82]));
}

#[test]
fn family_wheel() {
    let out = bin().args(["family", "wheel", "--n", "5"]).output().unwrap();
    assert_eq!(
        stdout_json(&out),
        serde_json::json!({"facets": 62, "volume": 152})
    );
}

#[test]
fn kr_verifies_section() {
    let c4 = write_fixture("c4k.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#);
    let out = bin()
        .args(["kr"])
        .arg(&c4)
        .args(["--subset", "0,2", "--verify"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["equal"], true);
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);
    assert_eq!(v["section_vertices"].as_array().unwrap().len(), 2);
}

#[test]
fn domain_errors_exit_one_with_structured_payload() {
    let broken = write_fixture("disconnected.json", r#"{"n":4,"edges":[[0,1],[2,3]]}"#);
    let out = bin().arg("facets").arg(&broken).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "DisconnectedGraph");
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().arg("facets").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn emitted_graph_json_round_trips() {
    // The schema the CLI reads is the one the library writes.
    let g = sympoly_core::graph::cycle(5);
    let emitted = sympoly_core::io::graph_to_json(&g).to_string();
    let path = write_fixture("c5-roundtrip.json", &emitted);
    let first = stdout_json(&bin().arg("facets").arg(&path).output().unwrap());
    let second = stdout_json(&bin().arg("facets").arg(&path).output().unwrap());
    assert_eq!(first, second);
    let expected = sympoly_core::facets::count_facets(&g).unwrap();
    assert_eq!(first["count"], serde_json::json!(expected));
}
