use std::process::{Command, Output};

use circle_core::lab::parse_graph6;
use circle_core::recognition::verify_realization;
use circle_core::{Graph, Word};

fn circle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circle")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn interlace_prints_edge_list() {
    let out = circle(&["interlace", "abab"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n0 1\n");
}

#[test]
fn recognize_round_trips_through_interlace() {
    for g6 in ["C~", "EFz_", "Dhc"] {
        let out = circle(&["recognize", "--graph6", g6]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let g = parse_graph6(g6).unwrap();
        if text.starts_with("not a circle graph") {
            continue;
        }
        let w = Word::parse(text.trim()).unwrap();
        assert!(verify_realization(&g, &w).unwrap(), "{g6}: {text}");
        let back = circle(&["interlace", text.trim()]);
        assert_eq!(Graph::parse_edge_list(&stdout(&back)).unwrap(), g);
    }
}

#[test]
fn recognize_json_witness_for_obstruction() {
    let out = circle(&["recognize", "--standard", "W5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["obstruction"], "W5");
    assert!(v.get("word").is_none());
}

#[test]
fn verify_exit_status_tracks_counterexamples() {
    let out = circle(&["verify", "twin-theorem", "--n-max", "8", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert_eq!(v["graphs_examined"], 9);
    let cycles = circle(&["verify", "cycle-words", "--c", "5", "--json"]);
    assert_eq!(cycles.status.code(), Some(0));
}

#[test]
fn verify_writes_csv() {
    let dir = std::env::temp_dir().join(format!("circle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("verdicts.csv");
    let out = circle(&["verify", "no-prime", "--n-max", "6", "--csv", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("key,order,components,is_circle"));
    assert_eq!(lines.count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_counts() {
    let out = circle(&["enumerate", "--n", "8", "--connected"]);
    assert_eq!(stdout(&out).lines().count(), 5);
    let all = circle(&["enumerate", "--n", "8"]);
    assert_eq!(stdout(&all).lines().count(), 6);
}

#[test]
fn lc_twins_split_orbit() {
    let lc = circle(&["lc", "--standard", "P4", "--vertex", "1"]);
    assert_eq!(stdout(&lc), "4\n0 1\n0 2\n1 2\n2 3\n");
    let twins = circle(&["twins", "--standard", "K3,3"]);
    assert!(stdout(&twins).ends_with("disjoint couples: 9\n"));
    assert_eq!(stdout(&circle(&["split", "--standard", "C5"])), "prime\n");
    let orbit = circle(&["orbit", "--standard", "W5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&orbit)).unwrap();
    assert_eq!(v["size"], 2);
    assert_eq!(stdout(&circle(&["cycle-word", "3"])), "v1 v3 v2 v1 v3 v2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(circle(&["recognize"]).status.code(), Some(2));
    assert_eq!(circle(&["frobnicate"]).status.code(), Some(2));
    let bad = circle(&["recognize", "--graph6", "!!"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("MalformedGraph6"));
    assert_eq!(circle(&["interlace", "aab"]).status.code(), Some(1));
    assert_eq!(circle(&["verify", "no-prime", "--n-max", "14"]).status.code(), Some(1));
    assert_eq!(circle(&["enumerate", "--n", "7"]).status.code(), Some(1));
}

#[test]
fn worker_env_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_circle"))
        .args(["enumerate", "--n", "6"])
        .env("CIRCLE_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let ok = Command::new(env!("CARGO_BIN_EXE_circle"))
        .args(["enumerate", "--n", "6"])
        .env("CIRCLE_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&ok).lines().count(), 2);
}
