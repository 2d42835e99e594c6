use std::path::Path;
use std::process::{Command, Output};

use legendre_cordial::Graph;
use serde_json::{json, Value};

fn lcord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcord"))
        .args(args)
        .env_remove("LCORD_BUDGET_NODES")
        .env_remove("LCORD_BUDGET_SECONDS")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn error_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn gen_path() {
    let out = lcord(&["gen", "path:4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_json(&out),
        json!({"order": 4, "edges": [[0, 1], [1, 2], [2, 3]]})
    );
}

#[test]
fn gen_complete_has_six_edges() {
    let out = lcord(&["gen", "complete:4"]);
    assert_eq!(stdout_json(&out)["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn gen_bad_spec_is_usage_error() {
    for spec in ["cycle:2", "wheel:5", "path:x"] {
        let out = lcord(&["gen", spec]);
        assert_eq!(code(&out), 2, "{spec}");
        assert_eq!(error_json(&out)["error"], "usage");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = lcord(&["frobnicate"]);
    assert_eq!(code(&out), 2);
    assert_eq!(error_json(&out)["error"], "usage");
}

#[test]
fn written_graphs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&lcord(&["gen", "cycle:5", "--out", p])), 0);
    let g: Graph = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g, legendre_cordial::graph::make_cycle(5).unwrap());

    let prod = dir.path().join("prod.json");
    let out = lcord(&["op", "strong", p, "path:2", "--out", prod.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let h: Graph = serde_json::from_str(&std::fs::read_to_string(&prod).unwrap()).unwrap();
    assert_eq!(h.order(), 10);
    assert_eq!(h.size(), 5 + 10 + 10);
    let again = lcord(&["op", "join", prod.to_str().unwrap(), "path:1"]);
    assert_eq!(stdout_json(&again)["order"], 11);
}

#[test]
fn op_cart_of_two_edges_is_a_four_cycle() {
    let v = stdout_json(&lcord(&["op", "cart", "path:2", "path:2"]));
    assert_eq!(v["order"], 4);
    assert_eq!(v["edges"], json!([[0, 1], [0, 2], [1, 3], [2, 3]]));
    assert_eq!(v["connected"], true);
    assert!(v["vertex_map"].as_str().unwrap().contains("i*2 + j"));
}

#[test]
fn op_tensor_warns_when_disconnected() {
    let v = stdout_json(&lcord(&["op", "tensor", "path:2", "path:2"]));
    assert_eq!(v["connected"], false);
    assert!(v["warning"].is_string());
    let w = stdout_json(&lcord(&["op", "tensor", "cycle:3", "path:2"]));
    assert_eq!(w["connected"], true);
    assert!(w.get("warning").is_none());
}

#[test]
fn op_strong_k2_k2_is_k4() {
    let v = stdout_json(&lcord(&["op", "strong", "complete:2", "complete:2"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn op_missing_file_is_io_error() {
    let out = lcord(&["op", "join", "/nonexistent/graph.json", "path:2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(error_json(&out)["error"], "io");
}

#[test]
fn construct_corona_path_bundle() {
    let v = stdout_json(&lcord(&["construct", "corona-path", "--g", "cycle:3", "--p", "3"]));
    assert_eq!(v["verified"], json!({"e0": 6, "e1": 6}));
    assert_eq!(v["predicted"], v["verified"]);
    assert_eq!(v["labeling"], json!([3, 1, 6, 4, 9, 7, 2, 5, 8]));
    assert_eq!(v["graph"]["order"], 9);
}

#[test]
fn construct_with_explicit_witness() {
    let out = lcord(&[
        "construct",
        "cart",
        "--g1",
        "cycle:5",
        "--g2",
        "cycle:4",
        "--lab-g1",
        "2,1,3,5,4",
        "--p",
        "5",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["verified"], json!({"e0": 20, "e1": 20}));
}

#[test]
fn construct_searches_missing_base_labelings() {
    let out = lcord(&["construct", "tensor", "--g1", "path:3", "--g2", "cycle:3", "--p", "3"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["verified"], json!({"e0": 6, "e1": 6}));
}

#[test]
fn construct_from_recipe_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("recipe.json");
    let recipe = json!({
        "theorem": "tensor",
        "p": 3,
        "g1": "path:3",
        "g2": {"order": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
        "lab_g1": [2, 1, 3]
    });
    std::fs::write(&path, recipe.to_string()).unwrap();
    let out = lcord(&["construct", "--recipe", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["verified"], json!({"e0": 6, "e1": 6}));
}

#[test]
fn construct_hypothesis_violation_exits_3() {
    let out = lcord(&["construct", "kp-tensor", "--g", "cycle:3", "--p", "3"]);
    assert_eq!(code(&out), 3);
    assert_eq!(error_json(&out)["error"], "hypothesis");
    let out = lcord(&["construct", "corona-path", "--g", "cycle:3", "--p", "7"]);
    assert_eq!(code(&out), 3);
    let out = lcord(&[
        "construct",
        "tensor",
        "--g1",
        "path:3",
        "--g2",
        "cycle:3",
        "--lab-g1",
        "1,2,3",
        "--p",
        "3",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn construct_with_no_base_labeling_exits_4() {
    let out = lcord(&["construct", "lex", "--g1", "cycle:3", "--g2", "complete:5", "--p", "5"]);
    assert_eq!(code(&out), 4);
    assert_eq!(error_json(&out)["error"], "search-none");
}

#[test]
fn construct_rejects_composite_modulus() {
    let out = lcord(&["construct", "corona-path", "--g", "cycle:3", "--p", "9"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_identity_on_triangle() {
    let out = lcord(&["verify", "cycle:3", "1,2,3", "--p", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"e0":2,"e1":1,"cordial":true}"#
    );
}

#[test]
fn verify_reads_labeling_file_prime() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lab.json");
    std::fs::write(&path, r#"{"p": 3, "assign": [1, 2, 3, 4]}"#).unwrap();
    let v = stdout_json(&lcord(&["verify", "complete:4", path.to_str().unwrap()]));
    assert_eq!(v, json!({"e0": 4, "e1": 2, "cordial": false}));
}

#[test]
fn verify_rejects_bad_input() {
    let out = lcord(&["verify", "cycle:3", "1,1,3", "--p", "3"]);
    assert_eq!(code(&out), 2);
    let out = lcord(&["verify", "cycle:3", "1,2", "--p", "3"]);
    assert_eq!(code(&out), 2);
    let out = lcord(&["verify", "edges:4:0-1,2-3", "1,2,3,4", "--p", "3"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_dot_colours_edges() {
    let out = lcord(&["verify", "cycle:3", "1,2,3", "--p", "3", "--format", "dot"]);
    let dot = String::from_utf8_lossy(&out.stdout);
    assert!(dot.contains("color=blue") && dot.contains("color=red"), "{dot}");
}

#[test]
fn search_k4_mod_3_has_none() {
    let out = lcord(&["search", "complete:4", "--p", "3"]);
    assert_eq!(code(&out), 4);
    assert_eq!(stdout_json(&out)["outcome"], "none");
    assert_eq!(error_json(&out)["error"], "search-none");
}

#[test]
fn search_counts_triangle_labelings() {
    let out = lcord(&["search", "cycle:3", "--p", "3", "--mode", "count"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["count"], 6);
}

#[test]
fn search_found_report_shape() {
    let out = lcord(&["search", "path:5", "--p", "5", "--objective", "diff:-2", "--jobs", "2"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "found");
    assert_eq!(v["labeling"].as_array().unwrap().len(), 5);
    assert!(v.get("count").is_none());
}

#[test]
fn search_budget_exhaustion_exits_5() {
    let out = lcord(&["search", "complete:9", "--p", "3", "--budget-nodes", "10"]);
    assert_eq!(code(&out), 5);
    assert_eq!(stdout_json(&out)["outcome"], "exhausted");

    let via_env = Command::new(env!("CARGO_BIN_EXE_lcord"))
        .args(["search", "complete:9", "--p", "3"])
        .env("LCORD_BUDGET_NODES", "10")
        .output()
        .unwrap();
    assert_eq!(code(&via_env), 5);
}

#[test]
fn search_rejects_bad_objective_and_ceiling() {
    assert_eq!(
        code(&lcord(&["search", "cycle:3", "--p", "3", "--objective", "near"])),
        2
    );
    assert_eq!(code(&lcord(&["search", "path:13", "--p", "3"])), 2);
}

#[test]
fn legendre_symbols() {
    let cases = [
        (&["legendre", "2", "3"][..], "-1"),
        (&["legendre", "4", "7"][..], "1"),
        (&["legendre", "14", "7"][..], "0"),
    ];
    for (args, expected) in cases {
        let out = lcord(args);
        assert_eq!(code(&out), 0);
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), expected);
    }
    let out = lcord(&["legendre", "-1", "--p", "5"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");
    assert_eq!(code(&lcord(&["legendre", "2", "15"])), 2);
}

#[test]
fn out_to_unwritable_path_is_io_error() {
    let out = lcord(&["gen", "path:3", "--out", "/nonexistent/dir/g.json"]);
    assert_eq!(code(&out), 1);
    assert!(!Path::new("/nonexistent/dir/g.json").exists());
}
