use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const DHAR: &str = r#"{"vertices":[{"id":"v1"},{"id":"v2"},{"id":"v3"},{"id":"v4"},{"id":"v5"}],
 "edges":[{"id":"e1","ends":["v1","v2"]},{"id":"e2","ends":["v1","v3"]},{"id":"e3","ends":["v2","v3"]},
          {"id":"e4","ends":["v3","v4"]},{"id":"e5","ends":["v3","v5"]},{"id":"e6","ends":["v4","v5"]}]}"#;

const K4: &str = r#"{"vertices":[{"id":"a"},{"id":"b"},{"id":"c"},{"id":"d"}],
 "edges":[{"id":"ab","ends":["a","b"]},{"id":"ac","ends":["a","c"]},{"id":"ad","ends":["a","d"]},
          {"id":"bc","ends":["b","c"]},{"id":"bd","ends":["b","d"]},{"id":"cd","ends":["c","d"]}]}"#;

const THETA: &str = r#"{"vertices":[{"id":"P"},{"id":"Q","weight":1}],
 "edges":[{"id":"x","ends":["P","Q"],"length":"1"},{"id":"y","ends":["P","Q"],"length":"3/2"},
          {"id":"z","ends":["Q","P"],"length":"2/3"}]}"#;

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        let dir = tempfile::tempdir().unwrap();
        for (name, text) in [("dhar.json", DHAR), ("k4.json", K4), ("theta.json", THETA)] {
            std::fs::write(dir.path().join(name), text).unwrap();
        }
        Fixture { dir }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn run(&self, args: &[&str]) -> Output {
        self.run_env(args, &[])
    }

    fn run_env(&self, args: &[&str], env: &[(&str, &str)]) -> Output {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_tropdiv"));
        cmd.current_dir(self.dir.path())
            .args(args)
            .env_remove("TROPDIV_THREADS");
        for (k, v) in env {
            cmd.env(k, v);
        }
        cmd.output().unwrap()
    }

    fn json(&self, args: &[&str]) -> Value {
        let out = self.run(args);
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        serde_json::from_slice(&out.stdout).unwrap()
    }
}

fn graph(path: &Path) -> tropdiv::MetricGraph {
    tropdiv::json::parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn reduce_matches_the_dhar_example() {
    let f = Fixture::new();
    let v = f.json(&[
        "reduce",
        "--graph",
        "dhar.json",
        "--divisor",
        "v1:1,v2:1",
        "--at",
        "v5",
    ]);
    assert_eq!(v["short"], "v4:1,v5:1");
    assert_eq!(
        v["trace"],
        serde_json::json!([["v1", "v2"], ["v1", "v2", "v3"]])
    );

    // the divisor and the witness parse back, and the witness moves D to its reduction
    let g = graph(&f.path("dhar.json"));
    let d = tropdiv::json::parse_divisor(&g, &v["divisor"].to_string()).unwrap();
    assert_eq!(tropdiv::json::format_divisor_short(&g, &d), "v4:1,v5:1");
    let w = tropdiv::json::parse_pl(&g, &v["witness"].to_string()).unwrap();
    let start = tropdiv::json::parse_divisor(&g, "v1:1,v2:1").unwrap();
    assert_eq!(&start + &w.div(&g), d);
}

#[test]
fn jacobian_and_trees_of_k4() {
    let f = Fixture::new();
    let v = f.json(&["jacobian", "--graph", "k4.json"]);
    assert_eq!(v["order"], "16");
    assert_eq!(v["invariant_factors"], serde_json::json!(["4", "4"]));
    let t = f.json(&["trees", "--graph", "k4.json", "--list"]);
    assert_eq!(t["enumerated"], "16");
    assert_eq!(t["trees"].as_array().unwrap().len(), 16);
}

#[test]
fn chain_subcommands() {
    let f = Fixture::new();
    let v = f.json(&["chain", "count", "--g", "4", "--r", "1", "--d", "3"]);
    assert_eq!(v["enumerated"], 2);
    assert_eq!(v["formula"], "2");
    let cells = f.json(&["chain", "cells", "--g", "6", "--r", "1", "--d", "4"]);
    assert_eq!(cells["cells"].as_array().unwrap().len(), 5);
    let a = f.json(&[
        "--seed", "9", "chain", "sample", "--g", "4", "--r", "1", "--d", "3", "--index", "1",
    ]);
    let b = f.json(&[
        "chain", "sample", "--g", "4", "--r", "1", "--d", "3", "--index", "1", "--seed", "9",
    ]);
    assert_eq!(a, b);
    assert_eq!(a["rank"], 1);
    let g = tropdiv::json::parse_graph(&a["graph"].to_string()).unwrap();
    tropdiv::json::parse_divisor(&g, &a["divisor"].to_string()).unwrap();
    let adj = f.json(&["chain", "adjoint", "--g", "4", "--r", "1", "--d", "3"]);
    assert_eq!(adj["is_transpose"], true);
    let out = f.run(&[
        "chain", "sample", "--g", "4", "--r", "1", "--d", "3", "--index", "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn divisor_outputs_round_trip() {
    let f = Fixture::new();
    let g = graph(&f.path("theta.json"));
    for args in [
        vec!["canonical", "--graph", "theta.json"],
        vec!["canonical", "--graph", "theta.json", "--weighted"],
        vec![
            "fire",
            "--graph",
            "dhar.json",
            "--divisor",
            "v1:1,v2:1",
            "--set",
            "v1,v2",
        ],
        vec![
            "break",
            "rep",
            "--graph",
            "k4.json",
            "--divisor",
            "a:5,b:-2",
        ],
    ] {
        let v = f.json(&args);
        let at = args.iter().position(|a| *a == "--graph").unwrap() + 1;
        let g = if args[at] == "theta.json" {
            g.clone()
        } else {
            graph(&f.path(args[at]))
        };
        let d = tropdiv::json::parse_divisor(&g, &v["divisor"].to_string()).unwrap();
        assert_eq!(tropdiv::json::format_divisor_short(&g, &d), v["short"]);
    }
    let v = f.json(&[
        "fire",
        "--graph",
        "dhar.json",
        "--divisor",
        "v1:1,v2:1",
        "--set",
        "v1,v2",
    ]);
    assert_eq!(v["short"], "v3:2");
}

#[test]
fn rank_and_riemann_roch() {
    let f = Fixture::new();
    let v = f.json(&[
        "rank",
        "--graph",
        "k4.json",
        "--divisor",
        "a:1,b:1",
        "--finite",
    ]);
    assert_eq!(v["rank"], 0);
    let v = f.json(&["rank", "--graph", "theta.json", "--divisor", "x@1/3:3,P:-1"]);
    assert_eq!(v["rank"], 1);
    let v = f.json(&[
        "rr-check",
        "--graph",
        "theta.json",
        "--divisor",
        "y@1/2:2",
        "--weighted",
    ]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["genus"], 3);
    let v = f.json(&[
        "gonality",
        "--graph",
        "k4.json",
        "--max-degree",
        "3",
        "--grid",
        "1",
    ]);
    assert_eq!(v["gonality"], 3);
    let v = f.json(&["cliff", "--graph", "k4.json", "--grid", "1"]);
    assert_eq!(v["clifford_index"], 1);
    let v = f.json(&["bn-rank", "--graph", "k4.json", "--r", "1", "--d", "2"]);
    assert_eq!(v["w"], -1);
    let v = f.json(&["weierstrass", "--graph", "theta.json", "--point", "P"]);
    assert!(v["weierstrass"].is_boolean());
}

#[test]
fn lattice_measure_and_break_check() {
    let f = Fixture::new();
    let v = f.json(&["period-gram", "--graph", "theta.json"]);
    assert_eq!(v["gram"].as_array().unwrap().len(), 2);
    let v = f.json(&[
        "abel-jacobi",
        "--graph",
        "theta.json",
        "--divisor",
        "x@1/2:1,P:-1",
        "--base",
        "P",
    ]);
    assert_eq!(v["in_lattice"], false);
    let v = f.json(&["zhang", "--graph", "theta.json"]);
    assert_eq!(v["total_mass"], "1");
    let out = f.run(&["zhang", "--graph", "k4.json", "--format", "dot"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("graph zhang"));
    let v = f.json(&[
        "break",
        "check",
        "--graph",
        "theta.json",
        "--divisor",
        "x@1/2:1,y@1/3:1",
    ]);
    assert_eq!(v["break"], true);
    assert_eq!(
        v["universally_reduced"]["topological"],
        v["universally_reduced"]["dhar"]
    );
    let v = f.json(&["break", "enumerate", "--graph", "k4.json"]);
    assert_eq!(v["count"], 16);
}

#[test]
fn tropical_dependence_from_function_files() {
    let f = Fixture::new();
    std::fs::write(
        f.path("f.json"),
        r#"{"values":[{"at":"P","value":"0"},{"at":"Q","value":"0"}]}"#,
    )
    .unwrap();
    std::fs::write(
        f.path("h.json"),
        r#"{"values":[{"at":"P","value":"0"},{"at":"Q","value":"0"}]}"#,
    )
    .unwrap();
    let v = f.json(&[
        "tropdep",
        "--graph",
        "theta.json",
        "--function",
        "f.json",
        "--function",
        "h.json",
        "--shifts",
        "0,0",
    ]);
    assert_eq!(v["dependent"], true);
    let v = f.json(&[
        "tropdep",
        "--graph",
        "theta.json",
        "--function",
        "f.json",
        "--function",
        "h.json",
        "--shifts",
        "0,1",
    ]);
    assert_eq!(v["dependent"], false);
}

#[test]
fn examples_harness() {
    let f = Fixture::new();
    let v = f.json(&["examples"]);
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == true));
    let v = f.json(&["examples", "--id", "dhar-reduce"]);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(
        f.run(&["examples", "--id", "missing"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    let f = Fixture::new();
    std::fs::write(f.path("bad.json"), "{\"vertices\": [\n  {\"id\": 3}\n]}").unwrap();
    let out = f.run(&["genus", "--graph", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        f.run(&["rank", "--graph", "k4.json", "--divisor", "zz:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        f.run(&["genus", "--graph", "missing.json"]).status.code(),
        Some(2)
    );
    assert_eq!(f.run(&["nonsense"]).status.code(), Some(2));
    // well-formed input outside the domain of the operation
    assert_eq!(
        f.run(&["break", "rep", "--graph", "k4.json", "--divisor", "a:1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn manifest_records_inputs_and_output() {
    let f = Fixture::new();
    let args = ["jacobian", "--graph", "k4.json", "--manifest", "run.json"];
    let first = f.run(&args);
    let manifest_a = std::fs::read(f.path("run.json")).unwrap();
    let second = f.run(&args);
    let manifest_b = std::fs::read(f.path("run.json")).unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(manifest_a, manifest_b);
    let m: Value = serde_json::from_slice(&manifest_a).unwrap();
    assert_eq!(m["subcommand"], "jacobian");
    assert_eq!(m["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(m["output"]["order"], "16");
}

#[test]
fn worker_thread_variable() {
    let f = Fixture::new();
    let ok = f.run_env(
        &["genus", "--graph", "k4.json"],
        &[("TROPDIV_THREADS", "2")],
    );
    assert!(ok.status.success());
    let bad = f.run_env(
        &["genus", "--graph", "k4.json"],
        &[("TROPDIV_THREADS", "zero")],
    );
    assert_eq!(bad.status.code(), Some(2));
}
