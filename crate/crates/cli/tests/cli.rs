use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pcolor_cli::io::{parse, to_json, Instance};
use serde_json::Value;
use tempfile::TempDir;

fn pcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FANO: &str = r#"{"type":"design","n":7,"k":3,"t":2,"lambda":1,
  "blocks":[[0,1,2],[0,3,4],[0,5,6],[1,3,5],[1,4,6],[2,3,6],[2,4,5]]}"#;

#[test]
fn build_johnson_and_delta() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("j.json");
    assert_eq!(code(&pcolor(&["build", "johnson", "--n", "7", "--k", "3", "--out", s(&out)])), 0);
    match parse(&std::fs::read_to_string(&out).unwrap()).unwrap() {
        Instance::Multigraph(g) => assert_eq!(pcolor::AdjacencyMatrix::order(&g), 35),
        other => panic!("{other:?}"),
    }
    let run = pcolor(&["build", "delta", "--n", "4"]);
    assert_eq!(code(&run), 0);
    assert_eq!(report(&run)["edges"].as_array().unwrap().len(), 35);
    assert_eq!(code(&pcolor(&["build", "johnson", "--n", "3", "--k", "5"])), 2);
    assert_eq!(code(&pcolor(&["build", "johnson", "--n", "3"])), 2);
}

#[test]
fn fano_design_coloring_verifies() {
    let dir = TempDir::new().unwrap();
    let design = write(&dir, "fano.json", FANO);
    let coloring = dir.path().join("f.json");
    let graph = dir.path().join("g.json");
    assert_eq!(
        code(&pcolor(&["bridge", "design-to-coloring", "--input", s(&design), "--out", s(&coloring)])),
        0
    );
    // G_{7,3,2}: the design multigraph of 3-subsets and 2-subsets
    let g = pcolor::families::johnson_design_multigraph(7, 3, 2).unwrap();
    std::fs::write(&graph, to_json(&Instance::Multigraph(g))).unwrap();
    let run = pcolor(&[
        "verify",
        "coloring",
        "--graph",
        s(&graph),
        "--coloring",
        s(&coloring),
        "--expect-quotient",
        "[[0,12],[3,9]]",
    ]);
    assert_eq!(code(&run), 0, "{}", String::from_utf8_lossy(&run.stdout));
    assert_eq!(report(&run)["details"]["quotient"], serde_json::json!([[0, 12], [3, 9]]));
    let run = pcolor(&[
        "verify",
        "coloring",
        "--graph",
        s(&graph),
        "--coloring",
        s(&coloring),
        "--expect-quotient",
        "[[0,12],[4,8]]",
    ]);
    assert_eq!(code(&run), 1);
    assert_eq!(report(&run)["witness"]["found"], serde_json::json!([[0, 12], [3, 9]]));
}

#[test]
fn design_failure_has_uncovered_pair_witness() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "d.json", &FANO.replace(",[2,4,5]", ""));
    let run = pcolor(&["verify", "design", "--input", s(&p)]);
    assert_eq!(code(&run), 1);
    let w = &report(&run)["witness"];
    assert_eq!(w["subset"], serde_json::json!([2, 4]));
    assert_eq!(w["count"], 0);
    assert_eq!(code(&pcolor(&["verify", "design", "--input", s(&write(&dir, "ok.json", FANO))])), 0);
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad.json", "{\"type\":\"design\",");
    let run = pcolor(&["verify", "design", "--input", s(&p)]);
    assert_eq!(code(&run), 2);
    assert!(report(&run)["error"].is_string());
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&pcolor(&["verify", "srg", "--graph", s(&missing)])), 2);
    assert_eq!(code(&pcolor(&["verify", "no-such-kind"])), 2);
}

#[test]
fn hadamard_bridge_gives_fano_parameters() {
    let dir = TempDir::new().unwrap();
    let h = pcolor::designs::HadamardMatrix::sylvester(3);
    let p = write(&dir, "h.json", &to_json(&Instance::Hadamard(h)));
    assert_eq!(code(&pcolor(&["verify", "hadamard", "--input", s(&p)])), 0);
    let run = pcolor(&["bridge", "hadamard→design", "--input", s(&p)]);
    assert_eq!(code(&run), 0);
    let d = report(&run);
    assert_eq!((d["n"].as_u64(), d["k"].as_u64(), d["lambda"].as_u64()), (Some(7), Some(3), Some(1)));
    let bad = write(&dir, "bad.json", r#"{"type":"hadamard","rows":["++","+"]}"#);
    assert_eq!(code(&pcolor(&["verify", "hadamard", "--input", s(&bad)])), 2);
    let not_h = write(&dir, "nh.json", r#"{"type":"hadamard","rows":["++","++"]}"#);
    let run = pcolor(&["verify", "hadamard", "--input", s(&not_h)]);
    assert_eq!(code(&run), 1);
    assert_eq!(report(&run)["witness"]["rows"], serde_json::json!([0, 1]));
}

#[test]
fn bent_bridges() {
    let dir = TempDir::new().unwrap();
    // 1 + x1x2 + x3x4
    let b = pcolor::bent::BooleanFunction::inner_product(4).unwrap().complement();
    let p = write(&dir, "b.json", &to_json(&Instance::BoolFun(b.clone())));
    assert_eq!(code(&pcolor(&["verify", "bent", "--input", s(&p)])), 0);
    let coloring = dir.path().join("c.json");
    let run = pcolor(&["bridge", "bent-to-grassmann-coloring", "--input", s(&p), "--out", s(&coloring)]);
    assert_eq!(code(&run), 0);
    let f = pcolor_cli::io::load_coloring(&coloring).unwrap();
    assert_eq!((f.len(), f.num_colors()), (35, 4));
    let run = pcolor(&["bridge", "grassmann-coloring-to-bent", "--input", s(&coloring), "--n", "4"]);
    assert_eq!(code(&run), 0);
    assert_eq!(report(&run)["tt"], b.to_string());
    let merged = pcolor(&["bridge", "merge-colors", "--input", s(&coloring), "--groups", "0,2;1,3"]);
    assert_eq!(code(&merged), 0);
    let not_bent = write(&dir, "nb.json", r#"{"type":"boolfun","n":4,"tt":"0000000000000001"}"#);
    assert_eq!(code(&pcolor(&["verify", "bent", "--input", s(&not_bent)])), 1);
    let run = pcolor(&["bridge", "bent-to-grassmann-coloring", "--input", s(&not_bent)]);
    assert_eq!(code(&run), 1);
    assert!(report(&run)["witness"].is_object());
}

#[test]
fn difference_set_bridges() {
    let dir = TempDir::new().unwrap();
    let b = pcolor::bent::BooleanFunction::inner_product(4).unwrap();
    let p = write(&dir, "b.json", &to_json(&Instance::BoolFun(b)));
    let ds = dir.path().join("d.json");
    assert_eq!(code(&pcolor(&["bridge", "bent-to-difference-set", "--input", s(&p), "--out", s(&ds)])), 0);
    let run = pcolor(&["verify", "pds", "--input", s(&ds)]);
    assert_eq!(code(&run), 0);
    assert_eq!(report(&run)["details"]["k"], 6);
    assert_eq!(code(&pcolor(&["verify", "pds", "--input", s(&ds), "--params", "16,6,2,2"])), 0);
    assert_eq!(code(&pcolor(&["verify", "pds", "--input", s(&ds), "--params", "16,6,2,3"])), 1);
    let run = pcolor(&["bridge", "diffset-to-symmetric-design", "--input", s(&ds)]);
    assert_eq!(code(&run), 0);
    assert_eq!(report(&run)["blocks"].as_array().unwrap().len(), 16);
    let delta = dir.path().join("delta.json");
    let coloring = dir.path().join("c.json");
    assert_eq!(code(&pcolor(&["build", "delta", "--n", "4", "--out", s(&delta)])), 0);
    assert_eq!(code(&pcolor(&["bridge", "pds-to-delta-coloring", "--input", s(&ds), "--out", s(&coloring)])), 0);
    let run = pcolor(&["verify", "hypergraph-coloring", "--hypergraph", s(&delta), "--coloring", s(&coloring)]);
    assert_eq!(code(&run), 0);
}

#[test]
fn srg_and_gamma() {
    let dir = TempDir::new().unwrap();
    let c5 = dir.path().join("c5.json");
    assert_eq!(
        code(&pcolor(&["build", "cayley", "--orders", "5", "--connection", "1,4", "--out", s(&c5)])),
        0
    );
    let run = pcolor(&["verify", "srg", "--graph", s(&c5)]);
    assert_eq!(code(&run), 0);
    assert_eq!(report(&run)["details"]["mu"], 1);
    let gamma = dir.path().join("gamma.json");
    let coloring = dir.path().join("f.json");
    assert_eq!(code(&pcolor(&["build", "gamma", "--n", "5", "--out", s(&gamma)])), 0);
    assert_eq!(code(&pcolor(&["bridge", "srg-to-gamma-coloring", "--input", s(&c5), "--out", s(&coloring)])), 0);
    let run = pcolor(&["verify", "hypergraph-coloring", "--hypergraph", s(&gamma), "--coloring", s(&coloring)]);
    assert_eq!(code(&run), 0);
    let c6 = write(&dir, "c6.json", &to_json(&Instance::Multigraph(pcolor::families::cycle(6).unwrap())));
    let run = pcolor(&["verify", "srg", "--graph", s(&c6)]);
    assert_eq!(code(&run), 1);
    assert!(report(&run)["witness"]["message"].as_str().unwrap().contains("common"));
}

#[test]
fn transversal_and_dh() {
    let dir = TempDir::new().unwrap();
    let h = dir.path().join("h.json");
    assert_eq!(code(&pcolor(&["build", "design-hypergraph", "--n", "4", "--k", "2", "--t", "1", "--out", s(&h)])), 0);
    // hyperedges of G_{4,2,1} are the stars {pairs through v}; a perfect matching meets each in one pair
    let run = pcolor(&["verify", "transversal", "--hypergraph", s(&h), "--set", "0,5"]);
    assert_eq!(code(&run), 0, "{}", String::from_utf8_lossy(&run.stdout));
    let run = pcolor(&["verify", "transversal", "--hypergraph", s(&h), "--set", "0,1"]);
    assert_eq!(code(&run), 1);
    assert!(report(&run)["witness"]["hyperedge"].is_u64());
    let g = pcolor::families::petersen();
    let petersen = write(&dir, "p.json", &to_json(&Instance::Multigraph(g.clone())));
    let independent = (0u32..1 << 10)
        .filter(|m| m.count_ones() == 4)
        .map(|m| (0..10).filter(|&v| m >> v & 1 == 1).collect::<Vec<usize>>())
        .find(|set| set.iter().all(|&a| set.iter().all(|&b| pcolor::AdjacencyMatrix::entry(&g, a, b) == 0)))
        .unwrap();
    let list = independent.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    let run = pcolor(&["verify", "dh", "--graph", s(&petersen), "--set", &list, "--t", "0"]);
    assert_eq!(code(&run), 0);
    assert_eq!(report(&run)["details"]["bound"], 4.0);
    assert_eq!(report(&run)["details"]["quotient_if_extremal"], serde_json::json!([[0, 3], [2, 1]]));
    let three = independent[..3].iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    let run = pcolor(&["verify", "dh", "--graph", s(&petersen), "--set", &three, "--t", "0"]);
    assert_eq!(code(&run), 1);
    assert_eq!(report(&run)["witness"]["attains_bound"], false);
    // {0,1} and {2,3} are disjoint, hence adjacent
    let run = pcolor(&["verify", "dh", "--graph", s(&petersen), "--set", "0,7", "--t", "0"]);
    assert_eq!(code(&run), 1);
    assert_eq!(report(&run)["witness"]["cap"], 0);
}

#[test]
fn m12_and_line_graph_builds() {
    let dir = TempDir::new().unwrap();
    let delta = dir.path().join("delta.json");
    assert_eq!(code(&pcolor(&["build", "delta", "--n", "3", "--out", s(&delta)])), 0);
    let run = pcolor(&["build", "line-graph", "--input", s(&delta)]);
    assert_eq!(code(&run), 0);
    let g = match parse(std::str::from_utf8(&run.stdout).unwrap()).unwrap() {
        Instance::Multigraph(g) => g,
        other => panic!("{other:?}"),
    };
    assert_eq!(g, pcolor::families::grassmann(3, 2, 2).unwrap());
    let run = pcolor(&["build", "m12", "--input", s(&delta), "--keep-loops", "--sparse"]);
    assert_eq!(code(&run), 0);
    assert!(report(&run)["nnz"].is_array());
    let run = pcolor(&["build", "grassmann", "--n", "4", "--k", "2", "--q", "3"]);
    assert_eq!(code(&run), 0);
    assert_eq!(report(&run)["n"], 130);
    let run = pcolor(&["build", "subspace-design-hypergraph", "--n", "4", "--k", "2", "--t", "1"]);
    assert_eq!(code(&run), 0);
}

#[test]
fn suite_ids() {
    let run = pcolor(&["suite", "AC5"]);
    assert_eq!(code(&run), 0);
    assert!(String::from_utf8_lossy(&run.stdout).contains("bent=896, theorem2 roundtrips=OK"));
    assert_eq!(code(&pcolor(&["suite", "AC13"])), 2);
    assert_eq!(code(&pcolor(&["suite", "AC7", "--seed", "3"])), 0);
}

#[test]
fn suite_all_with_seed_one() {
    let run = pcolor(&["suite", "all", "--seed", "1"]);
    let text = String::from_utf8_lossy(&run.stdout);
    assert_eq!(text.lines().count(), 12, "{text}");
    assert_eq!(code(&run), 0, "{text}");
}
