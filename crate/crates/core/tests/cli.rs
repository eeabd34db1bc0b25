use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mcgraph::{generate, Family, Graph, NetworkSpec};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_mcgraph"));
    c.env_remove("MCGRAPH_BUDGET");
    c
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", name]);
    let o = run(dir, &full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    dir.join(name)
}

fn read_graph(path: &Path) -> Graph {
    Graph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn gen_examples() {
    let dir = tempfile::tempdir().unwrap();
    let p = read_graph(&gen(dir.path(), "p.json", &["petersen"]));
    assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
    let g = read_graph(&gen(dir.path(), "g.json", &["grid", "3", "2"]));
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
    let o = run(dir.path(), &["gen", "torus", "2", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size at least three"));
}

#[test]
fn gen_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (family, params, args) in [
        (Family::Hl, vec![4], vec!["hl", "4"]),
        (Family::Torus, vec![3, 4], vec!["torus", "3", "4"]),
        (Family::Cycle, vec![5], vec!["cycle", "5"]),
    ] {
        let path = gen(dir.path(), "x.json", &args);
        let parsed = read_graph(&path);
        let expected = generate(&NetworkSpec::new(family, params)).unwrap();
        assert_eq!(parsed, expected);
        assert_eq!(parsed.to_json(), expected.to_json());
    }
}

#[test]
fn product_examples() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "p2.json", &["path", "2"]);
    gen(dir.path(), "petersen.json", &["petersen"]);
    let o = run(dir.path(), &["product", "cartesian", "p2.json", "p2.json"]);
    let v = stdout_json(&o);
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
    assert_eq!(v["product"]["kind"], "cartesian");
    let o = run(dir.path(), &["product", "lex", "p2.json", "petersen.json"]);
    let v = stdout_json(&o);
    assert_eq!((v["n"].as_u64(), v["edges"].as_array().unwrap().len()), (Some(20), 130));
    let v = stdout_json(&run(dir.path(), &["product", "direct", "p2.json", "p2.json"]));
    assert_eq!(v["connected"], false);
    let o = run(dir.path(), &["product", "lex", "p2.json", "missing.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mc_modes() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "c4.json", &["cycle", "4"]);
    gen(dir.path(), "hl4.json", &["hl", "4"]);
    gen(dir.path(), "petersen.json", &["petersen"]);
    let v = stdout_json(&run(dir.path(), &["mc", "exact", "c4.json"]));
    assert_eq!(v["value"], 2);
    let v = stdout_json(&run(dir.path(), &["mc", "bounds", "hl4.json"]));
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(112), Some(121)));
    let v = stdout_json(&run(dir.path(), &["mc", "certify", "petersen.json"]));
    assert_eq!(v["value"], 7);
    assert!(v["conditions"].as_array().unwrap().contains(&Value::from("b")));
}

#[test]
fn exact_witness_passes_check() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "g.json", &["grid", "3", "3"]);
    let o = run(dir.path(), &["mc", "exact", "g.json", "--witness-out", "w.json"]);
    assert_eq!(o.status.code(), Some(0));
    let value = stdout_json(&o)["value"].as_u64().unwrap();
    let o = run(dir.path(), &["check", "g.json", "w.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), format!("VALID {value} colors"));
}

#[test]
fn check_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "p3.json", &["path", "3"]);
    gen(dir.path(), "k3.json", &["clique", "3"]);
    std::fs::write(dir.path().join("p3c.json"), r#"{"edges":[[0,1],[1,2]],"colors":[0,1]}"#).unwrap();
    std::fs::write(dir.path().join("k3c.json"), r#"{"edges":[[0,1],[0,2],[1,2]],"colors":[0,1,2]}"#).unwrap();
    let o = run(dir.path(), &["check", "p3.json", "p3c.json"]);
    assert_eq!((o.status.code(), String::from_utf8_lossy(&o.stdout).trim()), (Some(1), "INVALID pair (0,2)"));
    let o = run(dir.path(), &["check", "k3.json", "k3c.json"]);
    assert_eq!((o.status.code(), String::from_utf8_lossy(&o.stdout).trim()), (Some(0), "VALID 3 colors"));
    let o = run(dir.path(), &["check", "p3.json", "k3c.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spanning_tree_witness_on_c4() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = read_graph(&gen(dir.path(), "c4.json", &["cycle", "4"]));
    let w = mcgraph::spanning_tree_coloring(&c4).unwrap();
    std::fs::write(dir.path().join("w.json"), w.to_json(&c4)).unwrap();
    let o = run(dir.path(), &["check", "c4.json", "w.json"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "VALID 2 colors");
}

#[test]
fn budget_and_disconnected() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "hl4.json", &["hl", "4"]);
    let o = bin().current_dir(dir.path()).args(["mc", "exact", "hl4.json"]).env("MCGRAPH_BUDGET", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    let v = stdout_json(&o);
    assert_eq!((v["method"].as_str(), v["value"].as_u64()), (Some("bounds-only"), Some(112)));

    std::fs::write(dir.path().join("d.json"), r#"{"n":4,"edges":[[0,1],[2,3]]}"#).unwrap();
    let o = run(dir.path(), &["mc", "exact", "d.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["value"], 0);
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["mc", "exact", "--bogus", "x"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gen", "nosuchfamily"]).status.code(), Some(2));
}

#[test]
fn pretty_output_is_indented_json() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "c4.json", &["cycle", "4"]);
    let o = run(dir.path(), &["--pretty", "mc", "bounds", "c4.json"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.lines().count() > 1);
    assert_eq!(stdout_json(&o)["lower"], 2);
}

#[test]
fn verify_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["verify", "core", "--max-n", "5", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["suite"], "core");
    assert!(!v["findings"].as_array().unwrap().is_empty());
    let o = run(dir.path(), &["report", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = stdout_json(&o);
    assert!(rows.as_array().unwrap().iter().all(|r| r["agree"] == true));
    let o = run(dir.path(), &["report", "-o", "r.csv"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert!(csv.starts_with("family,params,proposition"));
}
