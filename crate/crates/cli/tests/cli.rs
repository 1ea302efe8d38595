use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use distgi::{to_graph6, verify_isomorphism, Graph, VertexBijection};
use serde_json::Value;
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: TempDir::new().unwrap(),
        }
    }

    fn write(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        fs::write(&path, contents).unwrap();
        path
    }

    fn graph(&self, name: &str, g: &Graph) -> PathBuf {
        self.write(name, &format!("{}\n", to_graph6(g)))
    }
}

fn distgi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distgi")).args(args).output().unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = distgi(args);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn report(stdout: &str) -> Value {
    serde_json::from_str(stdout.trim()).unwrap()
}

#[test]
fn iso_relabeled_path_is_certified() {
    let ws = Workspace::new();
    let p4 = Graph::path(4);
    let q4 = p4.relabel(&VertexBijection::new(vec![2, 0, 3, 1]));
    let a = ws.graph("p4.g6", &p4);
    let b = ws.graph("p4-relabel.g6", &q4);
    let (code, out) = run(&[
        "iso",
        p(&a),
        p(&b),
        "--param",
        "dist-cograph",
        "--k",
        "1",
        "--certificate",
    ]);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r["verdict"], "isomorphic");
    assert_eq!(r["witness"]["verified"], true);
    let mapping: Vec<usize> = serde_json::from_value(r["witness"]["mapping"].clone()).unwrap();
    assert!(verify_isomorphism(&p4, &q4, &VertexBijection::new(mapping)));
    assert_eq!(r["param"]["k"], 1);
    assert!(r["wall_time_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn iso_non_isomorphic_and_promise_failure() {
    let ws = Workspace::new();
    let c6 = ws.graph("c6.g6", &Graph::cycle(6));
    let two = ws.graph(
        "two-triangles.g6",
        &Graph::complete(3).disjoint_union(&Graph::complete(3)),
    );
    let (code, out) = run(&["iso", p(&c6), p(&two), "--param", "dist-cluster", "--k", "2"]);
    assert_eq!(code, 1);
    let r = report(&out);
    assert_eq!(r["verdict"], "non-isomorphic");
    assert!(r.get("witness").is_none());

    let c5 = ws.graph("c5.g6", &Graph::cycle(5));
    let (code, out) = run(&["iso", p(&c5), p(&c5), "--param", "dist-cograph", "--k", "1"]);
    assert_eq!(code, 2);
    let r = report(&out);
    assert_eq!(r["verdict"], "distance-exceeded");
    assert_eq!(r["distance_exceeded"]["first"], true);
}

#[test]
fn iso_every_parameterization_with_oracle_check() {
    let ws = Workspace::new();
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
    let h = g.relabel(&VertexBijection::new(vec![5, 3, 1, 0, 2, 4]));
    let a = ws.graph("g.g6", &g);
    let b = ws.graph("h.g6", &h);
    for param in [
        "vc",
        "twin-cover",
        "dist-clique",
        "dist-cograph",
        "dist-cluster",
        "dist-threshold",
    ] {
        let (code, out) = run(&[
            "iso",
            p(&a),
            p(&b),
            "--param",
            param,
            "--k",
            "6",
            "--deterministic",
            "--oracle-check",
        ]);
        assert_eq!(code, 0, "{param}: {out}");
        assert_eq!(report(&out)["oracle_check"]["agrees"], true);
    }
}

#[test]
fn iso_custom_family_file() {
    let ws = Workspace::new();
    // triangle-free graphs
    let fam = ws.write("triangle.txt", "# K3\nBw\n");
    let g = Graph::complete(3).disjoint_union(&Graph::path(2));
    let a = ws.graph("a.g6", &g);
    let b = ws.graph("b.g6", &g.relabel(&VertexBijection::new(vec![4, 2, 0, 1, 3])));
    let (code, out) = run(&[
        "iso",
        p(&a),
        p(&b),
        "--param",
        "dist-family",
        "--family-file",
        p(&fam),
        "--k",
        "1",
    ]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = run(&["iso", p(&a), p(&b), "--param", "dist-family", "--k", "1"]);
    assert_eq!(code, 3);
}

#[test]
fn dimacs_input_is_detected() {
    let ws = Workspace::new();
    let a = ws.write("p3.txt", "c path\np edge 3 2\ne 1 2\ne 2 3\n");
    let b = ws.write("p3b.txt", "p edge 3 2\ne 2 1\ne 1 3\n");
    let (code, _) = run(&["iso", p(&a), p(&b), "--param", "vc", "--k", "1"]);
    assert_eq!(code, 0);
    let (code, _) = run(&["iso", p(&a), p(&b), "--param", "vc", "--k", "1", "--format", "graph6"]);
    assert_eq!(code, 3);
}

#[test]
fn recognize_reports_membership() {
    let ws = Workspace::new();
    let c4 = ws.graph("c4.g6", &Graph::cycle(4));
    let (code, out) = run(&["recognize", p(&c4), "--family", "cograph"]);
    assert_eq!(code, 0);
    assert_eq!(report(&out)["member"], true);
    let p4 = ws.graph("p4.g6", &Graph::path(4));
    let (code, out) = run(&["recognize", p(&p4), "--family", "cograph"]);
    assert_eq!(code, 1);
    assert_eq!(report(&out)["occurrence"], serde_json::json!([0, 1, 2, 3]));
    let (code, _) = run(&["recognize", p(&p4), "--family", "planar"]);
    assert_eq!(code, 3);
}

#[test]
fn deletion_and_vertex_cover_listings() {
    let ws = Workspace::new();
    let p4 = ws.graph("p4.g6", &Graph::path(4));
    let (code, out) = run(&["deletion", p(&p4), "--family", "cograph", "--k", "1", "--count"]);
    assert_eq!((code, out.as_str()), (0, "4\n"));
    let (code, out) = run(&["deletion", p(&p4), "--family", "cograph", "--k", "1"]);
    assert_eq!((code, out.as_str()), (0, "{0}\n{1}\n{2}\n{3}\n"));
    let (code, out) = run(&["deletion", p(&p4), "--family", "cograph", "--k", "0"]);
    assert_eq!((code, out.as_str()), (1, ""));

    let p3 = ws.graph("p3.g6", &Graph::path(3));
    let (code, out) = run(&["vc", p(&p3), "--k", "2"]);
    assert_eq!((code, out.as_str()), (0, "{1}\n{0,2}\n"));
    let (_, out) = run(&["deletion", p(&p3), "--family", "vertex-cover", "--k", "2"]);
    assert_eq!(out, "{1}\n{0,2}\n");
    let (_, out) = run(&["deletion", p(&p3), "--family", "twin-cover", "--k", "1"]);
    assert_eq!(out, "{1}\n");
}

#[test]
fn oracle_iso() {
    let ws = Workspace::new();
    let c6 = ws.graph("c6.g6", &Graph::cycle(6));
    let two = ws.graph("2k3.g6", &Graph::complete(3).disjoint_union(&Graph::complete(3)));
    assert_eq!(run(&["oracle", "iso", p(&c6), p(&two)]).0, 1);
    let (code, out) = run(&["oracle", "iso", p(&c6), p(&c6), "--certificate"]);
    assert_eq!(code, 0);
    assert_eq!(report(&out)["witness"]["verified"], true);
}

#[test]
fn hitting_game() {
    let ws = Workspace::new();
    let two = ws.write("two.txt", "a\nb\n");
    let (code, out) = run(&["game", "hitting", "--file", p(&two), "--k1", "1", "--k2", "2"]);
    assert_eq!(code, 1);
    assert_eq!(report(&out)["player_one_wins"], false);
    let pair = ws.write("pair.txt", "a b\n");
    let (code, out) = run(&["game", "hitting", "--file", p(&pair), "--k1", "2", "--k2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(report(&out)["winning_move"], "a");
    let empty = ws.write("empty.txt", "");
    assert_eq!(
        run(&["game", "hitting", "--file", p(&empty), "--k1", "1", "--k2", "1"]).0,
        3
    );
}

#[test]
fn weighted_sat() {
    let ws = Workspace::new();
    let f = ws.write("f.cnf", "p cnf 3 2\n1 2 0\n-1 3 0\n");
    let (code, out) = run(&["sat", "--dimacs-cnf", p(&f), "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(report(&out)["true_variables"], serde_json::json!([2]));
    let bad = ws.write("bad.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    assert_eq!(run(&["sat", "--dimacs-cnf", p(&bad), "--k", "1"]).0, 1);
    let empty_clause = ws.write("empty.cnf", "p cnf 1 1\n0\n");
    assert_eq!(run(&["sat", "--dimacs-cnf", p(&empty_clause), "--k", "1"]).0, 3);
}

#[test]
fn usage_and_input_errors() {
    let ws = Workspace::new();
    let a = ws.graph("a.g6", &Graph::path(3));
    assert_eq!(run(&["iso", p(&a), p(&a), "--param", "treewidth", "--k", "1"]).0, 3);
    assert_eq!(
        run(&["iso", p(&a), "/nonexistent/graph.g6", "--param", "vc", "--k", "1"]).0,
        3
    );
    let junk = ws.write("junk.g6", "A\u{7f}\n");
    assert_eq!(run(&["iso", p(&a), p(&junk), "--param", "vc", "--k", "1"]).0, 3);
    assert_eq!(run(&[]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn worker_count_from_environment() {
    let ws = Workspace::new();
    let a = ws.graph("a.g6", &Graph::cycle(5));
    let ok = Command::new(env!("CARGO_BIN_EXE_distgi"))
        .args(["iso", p(&a), p(&a), "--param", "dist-cograph", "--k", "2"])
        .env("DISTGI_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_distgi"))
        .args(["iso", p(&a), p(&a), "--param", "dist-cograph", "--k", "2"])
        .env("DISTGI_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
