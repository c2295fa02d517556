use std::process::Command;

use binedge::cli::{run, Outcome};
use binedge::format::{GraphDoc, InvariantReport, PdDoc, VNumberReport};
use serde_json::Value;

fn ok(args: &str) -> String {
    let out = run(std::iter::once("binedge").chain(args.split_whitespace()));
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    out.stdout
}

fn fails(args: &str) -> Outcome {
    run(std::iter::once("binedge").chain(args.split_whitespace()))
}

#[test]
fn crown_invariants() {
    let r: InvariantReport = serde_json::from_str(&ok("invariants --family crown --n 4")).unwrap();
    assert_eq!(r.kappa, Some(3));
    assert_eq!(r.gamma_c, Some(4));
    assert_eq!((r.krull_dim, r.height, r.bigheight), (9, 7, 10));
    assert_eq!(r.cutset_count, 17);
    assert_eq!((r.pd, r.v_number), (None, None));
}

#[test]
fn optional_invariants_on_request() {
    let r: InvariantReport = serde_json::from_str(&ok("invariants --family cycle --n 5 --pd --vnumber")).unwrap();
    assert_eq!((r.pd, r.v_number), (Some(5), Some(3)));
}

#[test]
fn undefined_invariants_are_omitted() {
    let out = fails("invariants --family empty --n 3");
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v.get("kappa").is_none() && v.get("gamma_c").is_none());
    assert!(out.stderr.contains("kappa omitted"));
}

#[test]
fn cycle_pd() {
    let d: PdDoc = serde_json::from_str(&ok("pd --family cycle --n 5")).unwrap();
    assert_eq!((d.pd, d.bigheight, d.equal), (5, 5, true));
    assert_eq!(d.method, "hochster-lex");
    assert!(d.betti.is_none());
}

#[test]
fn betti_entries_sum_to_alternating_zero() {
    let d: PdDoc = serde_json::from_str(&ok("pd --family path --n 4 --betti")).unwrap();
    let betti = d.betti.unwrap();
    let chi: i64 = betti.iter().map(|b| if b.i % 2 == 0 { b.value as i64 } else { -(b.value as i64) }).sum();
    assert_eq!(chi, 0);
    assert_eq!(betti.iter().map(|b| b.i).max(), Some(d.pd));
}

#[test]
fn cycle_vnumber() {
    let r: VNumberReport = serde_json::from_str(&ok("vnumber --family cycle --n 6")).unwrap();
    assert_eq!(r.v, 4);
    assert_eq!(r.per_prime.len(), 12);
    assert!(r.witnesses.is_empty());
}

#[test]
fn crown_witnesses() {
    let r: VNumberReport =
        serde_json::from_str(&ok("vnumber --family crown --n 3 --witnesses --field gf:32003")).unwrap();
    assert_eq!(r.field, "GF(32003)");
    assert_eq!(r.v, 4);
    // every nonempty cut set except the two bipartition classes
    assert_eq!(r.witnesses.len(), r.per_prime.len() - 3);
    assert!(r.witnesses.iter().all(|w| w.verified && w.not_in_j && w.degree == 4));
}

#[test]
fn primes_list_generators() {
    let v: Value = serde_json::from_str(&ok("primes --family path --n 3")).unwrap();
    let primes = v["primes"].as_array().unwrap();
    assert_eq!(primes.len(), 2);
    assert_eq!(primes[1]["t"], serde_json::json!([2]));
    assert_eq!(primes[1]["gens"], serde_json::json!(["x2", "y2"]));
}

#[test]
fn graph_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.json");
    std::fs::write(&path, ok("graph gen --family cycle --n 5")).unwrap();
    let doc: GraphDoc = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.n, 5);
    assert_eq!(doc.edges.len(), 5);
    let from_file = ok(&format!("cutsets --graph {}", path.display()));
    assert_eq!(from_file, ok("cutsets --family cycle --n 5"));
}

#[test]
fn output_is_deterministic() {
    for args in
        ["cutsets --family crown --n 3", "vnumber --family cycle --n 5 --jobs 3", "pd --family crown --n 3 --betti"]
    {
        assert_eq!(ok(args), ok(args), "{args}");
    }
    assert_eq!(ok("vnumber --family crown --n 3 --jobs 1"), ok("vnumber --family crown --n 3 --jobs 4"));
}

#[test]
fn multipartite_parts() {
    let d: PdDoc = serde_json::from_str(&ok("pd --family multipartite --parts 2,3")).unwrap();
    assert_eq!(d.pd, 6);
}

#[test]
fn crown_two_warns() {
    let out = fails("cutsets --family crown --n 2");
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("n >= 3"));
}

#[test]
fn table_format() {
    let out = ok("invariants --family crown --n 3 --format table");
    assert!(out.lines().any(|l| l.split_whitespace().eq(["bigheight", "6"])));
}

#[test]
fn exit_codes() {
    assert_eq!(fails("frobnicate").code, 2);
    assert_eq!(fails("cutsets").code, 2);
    assert_eq!(fails("cutsets --family cycle --n 5 --field gf:12").code, 2);
    assert_eq!(fails("cutsets --family cycle --n 5 --order grlex").code, 2);
    assert_eq!(fails("cutsets --family cycle --n 2").code, 2);
    assert_eq!(fails("cutsets --graph /nonexistent/graph.json").code, 2);
    let capped = fails("pd --family crown --n 3 --max-pairs 3");
    assert_eq!(capped.code, 3, "{}", capped.stderr);
    assert!(capped.stderr.contains("resource limit"));
    assert_eq!(fails("--help").code, 0);
}

#[test]
fn malformed_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"n": 3, "edges": [[1, 1]]}"#).unwrap();
    assert_eq!(fails(&format!("cutsets --graph {}", path.display())).code, 2);
    std::fs::write(&path, r#"{"n": 3, "edges": [], "extra": 1}"#).unwrap();
    assert_eq!(fails(&format!("cutsets --graph {}", path.display())).code, 2);
}

#[test]
fn verify_small_suite() {
    let out = fails("verify --suite paper --max-n 4 --criterion 1 --criterion 13 --format table");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(out.stdout.lines().filter(|l| l.starts_with("[PASS]")).count(), 2);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_binedge");
    let s = Command::new(bin).args(["pd", "--family", "cycle", "--n", "4"]).output().unwrap();
    assert!(s.status.success());
    let d: PdDoc = serde_json::from_slice(&s.stdout).unwrap();
    assert_eq!(d.pd, 4);
    let s = Command::new(bin).args(["pd", "--family", "nope"]).output().unwrap();
    assert_eq!(s.status.code(), Some(2));
}
