use std::process::{Command, Output};

use bipancyclic::BalancedBipartiteGraph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipancyclic")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_matches_golden_sample() {
    let o = run(&["gen", "--n", "4", "--p", "0.5", "--seed", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "bbg 1\nn 4\n0 1\n0 3\n0 7\n2 1\n2 5\n2 7\n4 5\n6 1\n6 3\n6 5\n6 7\n");
}

#[test]
fn gen_thin_spectrum_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.bbg");
    let t = dir.path().join("t.bbg");
    let log = dir.path().join("t.log");
    let g_s = g.to_str().unwrap();
    let t_s = t.to_str().unwrap();
    assert!(run(&["gen", "--n", "40", "--p", "0.5", "--seed", "3", "--plant", "-o", g_s]).status.success());
    let o = run(&["thin", "--input", g_s, "--fraction", "0.7", "--seed", "9", "-o", t_s, "--log", log.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let full = BalancedBipartiteGraph::from_bbg(&std::fs::read_to_string(&g).unwrap()).unwrap();
    let thin = BalancedBipartiteGraph::from_bbg(&std::fs::read_to_string(&t).unwrap()).unwrap();
    assert!(thin.is_subgraph_of(&full) && thin.contains_standard_cycle());
    assert_eq!(thin.edge_count(), (0.7 * full.edge_count() as f64).ceil() as usize);
    let deletions = std::fs::read_to_string(&log).unwrap();
    assert_eq!(deletions.lines().count(), full.edge_count() - thin.edge_count());

    let o = run(&["spectrum", "--input", t_s]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["verdict"], "yes", "{report}");
}

#[test]
fn spectrum_of_a_bare_cycle_says_no() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c.bbg");
    std::fs::write(&g, "bbg 1\nn 3\n0 1\n0 5\n2 1\n2 3\n4 3\n4 5\n").unwrap();
    let o = run(&["spectrum", "--input", g.to_str().unwrap(), "--mode", "exhaustive"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["verdict"], "no");
}

#[test]
fn theorem1_exit_codes() {
    let o = run(&["theorem1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("n = 4: 26333 dense subgraphs, 6521 Hamiltonian, 0 counterexamples"));
    let o = run(&["theorem1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("counterexample:")).count(), 6);
    assert_eq!(run(&["theorem1", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(run(&["gen", "--n", "4", "--p", "1.5"]).status.code(), Some(2));
    assert_eq!(run(&["lemma5-check", "--n", "30", "--beta", "0.1", "--l", "3"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn sweeps_are_reproducible() {
    let args = ["resilience-sweep", "--n", "48", "--p", "5*n^(-2/3)", "--trials", "3", "--seed", "11"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let csv = stdout(&a);
    assert!(csv.starts_with("trial,seed,n,p,eps,edges_sampled,edges_final,verdict,missing,unknown,ms\n"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn tightness_fan_reports_discrepancy() {
    let o = run(&["tightness", "--mode", "fan", "--n", "60", "--p", "0.5", "--seed", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let json_start = text.find('{').unwrap();
    let summary: serde_json::Value = serde_json::from_str(&text[json_start..]).unwrap();
    assert!(summary["c4_discrepancy"].is_boolean());
    assert_eq!(summary["c4_discrepancy"] == true, text.starts_with("note:"));
}

#[test]
fn census_and_probe_emit_json() {
    let o = run(&["shortcut-census", "--n", "12", "--eps-prime", "0.9"]);
    assert_eq!(o.status.code(), Some(0));
    let census: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(census["entries"][0]["count"], 5760);

    let o = run(&["hypergraph-probe", "--n", "8", "--l", "2", "--trials", "5", "--moment-trials", "5"]);
    assert!(o.status.success());
    let probe: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(probe["hyperedges"], 320);
    assert_eq!(probe["vertices"], 64);
}
