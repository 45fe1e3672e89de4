//! End-to-end tests of the binary: golden outputs, exit codes, and byte
//! determinism of every format.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use cstar_core::cuntz;
use cstar_core::json::MorphismJson;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cstar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("cstar-test-{}-{name}", std::process::id()));
    fs::write(&path, contents).expect("writable temp dir");
    path
}

#[test]
fn kawamura_3_2_golden_text() {
    let out = run(&["kawamura", "--m", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let expect = "\
kawamura embedding O_3 -> O_2   (m=3, n=2, k=2)
v -> v'
e1 -> e'1
e2 -> e'2 e'1
e3 -> e'2 e'2
induced on generators:
S_1 -> S_1
S_2 -> S_2 S_1
S_3 -> S_2 S_2
verification: relations PASS (14 records)
";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn embed_2_2_2_golden_text() {
    let out = run(&["embed", "--p", "2", "--q", "2", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let expect = "\
unital embedding O_2 -> M_2(O_2)   (p=2, q=2, k=2, s=2, m=3)
T_1 = [[0, 0], [S_2 S_1, S_1]]
T_2 = [[0, 1], [S_2 S_2, 0]]
verification: relations PASS (10 records), matrix form PASS (5 records)
";
    assert_eq!(stdout(&out), expect);
}

#[test]
fn embed_3_2_1_prints_the_kawamura_words() {
    let out = run(&["embed", "--p", "3", "--q", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("T_1 = [[S_1]]"));
    assert!(text.contains("T_2 = [[S_2 S_1]]"));
    assert!(text.contains("T_3 = [[S_2 S_2]]"));
}

#[test]
fn embed_refuses_congruence_failure_with_exit_2() {
    let out = run(&["embed", "--p", "4", "--q", "3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("does not divide"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty(), "no formulas on refusal");
}

#[test]
fn embed_s_override_is_checked() {
    let out = run(&["embed", "--p", "2", "--q", "2", "--k", "2", "--s", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["embed", "--p", "2", "--q", "2", "--k", "2", "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["embed", "--p", "3", "--q", "2", "--k", "2", "--format", "json"],
        vec!["embed", "--p", "2", "--q", "3", "--k", "2", "--format", "latex"],
        vec!["kawamura", "--m", "5", "--n", "3", "--format", "json"],
        vec!["graphs", "--family", "F", "--params", "7,3"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), Some(0));
    }
}

#[test]
fn graphs_family_f_5_3_shape() {
    let out = run(&["graphs", "--family", "F", "--params", "5,3"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: cstar_core::json::GraphJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.vertices.len(), 2);
    assert_eq!(parsed.edges.len(), 6);
    parsed.to_graph().expect("round-trips through the schema");
}

#[test]
fn graphs_dot_output() {
    let out = run(&["graphs", "--family", "line", "--params", "2", "--format", "dot"]);
    assert_eq!(
        stdout(&out),
        "digraph {\n  \"v1\";\n  \"v2\";\n  \"v1\" -> \"v2\" [label=\"l1\"];\n}\n"
    );
}

#[test]
fn graphs_rejects_bad_parameters() {
    let out = run(&["graphs", "--family", "rose", "--params", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["graphs", "--family", "F", "--params", "4,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_graph_hom_pass_fail_and_malformed() {
    // identity on the 2-rose passes
    let good = MorphismJson::from_graph_hom(&cuntz::pivot_collapse(3, 2).unwrap());
    let path = temp_file("good-hom.json", &serde_json::to_string(&good).unwrap());
    let out = run(&["check-graph-hom", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("overall: PASS"));

    // folding both loops onto one fails with a clause-level report
    let bad = r#"{
        "source": {"vertices": ["v"], "edges": [{"id": "e1", "src": "v", "tgt": "v"}, {"id": "e2", "src": "v", "tgt": "v"}]},
        "target": {"vertices": ["v"], "edges": [{"id": "e1", "src": "v", "tgt": "v"}, {"id": "e2", "src": "v", "tgt": "v"}]},
        "vmap": {"v": "v"},
        "emap": {"e1": ["e1"], "e2": ["e1"]}
    }"#;
    let path = temp_file("bad-hom.json", bad);
    let out = run(&["check-graph-hom", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("target-bijectivity: FAIL"));

    // malformed input exits 2
    let path = temp_file("broken.json", "{ not json");
    let out = run(&["check-graph-hom", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_path_hom_accepts_kawamura_and_emits_json_reports() {
    let hom = MorphismJson::from_path_hom(&cuntz::kawamura(5, 3).unwrap());
    let path = temp_file("kawamura.json", &serde_json::to_string(&hom).unwrap());
    let out = run(&["check-path-hom", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
}

#[test]
fn check_path_hom_rejects_monotonicity_violation() {
    let bad = r#"{
        "source": {"vertices": ["v"], "edges": [{"id": "e1", "src": "v", "tgt": "v"}, {"id": "e2", "src": "v", "tgt": "v"}]},
        "target": {"vertices": ["v"], "edges": [{"id": "e1", "src": "v", "tgt": "v"}, {"id": "e2", "src": "v", "tgt": "v"}]},
        "vmap": {"v": "v"},
        "emap": {"e1": ["e1"], "e2": ["e1", "e1"]}
    }"#;
    let path = temp_file("mono.json", bad);
    let out = run(&["check-path-hom", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("monotonicity: FAIL"));
}

#[test]
fn canon_collapses_the_full_range_sum() {
    let input = r#"{
        "graph": {"vertices": ["v"], "edges": [{"id": "e1", "src": "v", "tgt": "v"}, {"id": "e2", "src": "v", "tgt": "v"}]},
        "element": [
            {"coeff": 1, "alpha": ["e1"], "beta": ["e1"]},
            {"coeff": 1, "alpha": ["e2"], "beta": ["e2"]}
        ]
    }"#;
    let path = temp_file("canon.json", input);
    let out = run(&["canon", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["canon", path.to_str().unwrap(), "--format", "json"]);
    let canonical: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // one projection term with coefficient 1
    assert_eq!(canonical.as_array().unwrap().len(), 1);
    assert_eq!(canonical[0]["coeff"], 1);
}

#[test]
fn no_verify_skips_the_gate() {
    let out = run(&["embed", "--p", "2", "--q", "2", "--k", "3", "--no-verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verification: skipped"));
}

#[test]
fn grid_subcommand_reports_every_cell() {
    let out = run(&["grid", "--p-max", "3", "--q-max", "3", "--k-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8, "2x2x2 cells");
    assert!(text.lines().all(|l| l.contains("PASS") || l.contains("SKIP")));
}
