//! End-to-end tests of the command-line binary: exit codes, report shapes,
//! and round-trips of emitted files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use grouprep::io::{parse_input, ParsedInput};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_grouprep"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).expect("write fixture");
    path
}

#[test]
fn gen_then_aut_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen", "star", "3", "--out", "s3.graph"]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());

    let out = run_in(dir.path(), &["aut", "s3.graph"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("aut_order 6\n"), "got: {text}");

    // The emitted file re-parses to the star.
    let ParsedInput::Graph(g) = parse_input(&dir.path().join("s3.graph")).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(g.vertex_count(), 4);
    assert_eq!(g.degree(0), 3);
}

#[test]
fn every_gen_kind_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("cyclic", "7", "table"),
        ("dihedral", "4", "table"),
        ("symmetric", "3", "table"),
        ("alternating", "4", "table"),
        ("quaternion", "8", "table"),
        ("star", "4", "graph"),
        ("path", "5", "graph"),
        ("complete", "4", "graph"),
    ];
    for (kind, n, expected) in cases {
        let name = format!("{kind}.out");
        let out = run_in(dir.path(), &["gen", kind, n, "--out", &name]);
        assert_eq!(out.status.code(), Some(0), "gen {kind} failed");
        let parsed = parse_input(&dir.path().join(&name)).unwrap();
        assert_eq!(parsed.kind(), expected, "gen {kind}");
    }
}

#[test]
fn solvable_rep_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cyclic", "6", "--out", "z6.table"]);
    write(
        dir.path(),
        "c5.graph",
        "graph\n5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n",
    );
    let out = run_in(
        dir.path(),
        &["decide", "solvable-rep", "z6.table", "c5.graph"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "REPRESENTABLE\n");

    run_in(dir.path(), &["gen", "cyclic", "3", "--out", "z3.table"]);
    run_in(dir.path(), &["gen", "path", "4", "--out", "p4.graph"]);
    let out = run_in(
        dir.path(),
        &["decide", "solvable-rep", "z3.table", "p4.graph"],
    );
    assert_eq!(out.status.code(), Some(0), "negative verdict still exits 0");
    assert_eq!(stdout(&out), "NOT_REPRESENTABLE\n");
}

#[test]
fn perm_rep_json_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cyclic", "2", "--out", "z2.table"]);
    let out = run_in(
        dir.path(),
        &["decide", "perm-rep", "z2.table", "2", "--json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["verdict"], "REPRESENTABLE");
    assert_eq!(report["method"], "star_reduction");
    assert_eq!(
        report["witness"]["generator_images"][0]["image"],
        serde_json::json!([1, 0])
    );
    assert!(report["stats"]["elapsed_ms"].is_number());
}

#[test]
fn json_reports_parse_for_every_command() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "star", "3", "--out", "s3.graph"]);
    run_in(dir.path(), &["gen", "cyclic", "6", "--out", "z6.table"]);
    run_in(dir.path(), &["gen", "path", "3", "--out", "p3.graph"]);

    let cases: Vec<Vec<&str>> = vec![
        vec!["aut", "s3.graph", "--json"],
        vec!["iso", "p3.graph", "p3.graph", "--json"],
        vec!["decide", "solvable-rep", "z6.table", "s3.graph", "--json"],
        vec!["oracle", "rep", "z6.table", "s3.graph", "--json"],
        vec!["root-tree", "p3.graph", "--out", "p3.rtree", "--json"],
        vec![
            "reduce",
            "gi-to-abelian",
            "p3.graph",
            "p3.graph",
            "--out",
            "z.graph",
            "--out-group",
            "zp.table",
            "--json",
        ],
        vec!["gen", "complete", "3", "--out", "k3.graph", "--json"],
    ];
    for args in cases {
        let out = run_in(dir.path(), &args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report: serde_json::Value = serde_json::from_str(stdout(&out).trim())
            .unwrap_or_else(|e| panic!("{args:?} emitted invalid JSON: {e}"));
        assert!(report.is_object(), "{args:?}");
        assert!(report["stats"]["elapsed_ms"].is_number(), "{args:?}");
    }

    // Spot-check the aut report contents.
    let out = run_in(dir.path(), &["aut", "s3.graph", "--json"]);
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["aut_order"], "6");
    assert!(report["generators"].is_array());
}

#[test]
fn tree_rep_reports_recursive_calls() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cyclic", "2", "--out", "z2.table"]);
    run_in(dir.path(), &["gen", "star", "4", "--out", "s4.graph"]);
    let out = run_in(
        dir.path(),
        &["decide", "tree-rep", "z2.table", "s4.graph", "--json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["verdict"], "REPRESENTABLE");
    assert_eq!(report["method"], "recursive_tree");
    assert!(report["stats"]["recursive_calls"].is_number());
}

#[test]
fn oracle_rep_prints_witness() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cyclic", "2", "--out", "z2.table"]);
    run_in(dir.path(), &["gen", "complete", "2", "--out", "k2.graph"]);
    let out = run_in(dir.path(), &["oracle", "rep", "z2.table", "k2.graph"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "REPRESENTABLE\nrho[1] = (0 1)\n");
}

#[test]
fn iso_verdicts_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.graph", "graph\n3 2\n0 1\n1 2\n");
    write(dir.path(), "b.graph", "graph\n3 2\n2 1\n1 0\n");
    write(dir.path(), "c.graph", "graph\n3 3\n0 1\n1 2\n0 2\n");

    let out = run_in(dir.path(), &["iso", "a.graph", "b.graph"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("ISOMORPHIC\nmap "), "got: {text}");

    let out = run_in(dir.path(), &["iso", "a.graph", "c.graph"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "NOT_ISOMORPHIC\n");
}

#[test]
fn reduce_writes_all_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "complete", "2", "--out", "k2.graph"]);
    let out = run_in(
        dir.path(),
        &[
            "reduce",
            "gi-to-abelian",
            "k2.graph",
            "k2.graph",
            "--out",
            "z.graph",
            "--out-group",
            "zp.table",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "p = 3\n");

    let ParsedInput::Graph(z) = parse_input(&dir.path().join("z.graph")).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(z.vertex_count(), 6);
    let ParsedInput::Table(t) = parse_input(&dir.path().join("zp.table")).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(t.order(), 3);
    let prov = std::fs::read_to_string(dir.path().join("z.graph.prov")).unwrap();
    assert!(prov.contains("p 3"));
    assert!(prov.contains("component 2 source Y offset 4"));

    // The constructed instance decides REPRESENTABLE (the inputs are equal).
    let out = run_in(
        dir.path(),
        &["decide", "solvable-rep", "zp.table", "z.graph"],
    );
    assert_eq!(stdout(&out), "REPRESENTABLE\n");
}

#[test]
fn reduce_short_circuits_on_unequal_sizes() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "complete", "2", "--out", "k2.graph"]);
    run_in(dir.path(), &["gen", "complete", "3", "--out", "k3.graph"]);
    let out = run_in(
        dir.path(),
        &[
            "reduce",
            "gi-to-abelian",
            "k2.graph",
            "k3.graph",
            "--out",
            "z.graph",
            "--out-group",
            "zp.table",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "NOT_ISOMORPHIC\n");
    assert!(!dir.path().join("z.graph").exists());
}

#[test]
fn root_tree_output_reparses() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "path", "4", "--out", "p4.graph"]);
    let out = run_in(dir.path(), &["root-tree", "p4.graph", "--out", "p4.rtree"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dummy_edge_root"), "got: {text}");
    let ParsedInput::RootedTree(t) = parse_input(&dir.path().join("p4.rtree")).unwrap() else {
        panic!("wrong kind");
    };
    assert_eq!(t.vertex_count(), 5);

    // A rooted tree is accepted back as a tree input.
    run_in(dir.path(), &["gen", "cyclic", "2", "--out", "z2.table"]);
    let out = run_in(dir.path(), &["decide", "tree-rep", "z2.table", "p4.rtree"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "REPRESENTABLE\n");
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cyclic", "6", "--out", "z6.table"]);
    write(dir.path(), "bad.txt", "bogus\n1 2\n");
    write(dir.path(), "k2.graph", "graph\n2 1\n0 1\n");

    // 0: successful decision, either verdict.
    let out = run_in(
        dir.path(),
        &["decide", "solvable-rep", "z6.table", "k2.graph"],
    );
    assert_eq!(out.status.code(), Some(0));

    // 2: unparsable input.
    let out = run_in(dir.path(), &["aut", "bad.txt"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: missing file.
    let out = run_in(dir.path(), &["aut", "missing.graph"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: wrong input kind for the slot.
    let out = run_in(dir.path(), &["aut", "z6.table"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: unknown flag.
    let out = run_in(dir.path(), &["aut", "k2.graph", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: validation failure inside a well-formed file (identity not first).
    write(dir.path(), "bad.table", "table\n2\n1 0\n0 1\n");
    let out = run_in(dir.path(), &["decide", "perm-rep", "bad.table", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // 3: cap exceeded.
    let out = run_in(dir.path(), &["decide", "perm-rep", "z6.table", "40"]);
    assert_eq!(out.status.code(), Some(3));
    write(dir.path(), "big.graph", "graph\n40 0\n");
    let out = run_in(dir.path(), &["aut", "big.graph"]);
    assert_eq!(out.status.code(), Some(3));

    // 0: help.
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn non_solvable_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    run_in(
        dir.path(),
        &["gen", "alternating", "5", "--out", "a5.table"],
    );
    run_in(dir.path(), &["gen", "complete", "3", "--out", "k3.graph"]);
    let out = run_in(
        dir.path(),
        &["decide", "solvable-rep", "a5.table", "k3.graph"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not solvable"));
}

#[test]
fn perm_presented_group_accepted() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "s3.perm", "perm\n3 2\n1 2 0\n1 0 2\n");
    run_in(dir.path(), &["gen", "path", "7", "--out", "p7.graph"]);
    // S3 has the sign map onto Z2 and Aut(P7) has order 2.
    let out = run_in(
        dir.path(),
        &["decide", "solvable-rep", "s3.perm", "p7.graph"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "REPRESENTABLE\n");
    let out = run_in(dir.path(), &["decide", "tree-rep", "s3.perm", "p7.graph"]);
    assert_eq!(stdout(&out), "REPRESENTABLE\n");
}

#[test]
fn deterministic_output_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "dihedral", "4", "--out", "d4.table"]);
    run_in(dir.path(), &["gen", "star", "4", "--out", "s4.graph"]);
    let first = stdout(&run_in(
        dir.path(),
        &["oracle", "rep", "d4.table", "s4.graph"],
    ));
    for _ in 0..3 {
        let again = stdout(&run_in(
            dir.path(),
            &["oracle", "rep", "d4.table", "s4.graph"],
        ));
        assert_eq!(first, again);
    }
    assert!(first.starts_with("REPRESENTABLE\n"));
}
