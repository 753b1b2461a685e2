//! End-to-end tests of the command-line interface.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluscat"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn quiver_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn build_counts() {
    let out = run(&["build", "--family", "A", "--rank", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("indecomposables: 9"));
    let out = run(&["build", "--family", "D", "--rank", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("indecomposables: 16"));
}

#[test]
fn build_normalizes_degenerate_d_ranks() {
    let out = run(&["build", "--family", "D", "--rank", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("note:"), "{text}");
    assert_eq!(text.matches("category: A_1").count(), 2, "{text}");
}

#[test]
fn build_rejects_invalid_spec() {
    let out = run(&["build", "--family", "A", "--rank", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn build_emits_dot() {
    let out = run(&["build", "--family", "A", "--rank", "2", "--emit", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("digraph ar_quiver {"));
    assert_eq!(text.matches('{').count(), text.matches('}').count());
}

#[test]
fn build_emits_tables() {
    let out = run(&["build", "--family", "A", "--rank", "2", "--emit", "table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("hom\t"));
    assert!(text.contains("ext\t"));
}

#[test]
fn enumerate_counts() {
    for (family, rank, count) in [("A", "2", "5"), ("A", "3", "14"), ("D", "4", "50")] {
        let out = run(&["enumerate", "--family", family, "--rank", rank, "--count-only"]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), count);
    }
}

#[test]
fn enumerate_lists_objects() {
    let out = run(&["enumerate", "--family", "A", "--rank", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.split_whitespace().count() == 2));
}

#[test]
fn quiver_of_fan_object_is_relation_free() {
    let out = run(&[
        "quiver", "--family", "A", "--rank", "4", "--object", "(0,1) (0,2) (4,2) (5,1)",
        "--relations",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("->").count(), 3, "{text}");
    assert!(text.contains("zero relations:\ncommutativity relations:\n"), "{text}");
}

#[test]
fn quiver_of_central_triangle_has_three_zero_relations() {
    let out = run(&[
        "quiver", "--family", "A", "--rank", "3", "--object", "(0,1) (2,1) (4,1)",
        "--relations",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let zeros = text
        .split("zero relations:")
        .nth(1)
        .unwrap()
        .split("commutativity relations:")
        .next()
        .unwrap();
    assert_eq!(zeros.trim().lines().count(), 3, "{text}");
}

#[test]
fn quiver_rejects_non_rigid_object() {
    let out = run(&[
        "quiver", "--family", "A", "--rank", "2", "--object", "(0,1) (1,1)",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quiver_emits_dot() {
    let out = run(&[
        "quiver", "--family", "A", "--rank", "3", "--object", "(0,1) (2,1) (4,1)", "--dot",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph quiver {"));
    assert!(text.contains("// zero relation:"));
    assert_eq!(text.matches('{').count(), text.matches('}').count());
}

#[test]
fn classify_five_vertex_example() {
    let f = quiver_file(
        "vertices:\n1\n2\n3\n4\n5\narrows:\n1 -> 2\n2 -> 3\n3 -> 4\n4 -> 5\n5 -> 3\n",
    );
    let out = run(&["classify", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("shape: TypeA"));
    assert!(text.contains("connecting vertices: 1, 4, 5"));
}

#[test]
fn classify_json_variant() {
    let f = quiver_file(
        r#"{"vertices": ["a", "b", "c"], "arrows": [["a", "b"], ["b", "c"], ["c", "a"]]}"#,
    );
    let out = run(&["classify", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("shape: TypeA"));
}

#[test]
fn classify_rejects_two_cycle() {
    let f = quiver_file("vertices:\na\nb\narrows:\na -> b\nb -> a\n");
    let out = run(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stderr(&out).contains("2-cycle forbidden"));
}

#[test]
fn classify_rejects_malformed_file() {
    let f = quiver_file("vertices\na\n");
    let out = run(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn reconstruct_oriented_four_cycle() {
    let f = quiver_file("vertices:\n0\n1\n2\n3\narrows:\n0 -> 1\n1 -> 2\n2 -> 3\n3 -> 0\n");
    let out = run(&["reconstruct", f.path().to_str().unwrap(), "--verify"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("family: D"));
    assert!(text.contains("rank: 4"));
    assert!(text.contains("object: (0,1) (0,3) (2,1) (2,3)"));
    assert!(text.contains("round trip: quiver isomorphism"), "{text}");
    assert!(text.contains("result: pass"), "{text}");
}

#[test]
fn selftest_small_ranks() {
    let out = run(&["selftest", "--max-rank-a", "4", "--max-rank-d", "4"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("selftest: all criteria passed"));
}
