//! End-to-end runs of the installed binary: output lines, exit codes,
//! export files, and flag interactions.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn lienil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lienil")).args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn graph_summary_matches_the_documented_lines() {
    let out = lienil(&["graph", "--algebra", "t:2", "--field", "3^1", "--summary"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "24 vertices, 60 edges, \u{3ba}=4, sizes=[6,6,6,6], 5-regular\n");

    let out = lienil(&[
        "graph",
        "--algebra",
        "t:2",
        "--field",
        "2^1",
        "--kind",
        "complement",
        "--summary",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "6 vertices, 12 edges, \u{3ba}=1, sizes=[6], 4-regular\n");
}

#[test]
fn detailed_graph_block_reports_the_analytics() {
    let out = lienil(&["graph", "--algebra", "t:2", "--field", "2^1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for needle in [
        "vertices:    6",
        "edges:       3",
        "|nil(L)|:    2",
        "\u{3ba}=3, sizes=[2, 2, 2]",
        "regular:     yes, degree 1",
        "bipartite:   true",
        "eulerian:    false",
        "star:        false",
    ] {
        assert!(text.contains(needle), "missing {:?} in:\n{}", needle, text);
    }
}

#[test]
fn naive_and_threaded_runs_produce_identical_output() {
    let base = lienil(&["graph", "--algebra", "t:2", "--field", "3^1", "--summary"]);
    let naive = lienil(&["--naive", "graph", "--algebra", "t:2", "--field", "3^1", "--summary"]);
    let threaded =
        lienil(&["--threads", "4", "graph", "--algebra", "t:2", "--field", "3^1", "--summary"]);
    assert!(base.status.success() && naive.status.success() && threaded.status.success());
    assert_eq!(base.stdout, naive.stdout);
    assert_eq!(base.stdout, threaded.stdout);
}

#[test]
fn exports_write_all_three_formats() {
    let dot = tmp("t2f2.dot");
    let json = tmp("t2f2.json");
    let csv = tmp("t2f2.csv");
    let out = lienil(&[
        "graph",
        "--algebra",
        "t:2",
        "--field",
        "2^1",
        "--export",
        &format!("dot:{}", dot.display()),
        "--export",
        &format!("json:{}", json.display()),
        "--export",
        &format!("csv:{}", csv.display()),
        "--summary",
    ]);
    assert!(out.status.success());

    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("graph nilpotent {"));
    assert!(dot_text.contains("v1 -- v4;"));

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(csv_text, "source,target\n1,4\n2,7\n3,6\n");

    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["kind"], "nilpotent");
    assert_eq!(doc["field"]["q"], 2);
    assert_eq!(doc["kappa"], 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn exports_are_byte_identical_across_runs() {
    let a = tmp("repeat_a.json");
    let b = tmp("repeat_b.json");
    for path in [&a, &b] {
        let out = lienil(&[
            "graph",
            "--algebra",
            "gl:2",
            "--field",
            "2^1",
            "--export",
            &format!("json:{}", path.display()),
            "--summary",
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn nil_json_carries_the_schema_and_members() {
    let out = lienil(&["nil", "--algebra", "t:2", "--field", "2^1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["element"], serde_json::Value::Null);
    let members = doc["members"].as_array().unwrap();
    assert_eq!(members.len(), 2);
    assert_eq!(members[1], serde_json::json!([1, 0, 1]));
}

#[test]
fn nil_of_a_chosen_element_prints_its_members() {
    let out = lienil(&["nil", "--algebra", "t:2", "--field", "2^1", "--element", "1,0,0"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("nil_L(h) for h = (1,0,0):"));
    assert!(text.contains("4 members, subspace: yes (span dimension 2)"));
}

#[test]
fn algebra_files_and_sums_load_from_the_common_grammar() {
    let file = tmp("heisenberg.lien");
    std::fs::write(&file, "# three generators, one central\nfield 3^1\ndim 3\nlabels x y z\nsc 1 2 3 1\n")
        .unwrap();
    let spec = format!("file:{}", file.display());
    let out = lienil(&["nil", "--algebra", &spec]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("27 members"));

    let out = lienil(&["graph", "--algebra", "t:2+u:3", "--field", "2^1", "--summary"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "48 vertices, 360 edges, \u{3ba}=3, sizes=[16,16,16], 15-regular\n");
}

#[test]
fn verify_suites_pass_and_print_their_reports() {
    let out = lienil(&["verify", "t2", "--q", "2,3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("[t2-structure q=2]"));
    assert!(text.contains("PASS 4 components"));
    assert!(!text.contains("FAIL"));

    let out = lienil(&["verify", "lemmas", "--algebra", "t:2", "--field", "2^1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("PASS core-containment"));
    assert!(text.contains("PASS automorphism-equivariance"));
    assert!(!text.contains("FAIL"));

    let out = lienil(&["verify", "sums"]);
    assert!(out.status.success());
    assert!(!stdout_of(&out).contains("FAIL"));
}

#[test]
fn search_reports_every_catalog_entry_without_claiming_answers() {
    let out = lienil(&["search"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for name in ["t(2,F2)", "t(2,F5)", "gl(2,F2)", "sl(2,F5)", "u(3,F2)+t(2,F2)"] {
        assert!(text.contains(name), "missing {} in search output", name);
    }
    // honest reporting: the empty and matching graphs are bipartite too
    assert!(text.contains("FINDING: sl(2,F3): bipartite nilpotent graph"));
}

#[test]
fn bad_arguments_exit_2() {
    let out = lienil(&["graph", "--algebra", "q:9", "--field", "2^1", "--summary"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown algebra"));

    let out = lienil(&["nil", "--algebra", "t:2", "--field", "6^1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lienil(&["nil", "--algebra", "t:2", "--field", "2^1", "--element", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension"));
}

#[test]
fn exceeded_caps_exit_3() {
    let out = lienil(&[
        "--max-elements",
        "100",
        "graph",
        "--algebra",
        "gl:3",
        "--field",
        "5^1",
        "--summary",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeding cap"));
}
