use std::path::PathBuf;
use std::process::Command;

use typedefect::betti::{betti_table, type_defect};
use typedefect::cli::run_command;
use typedefect::document::ComplexDocument;
use typedefect::FieldSpec;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["typedefect"];
    full.extend_from_slice(args);
    let code = run_command(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(out.trim()).unwrap()
}

#[test]
fn td_of_a_tree_is_zero() {
    let (code, out, _) = run(&["td", &data("tree.complex")]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "td = 0"), "{out}");
    assert!(out.contains("field: q"));
}

#[test]
fn betti_of_two_disjoint_edges() {
    let (code, out, _) = run(&["betti", "--field", "q", &data("two_edges.complex")]);
    assert_eq!(code, 0);
    assert!(out.contains("type = 4"), "{out}");
    let v = json(&["betti", &data("two_edges.complex")]);
    assert_eq!(v["field"], "q");
    assert_eq!(v["totals"][2], 4);
    let row2: u64 = v["entries"][2]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .sum();
    assert_eq!(row2, 4);
}

#[test]
fn chordal_sweep_on_six_vertices_passes() {
    let (code, out, _) = run(&["sweep", "--suite", "chordal-td", "--max-vertices", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result: pass"));
}

#[test]
fn structured_output_matches_the_library() {
    let text = std::fs::read_to_string(data("heredity.complex")).unwrap();
    let cx = ComplexDocument::parse(&text).unwrap().to_complex().unwrap();
    for field in ["q", "gf2", "gf2147483647"] {
        let spec: FieldSpec = field.parse().unwrap();
        let v = json(&["--field", field, "td", &data("heredity.complex")]);
        assert_eq!(v["field"], field);
        assert_eq!(
            v["type_defect"].as_i64().unwrap(),
            type_defect(&cx, spec).unwrap()
        );
        let b = json(&["--field", field, "betti", &data("heredity.complex")]);
        let table = betti_table(&cx, spec).unwrap();
        assert_eq!(b["entries"], serde_json::to_value(&table.entries).unwrap());
    }
    let info = json(&["info", &data("heredity.complex")]);
    assert_eq!(info["name"], "heredity counterexample");
    assert_eq!(info["cohen_macaulay"], true);
}

#[test]
fn every_file_command_runs() {
    for cmd in [
        "info",
        "betti",
        "type",
        "td",
        "cm",
        "gorenstein",
        "chordal",
        "treeish",
        "dual",
        "linres",
    ] {
        let (code, out, err) = run(&[cmd, &data("path.complex")]);
        assert_eq!(code, 0, "{cmd}: {err}");
        assert!(out.contains("field: q"), "{cmd}: {out}");
        let v = json(&[cmd, &data("path.complex")]);
        assert_eq!(v["command"], cmd);
    }
}

#[test]
fn four_cycle_is_not_chordal_and_td_agrees() {
    let v = json(&["chordal", &data("c4.complex")]);
    assert_eq!(v["chordal"], false);
    assert_eq!(v["td_nonnegative_on_induced"], false);
    assert_eq!(v["agree"], true);
    let td = json(&["td", &data("c4.complex")]);
    assert_eq!(td["type_defect"], -1);
}

#[test]
fn dual_round_trips_through_the_text_format() {
    let (code, out, _) = run(&["dual", &data("two_edges.complex")]);
    assert_eq!(code, 0);
    let body: String = out
        .lines()
        .filter(|l| !l.starts_with("field:"))
        .map(|l| format!("{l}\n"))
        .collect();
    let dual = ComplexDocument::parse(&body).unwrap();
    assert_eq!(dual.labels, ["x", "y", "z", "w"]);
    assert_eq!(dual.facets.len(), 4);
}

#[test]
fn glue_reports_identities() {
    let v = json(&[
        "glue",
        &data("triangle.complex"),
        &data("triangle.complex"),
        "--face1",
        "u,v",
        "--face2",
        "v w",
    ]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["ell"], 2);
    assert_eq!(v["td_glued"], 0);
    let (code, _, err) = run(&[
        "glue",
        &data("two_edges.complex"),
        &data("path.complex"),
        "--face1",
        "x",
        "--face2",
        "a",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("precondition"), "{err}");
    let v = json(&[
        "glue",
        &data("two_edges.complex"),
        &data("path.complex"),
        "--face1",
        "x",
        "--face2",
        "a",
        "--allow-non-cm",
    ]);
    assert_eq!(v["type_identity_holds"], false);
}

#[test]
fn bounds_for_s_two() {
    let v = json(&["bounds", "--s", "2", "--c", "4"]);
    let got: Vec<&str> = v["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["bound"].as_str().unwrap())
        .collect();
    assert_eq!(got, ["10", "20", "15", "4"]);
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.complex");
    std::fs::write(&path, "vertices: a b\nfacet: a c\n").unwrap();
    let (code, _, err) = run(&["td", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 10"), "{err}");
    assert!(err.contains("unknown label `c`"), "{err}");
}

#[test]
fn usage_errors_exit_two_and_list_flags() {
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("--field") && err.contains("--jobs"), "{err}");
    let (code, _, err) = run(&["--field", "gf4", "td", &data("tree.complex")]);
    assert_eq!(code, 2);
    assert!(err.contains("gf4") || err.contains("prime"), "{err}");
    let (code, _, err) = run(&["sweep", "--suite", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("chordal-td"), "{err}");
}

#[test]
fn sweeps_are_reproducible_and_write_no_reproducers_when_passing() {
    let dir = tempfile::tempdir().unwrap();
    let repro = dir.path().join("repro");
    let args = [
        "sweep",
        "--suite",
        "td-cm",
        "--max-vertices",
        "4",
        "--seed",
        "7",
        "--jobs",
        "2",
        "--reproducer-dir",
        repro.to_str().unwrap(),
    ];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
    assert_eq!(a["version"], 1);
    assert_eq!(std::fs::read_dir(&repro).unwrap().count(), 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_typedefect");
    let ok = Command::new(bin)
        .args(["td", &data("tree.complex")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("td = 0"));
    let bad = Command::new(bin).args(["td", "--nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
