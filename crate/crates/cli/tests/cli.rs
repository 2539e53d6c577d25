use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn helly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_helly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn homology_of_a_hollow_triangle() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"vertices": 3, "facets": [[0,1],[1,2],[0,2]]}"#,
    );
    let out = helly(&["homology", "--complex", s(&x)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["helly_schema"], 1);
    assert_eq!(v["betti"]["ranks"], serde_json::json!([0, 1]));
    let out = helly(&[
        "homology",
        "--complex",
        s(&x),
        "--betti",
        "1",
        "--field",
        "f2",
    ]);
    assert_eq!(json(&out)["rank"], 1);
}

#[test]
fn leray_and_collapse_on_a_hollow_triangle() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"vertices": 3, "facets": [[0,1],[1,2],[0,2]]}"#,
    );
    let v = json(&helly(&["leray", "--complex", s(&x), "-d", "1"]));
    assert_eq!(v["leray"], false);
    assert_eq!(v["methods_agree"], true);
    let v = json(&helly(&["collapse", "--complex", s(&x), "-d", "1"]));
    assert_eq!(v["collapsible"], false);
    assert_eq!(v["exhaustive"], true);
    let v = json(&helly(&[
        "collapse",
        "--complex",
        s(&x),
        "-d",
        "2",
        "--mode",
        "exact",
    ]));
    assert_eq!(v["mode"], "exact_d");
    assert!(!v["steps"].as_array().unwrap().is_empty());
}

#[test]
fn generated_collapsible_complex_verifies() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("gen.json");
    let out = helly(&[
        "generate",
        "complex",
        "--collapsible",
        "-d",
        "2",
        "--vertices",
        "7",
        "--seed",
        "1",
        "--json-out",
        s(&path),
        "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let out = helly(&["verify", "--certificate", s(&path)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], serde_json::json!([true]));
}

#[test]
fn generation_is_deterministic() {
    let a = helly(&[
        "generate", "points", "--dim", "2", "--count", "9", "--seed", "7",
    ]);
    let b = helly(&[
        "generate", "points", "--dim", "2", "--count", "9", "--seed", "7",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["points"].as_array().unwrap().len(), 9);
    let m = json(&helly(&[
        "generate",
        "matroid",
        "--kind",
        "partition",
        "--blocks",
        "3",
        "--seed",
        "2",
    ]));
    assert_eq!(m["kind"], "partition");
    assert_eq!(m["blocks"].as_array().unwrap().len(), 3);
}

#[test]
fn tverberg_center_round_trip_and_tampering() {
    let dir = TempDir::new().unwrap();
    let pts = write(
        &dir,
        "pts.json",
        r#"[[0,0],[4,0],[0,4],[1,1],[3,3],["1/2","7/2"],[2,1]]"#,
    );
    let cert = dir.path().join("cert.json");
    let out = helly(&[
        "tverberg",
        "center",
        "--points",
        s(&pts),
        "-r",
        "2",
        "--json-out",
        s(&cert),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "tverberg_center");
    assert_eq!(v["verified"]["center"], true);
    assert_eq!(v["certificate"]["center"].as_array().unwrap().len(), 3);
    assert_eq!(
        helly(&["tverberg", "verify", "--certificate", s(&cert)])
            .status
            .code(),
        Some(0)
    );

    let mut bad = v.clone();
    bad["certificate"]["labels"] = serde_json::json!([1, 1, 1, 1, 1, 1, 2]);
    let bad_path = write(&dir, "bad.json", &bad.to_string());
    let out = helly(&["verify", "--certificate", s(&bad_path)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tolerant_partition_reports_its_checks() {
    let dir = TempDir::new().unwrap();
    let pts = write(
        &dir,
        "pts.json",
        r#"{"dim": 1, "points": [[0],[1],[2],[3],[4]]}"#,
    );
    let out = helly(&[
        "tverberg",
        "tolerant",
        "--points",
        s(&pts),
        "-r",
        "2",
        "-t",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verified"]["tolerance"], true);
    assert_eq!(v["certificate"]["t"], 1);
}

#[test]
fn theorem_reports_hypothesis_and_witness() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"{"vertices": 3, "facets": [[0,1,2]]}"#);
    let m = write(&dir, "m.json", r#"{"kind": "uniform", "n": 3, "r": 2}"#);
    let out = helly(&[
        "theorem",
        "--which",
        "1.5",
        "--complex",
        s(&x),
        "--matroid",
        s(&m),
        "-d",
        "1",
        "-m",
        "1",
        "-k",
        "2",
        "--constructive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hypothesis"], true);
    assert!(v["counterexample"].is_null());
    assert!(v["witness"].is_object());
    assert!(v["constructive"]["witness"].is_object());

    let bad = write(
        &dir,
        "bad.json",
        r#"{"vertices": 3, "facets": [[0],[1],[2]]}"#,
    );
    let v = json(&helly(&[
        "theorem",
        "--which",
        "1.6",
        "--complex",
        s(&bad),
        "--matroid",
        s(&m),
        "-d",
        "1",
        "-m",
        "1",
        "-k",
        "2",
    ]));
    assert_eq!(v["hypothesis"], false);
    assert!(v["counterexample"].is_object());
}

#[test]
fn nerve_and_colorful_helly() {
    let dir = TempDir::new().unwrap();
    let fam = write(
        &dir,
        "f.json",
        r#"{"dim": 1, "bodies": [{"hull": [[0],[2]]}, {"hull": [[1],[3]]}, {"hull": [[5],[6]]},
            {"halfspace_open": {"normal": [0]}}]}"#,
    );
    let v = json(&helly(&["nerve", "--family", s(&fam)]));
    assert_eq!(v["facets"], serde_json::json!([[0, 1], [2]]));
    assert_eq!(v["empty_vertices"], serde_json::json!([3]));

    let colored = write(
        &dir,
        "c.json",
        r#"{"dim": 1, "bodies": [{"hull": [[0],[4]]}, {"hull": [[1],[5]]}, {"hull": [[2],[6]]}, {"hull": [[3],[7]]}],
            "colors": [1, 2, 1, 2]}"#,
    );
    let out = helly(&[
        "colorful-helly",
        "--family",
        s(&colored),
        "-d",
        "1",
        "-m",
        "1",
        "-k",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["classes"].as_array().unwrap().len(), 1);
}

#[test]
fn matroid_ranks_and_axioms() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "m.json",
        r#"{"kind": "partition", "blocks": [[0,1],[2],[3,4]]}"#,
    );
    let out = helly(&[
        "matroid",
        "--matroid",
        s(&m),
        "--rank",
        "0,1,2",
        "--tolerance",
        "1",
        "--check-axioms",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ranks"][0]["rank"], 3);
    assert_eq!(v["rank"], 4);
    assert_eq!(v["axioms"], "ok");
}

#[test]
fn suites_run_and_reproduce() {
    let a = helly(&[
        "run-suite",
        "tverberg",
        "--seed",
        "5",
        "--budget",
        "2",
        "--quiet",
    ]);
    assert_eq!(a.status.code(), Some(0));
    let dir = TempDir::new().unwrap();
    let (p, q) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&p, &q] {
        let out = helly(&[
            "run-suite",
            "lemmas",
            "--seed",
            "5",
            "--budget",
            "2",
            "--quiet",
            "--json-out",
            s(path),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let strip = |path: &Path| {
        let mut v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
        v["wall_time_ms"] = Value::Null;
        v
    };
    assert_eq!(strip(&p), strip(&q));
    let report = helly(&[
        "run-suite",
        "tverberg",
        "--seed",
        "5",
        "--budget",
        "1",
        "--quiet",
        "--json-out",
        s(&p),
    ]);
    assert_eq!(report.status.code(), Some(0));
    assert_eq!(
        helly(&["verify", "--certificate", s(&p)]).status.code(),
        Some(0)
    );
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(helly(&["run-suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        helly(&["homology", "--complex", "/nonexistent/x.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(helly(&["collapse"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "x.json", r#"{"vertices": 2, "facets": [[5]]}"#);
    assert_eq!(
        helly(&["homology", "--complex", s(&bad)]).status.code(),
        Some(2)
    );
}
