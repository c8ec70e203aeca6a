use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rooted_cubes::Family;
use rooted_cubes_cli::analyze;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rooted-cubes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn analyze_f3() {
    let out = run(&["analyze", fixture("f3.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["simply_rooted"], true);
    assert_eq!(v["homology"]["acyclic"], true);
    assert_eq!(v["cube_counts"], serde_json::json!([5, 5, 1, 0]));
    assert_eq!(v["homology"]["euler"], 1);
}

#[test]
fn analyze_f1() {
    let out = run(&["analyze", fixture("f1.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["simply_rooted"], false);
    assert_eq!(v["homology"]["betti"], serde_json::json!([1, 1, 0, 0]));
    assert!(v["roots"].is_null());
}

#[test]
fn analyze_single_point() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "point.json", r#"{"n":1,"sets":[[]]}"#);
    let v = json(&run(&["analyze", &path]));
    assert_eq!(v["homology"]["acyclic"], true);
    assert_eq!(v["cube_counts"], serde_json::json!([1, 0]));
}

#[test]
fn analyze_matches_library() {
    for name in ["f1.json", "f2.json", "f3.json"] {
        let path = fixture(name);
        let out = run(&["analyze", path.to_str().unwrap()]);
        let family = Family::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
        let direct = serde_json::to_value(analyze(&family).unwrap()).unwrap();
        assert_eq!(json(&out), direct, "{name}");
    }
}

#[test]
fn analyze_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("syntax.json", "{\"n\":3,"),
        ("dup.json", r#"{"n":2,"sets":[[1],[1]]}"#),
        ("range.json", r#"{"n":2,"sets":[[3]]}"#),
        ("big.json", r#"{"n":21,"sets":[]}"#),
    ] {
        let out = run(&["analyze", &write_temp(&dir, name, text)]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(out.stdout.is_empty(), "{name}");
        assert!(!out.stderr.is_empty(), "{name}");
    }
    assert_eq!(run(&["analyze", "/nonexistent/family.json"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "theorem1", "--n", "3"]).status.code(), Some(0));
    let duality = run(&["verify", "duality", "--n", "3"]);
    assert_eq!(duality.status.code(), Some(0));
    assert_eq!(json(&duality)["tested"], 256);
    assert_eq!(run(&["verify", "theorem1", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-check", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "theorem1"]).status.code(), Some(2));
}

#[test]
fn verify_all_emits_every_report() {
    let out = run(&["verify", "all", "--n", "3", "--samples", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let checks: Vec<String> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<Value>(l).unwrap()["check"]
                .as_str()
                .unwrap()
                .to_owned()
        })
        .collect();
    assert_eq!(checks.len(), 11);
    assert_eq!(checks[0], "theorem1");
    assert_eq!(checks[8], "decomposition");
}

#[test]
fn export_obj_counts() {
    let dir = tempfile::tempdir().unwrap();
    let count = |text: &str, prefix: &str| text.lines().filter(|l| l.starts_with(prefix)).count();

    let out = dir.path().join("f3.obj");
    let status = run(&[
        "export-obj",
        fixture("f3.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let obj = fs::read_to_string(&out).unwrap();
    assert_eq!((count(&obj, "v "), count(&obj, "l "), count(&obj, "f ")), (5, 5, 1));

    let point = write_temp(&dir, "point.json", r#"{"n":2,"sets":[[]]}"#);
    let out = dir.path().join("point.obj");
    run(&["export-obj", &point, "--out", out.to_str().unwrap()]);
    let obj = fs::read_to_string(&out).unwrap();
    assert_eq!((count(&obj, "v "), count(&obj, "l "), count(&obj, "f ")), (1, 0, 0));

    let cube = write_temp(
        &dir,
        "cube.json",
        r#"{"n":3,"sets":[[],[1],[2],[3],[1,2],[1,3],[2,3],[1,2,3]]}"#,
    );
    let out = dir.path().join("cube.obj");
    run(&["export-obj", &cube, "--out", out.to_str().unwrap()]);
    let obj = fs::read_to_string(&out).unwrap();
    assert_eq!((count(&obj, "v "), count(&obj, "l ")), (8, 12));
    // Six squares plus the six faces of the solid cube's group.
    assert_eq!(count(&obj, "f "), 12);
    assert_eq!(count(&obj, "g "), 1);
}

#[test]
fn export_obj_rejects_large_n() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "n4.json", r#"{"n":4,"sets":[[]]}"#);
    let out = dir.path().join("n4.obj");
    assert_eq!(
        run(&["export-obj", &path, "--out", out.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert!(!out.exists());
}

#[test]
fn output_is_deterministic() {
    let f3 = fixture("f3.json");
    let first = run(&["analyze", f3.to_str().unwrap()]).stdout;
    assert_eq!(first, run(&["analyze", f3.to_str().unwrap()]).stdout);

    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.obj"), dir.path().join("b.obj"));
    run(&["export-obj", f3.to_str().unwrap(), "--out", a.to_str().unwrap()]);
    run(&["export-obj", f3.to_str().unwrap(), "--out", b.to_str().unwrap()]);
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());

    // Reports carry wall-clock time; everything else must match exactly.
    let strip = |out: Output| {
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["verify", "chain-complex", "--n", "5", "--samples", "40", "--seed", "7"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
}
