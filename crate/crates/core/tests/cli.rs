//! End-to-end runs of the `gtwist` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn gtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtwist")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn examples() -> TempDir {
    let dir = TempDir::new().unwrap();
    let o = gtwist(&["examples", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    dir
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

#[test]
fn examples_writes_every_fixture() {
    let dir = examples();
    let mut names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(
        names,
        ["example_1.gpd", "example_1.map", "example_2.gpd", "example_2.map", "z3_twist.cspec", "z3_twist.gpd", "z3_twist.map"]
    );
    assert_eq!(fs::read_to_string(dir.path().join("example_2.gpd")).unwrap(), "2\n1 1\n0 0\n");
}

#[test]
fn check_reports_example_facts() {
    let dir = examples();
    let one = gtwist(&["check", &p(dir.path(), "example_1.gpd"), "--map", &p(dir.path(), "example_1.map")]);
    assert_eq!(one.status.code(), Some(0));
    let text = stdout(&one);
    assert!(text.contains("AUT²={identity}"), "{text}");
    assert!(text.contains("α∉LT"), "{text}");
    let two = gtwist(&["check", &p(dir.path(), "example_2.gpd"), "--map", &p(dir.path(), "example_2.map")]);
    let text = stdout(&two);
    assert!(text.contains("α∈AUT²"), "{text}");
    assert!(text.contains("α∉LT"), "{text}");
}

#[test]
fn check_json_is_stable() {
    let dir = examples();
    let args = ["check", &p(dir.path(), "z3_twist.gpd"), "--format", "json"];
    let first = stdout(&gtwist(&args));
    assert_eq!(first, stdout(&gtwist(&args)));
    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value["completely_inverse"], true);
    assert_eq!(value["format"], "groupoid-twist/check/1");
}

#[test]
fn trivial_table_passes_every_predicate() {
    let dir = TempDir::new().unwrap();
    let path = p(dir.path(), "one.gpd");
    fs::write(&path, "1\n0\n").unwrap();
    let text = stdout(&gtwist(&["check", &path]));
    assert!(!text.contains("false"), "{text}");
}

#[test]
fn decide_exit_codes() {
    let dir = examples();
    assert_eq!(gtwist(&["decide", &p(dir.path(), "z3_twist.gpd")]).status.code(), Some(0));
    assert_eq!(gtwist(&["decide", &p(dir.path(), "example_1.gpd")]).status.code(), Some(1));
    let bad = p(dir.path(), "bad.gpd");
    fs::write(&bad, "2\n0 1\n1 x\n").unwrap();
    let o = gtwist(&["decide", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn decide_json_names_the_witness() {
    let dir = examples();
    let o = gtwist(&["decide", &p(dir.path(), "z3_twist.gpd"), "--format", "json"]);
    let value: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(value["determined"], true);
    assert_eq!(value["witness"]["alpha"], serde_json::json!([0, 2, 1]));
}

#[test]
fn build_decompose_build_is_byte_identical() {
    let dir = examples();
    let first = p(dir.path(), "first");
    assert!(gtwist(&["build", &p(dir.path(), "z3_twist.cspec"), "--out", &first]).status.success());
    assert_eq!(fs::read(format!("{first}.gpd")).unwrap(), fs::read(dir.path().join("z3_twist.gpd")).unwrap());
    let cspec = p(dir.path(), "round.cspec");
    let o = gtwist(&["decompose", &format!("{first}.gpd"), "--map", &format!("{first}.map"), "--out", &cspec]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(fs::read(&cspec).unwrap(), fs::read(dir.path().join("z3_twist.cspec")).unwrap());
    let second = p(dir.path(), "second");
    assert!(gtwist(&["build", &cspec, "--out", &second]).status.success());
    assert_eq!(fs::read(format!("{first}.gpd")).unwrap(), fs::read(format!("{second}.gpd")).unwrap());
    assert_eq!(fs::read(format!("{first}.map")).unwrap(), fs::read(format!("{second}.map")).unwrap());
}

#[test]
fn decompose_finds_alpha_when_omitted() {
    let dir = examples();
    let o = gtwist(&["decompose", &p(dir.path(), "z3_twist.gpd")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), fs::read_to_string(dir.path().join("z3_twist.cspec")).unwrap());
}

#[test]
fn decompose_refuses_undetermined_tables() {
    let dir = examples();
    assert_eq!(gtwist(&["decompose", &p(dir.path(), "example_1.gpd")]).status.code(), Some(1));
    let wrong = gtwist(&["decompose", &p(dir.path(), "z3_twist.gpd"), "--map", &p(dir.path(), "example_1.map")]);
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn build_rejects_invalid_specs() {
    let dir = TempDir::new().unwrap();
    let path = p(dir.path(), "bad.cspec");
    // δ = [1, 0] does not send the identity to the identity
    fs::write(&path, "semilattice 2\n0 0\n0 1\ngroup 0 2\n0 1\n1 0\nalpha 0\n0 1\ngroup 1 2\n0 1\n1 0\nalpha 1\n0 1\nhom 1 0\n1 0\n").unwrap();
    let o = gtwist(&["build", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid construction data"), "{}", stderr(&o));
}

#[test]
fn sweep_reports_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let run = |jobs: &str, name: &str| {
        let out = p(dir.path(), name);
        let o = gtwist(&[
            "sweep", "--max-order", "2", "--samples", "500", "--spec-max-semilattice", "2", "--spec-max-group", "3",
            "--jobs", jobs, "--format", "json", "--out", &out,
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        fs::read_to_string(out).unwrap()
    };
    let one = run("1", "a.json");
    assert_eq!(one, run("2", "b.json"));
    assert_eq!(one, run("8", "c.json"));
    let value: serde_json::Value = serde_json::from_str(&one).unwrap();
    assert_eq!(value["passed"], true);
    assert_eq!(value["instances"]["sampled"], 500);
}

#[test]
fn sweep_suite_selection_and_limits() {
    let o = gtwist(&["sweep", "--suite", "goldens"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("example_one_facts: checked 3, held 1, vacuous 2, failed 0"));
    assert_eq!(gtwist(&["sweep", "--max-order", "4"]).status.code(), Some(2));
    assert_eq!(gtwist(&["sweep", "--spec-max-group", "5"]).status.code(), Some(2));
}
