use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(p).unwrap()
}

fn torslat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torslat"))
        .args(args)
        .env_remove("TORSLAT_THREADS")
        .output()
        .unwrap()
}

fn run_file(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    torslat(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_tail(o: &Output) -> serde_json::Value {
    let s = stdout(o);
    let start = s.find("\n{").map_or(0, |i| i + 1);
    serde_json::from_str(&s[start..]).unwrap()
}

#[test]
fn goldens_are_byte_stable() {
    for (cmd, file, extra, gold) in [
        ("build-tors", "a2.json", vec![], "a2.out"),
        (
            "quotient",
            "a2.json",
            vec!["--ideal", "0"],
            "a2_quotient.out",
        ),
        ("build-tors", "a3.json", vec![], "a3.out"),
    ] {
        let first = run_file(cmd, file, &extra);
        assert_eq!(first.status.code(), Some(0), "{cmd} {file}");
        assert_eq!(stdout(&first), golden(gold), "{cmd} {file}");
        assert_eq!(stdout(&run_file(cmd, file, &extra)), stdout(&first));
    }
}

#[test]
fn a2_summary() {
    let out = run_file("build-tors", "a2.json", &[]);
    let j = json_tail(&out);
    assert_eq!(j["torsion_classes"], 5);
    assert_eq!(j["semidistributive"], true);
    assert_eq!(j["covers"].as_array().unwrap().len(), 5);
    assert_eq!(stdout(&out).matches("label=\"[").count(), 5);
}

#[test]
fn quotient_reports_one_collapsed_fiber() {
    let j = json_tail(&run_file("quotient", "a2.json", &["--ideal", "0"]));
    assert_eq!(j["target"]["torsion_classes"], 4);
    assert_eq!(j["collapsed_fibers"], 1);
    assert_eq!(j["fibers"][0], serde_json::json!(["<[01]>", "<[11],[01]>"]));
    assert_eq!(j["label_preservation"], true);
}

#[test]
fn quotient_rejects_bad_ideals() {
    for ideal in ["7", "x", "0,0", "0,2"] {
        let out = run_file("quotient", "a3.json", &["--ideal", ideal]);
        assert_eq!(out.status.code(), Some(2), "--ideal {ideal}");
    }
    let radical = run_file("quotient", "a3_rad2.json", &["--ideal", "1,0"]);
    assert_eq!(
        radical.status.code(),
        Some(2),
        "duplicate of an existing relation"
    );
}

#[test]
fn parse_errors_exit_two() {
    let bad = run_file("build-rel", "reflexive_pair.json", &[]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("diagonal"));
    let broken = run_file("build-rel", "broken.json", &[]);
    assert_eq!(broken.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&broken.stderr).contains("broken.json:3:1"));
    assert_eq!(run_file("check", "seven.json", &[]).status.code(), Some(2));
    assert_eq!(
        torslat(&["build-tors", "/nonexistent.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn check_exit_codes() {
    let ok = run_file("check", "a3_rad2.json", &[]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json_tail(&ok)["passed"], true);
    let rel = run_file("check", "a2_rel.json", &[]);
    assert_eq!(rel.status.code(), Some(0));
    let bad = run_file("check", "derangement.json", &[]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("violation: factorizable"));
}

#[test]
fn build_rel_verdicts() {
    let dual = json_tail(&run_file("build-rel", "a2_rel.json", &[]));
    assert_eq!(dual["factorizable"], true);
    assert_eq!(dual["torsion_classes"], 5);
    let literal = json_tail(&run_file("build-rel", "a2_rel.json", &["--literal-mono"]));
    assert_eq!(literal["factorizable"], false);
    assert_eq!(literal["factorization_failure"]["kind"], "unfactored");
    let m3 = json_tail(&run_file("build-rel", "derangement.json", &[]));
    assert_eq!(m3["torsion_classes"], 5);
    assert_eq!(m3["semidistributive"], false);
}

#[test]
fn tables() {
    let labels = stdout(&run_file("labels", "a2.json", &[]));
    assert_eq!(labels.lines().count(), 6);
    assert!(labels.contains("<[01]>\t<[11],[01]>\t[11]\n"));
    let kappa = stdout(&run_file("kappa", "a2_rel.json", &[]));
    assert!(kappa.contains("[10]\t<[10]>\t<[11],[01]>\n"));
    // brick labels exist on M3, but kappa needs semidistributivity
    assert_eq!(
        stdout(&run_file("labels", "derangement.json", &[]))
            .lines()
            .count(),
        7
    );
    assert_eq!(
        run_file("kappa", "derangement.json", &[]).status.code(),
        Some(1)
    );
}

#[test]
fn output_files() {
    let dir = std::env::temp_dir().join(format!("torslat-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let (dot, json, bricks) = (
        dir.join("a.dot"),
        dir.join("a.json"),
        dir.join("bricks.txt"),
    );
    let out = run_file(
        "build-tors",
        "a3.json",
        &[
            "--dot",
            dot.to_str().unwrap(),
            "--json",
            json.to_str().unwrap(),
            "--bricks",
            bricks.to_str().unwrap(),
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let combined = fs::read_to_string(&dot).unwrap() + &fs::read_to_string(&json).unwrap();
    assert_eq!(combined, golden("a3.out"));
    assert_eq!(
        fs::read_to_string(&bricks).unwrap(),
        "[001]\n[010]\n[011]\n[100]\n[110]\n[111]\n"
    );
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn realize_outcomes() {
    let seven = run_file("realize", "seven.json", &[]);
    assert_eq!(seven.status.code(), Some(0));
    let j = json_tail(&seven);
    assert_eq!(j["result"], "found");
    assert_eq!(
        j["realization"]["relation"]["labels"]
            .as_array()
            .unwrap()
            .len(),
        4
    );
    let m3 = run_file("realize", "m3.json", &["--max-bricks", "3"]);
    assert_eq!(m3.status.code(), Some(0));
    assert!(stdout(&m3).starts_with("none within budget\n"));
    let markowsky = json_tail(&run_file(
        "realize",
        "m3.json",
        &["--max-bricks", "3", "--unfiltered"],
    ));
    assert_eq!(markowsky["realization"]["factorizable"], false);
}

fn without_elapsed(mut v: serde_json::Value) -> serde_json::Value {
    v.as_object_mut().unwrap().remove("elapsed_seconds");
    v.as_object_mut().unwrap().remove("threads");
    v
}

#[test]
fn sweep_is_independent_of_threads() {
    let one = torslat(&["sweep", "--max-bricks", "3"]);
    assert_eq!(one.status.code(), Some(0));
    let many = Command::new(env!("CARGO_BIN_EXE_torslat"))
        .args(["sweep", "--max-bricks", "3"])
        .env("TORSLAT_THREADS", "4")
        .output()
        .unwrap();
    let a = without_elapsed(json_tail(&one));
    assert_eq!(a, without_elapsed(json_tail(&many)));
    assert_eq!(a["rows"][2]["factorizable"], 25);
    let bad = Command::new(env!("CARGO_BIN_EXE_torslat"))
        .args(["sweep", "--max-bricks", "2"])
        .env("TORSLAT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn census_counts() {
    let j = json_tail(&torslat(&["census", "--max-size", "5"]));
    assert_eq!(j["total"], 10);
    assert_eq!(j["counts"][4], serde_json::json!([5, 5, 4]));
    assert_eq!(
        torslat(&["census", "--max-size", "9"]).status.code(),
        Some(1)
    );
}
