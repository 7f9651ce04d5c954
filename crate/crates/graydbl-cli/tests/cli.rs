//! End-to-end tests of the `graydbl` binary: exit codes, report formats and
//! file-based inputs.

use std::path::Path;
use std::process::{Command, Output};

use graydbl::dbl::{zoo, ObjId};
use graydbl::monoid::discrete_monoid_data;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graydbl"))
        .args(args)
        .env_remove("GRAYDBL_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_json(path: &Path, value: &impl serde::Serialize) {
    std::fs::write(path, serde_json::to_string_pretty(value).unwrap()).unwrap();
}

#[test]
fn validate_prints_generator_counts() {
    let out = run(&["validate", "zoo:G"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("objects=4"), "{text}");
    assert!(text.contains("squares=9"), "{text}");
}

#[test]
fn adjunction_check_counts_agree() {
    let out = run(&["tensor", "adjunction-check", "zoo:G", "zoo:G", "zoo:arrowH"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cones=6 functors=6"), "{text}");
}

#[test]
fn broken_unit_monoid_exits_one_naming_condition_ii() {
    let dir = tempfile::tempdir().unwrap();
    let mut m = discrete_monoid_data(&zoo::cyclic_table(2), 0);
    m.unit = ObjId(1);
    let path = dir.path().join("broken-unit.json");
    write_json(&path, &m);
    let out = run(&["monoid", "check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("(ii)"), "{}", stdout(&out));
}

#[test]
fn valid_monoid_file_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("xor.json");
    write_json(&path, &discrete_monoid_data(&zoo::cyclic_table(2), 0));
    let out = run(&["monoid", "check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn double_category_files_load_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("generator.json");
    write_json(&path, &zoo::generator());
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("squares=9"));
}

#[test]
fn unknown_fixture_is_a_usage_error() {
    let out = run(&["validate", "zoo:nonsense"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exhausted_budget_exits_two() {
    let out = run(&["--budget", "10", "functors", "zoo:G", "zoo:G"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_overrides_the_budget() {
    let out = Command::new(env!("CARGO_BIN_EXE_graydbl"))
        .args(["functors", "zoo:G", "zoo:G"])
        .env("GRAYDBL_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_sets_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graydbl.toml");
    std::fs::write(&path, "budget = 10\n").unwrap();
    let out = run(&["--config", path.to_str().unwrap(), "functors", "zoo:G", "zoo:G"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shallow_depth_reports_unbounded() {
    let out = run(&["--depth", "1", "tensor", "realize", "zoo:arrowH", "zoo:arrowH"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("unbounded"), "{}", stdout(&out));
}

#[test]
fn json_report_carries_the_schema_version() {
    let out = run(&["--json", "validate", "zoo:1"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["ok"], true);
    assert_eq!(report["checks"][0]["ok"], true);
}

#[test]
fn json_report_is_deterministic() {
    let a = stdout(&run(&["--json", "hom", "zoo:arrowH", "zoo:arrowH"]));
    let b = stdout(&run(&["--json", "hom", "zoo:arrowH", "zoo:arrowH"]));
    assert_eq!(a, b);
}

#[test]
fn suite_runs_checks_in_config_order() {
    let dir = tempfile::tempdir().unwrap();
    let monoid_path = dir.path().join("xor.json");
    write_json(&monoid_path, &discrete_monoid_data(&zoo::cyclic_table(2), 0));
    let config = serde_json::json!({
        "budget": 100_000_000u64,
        "depth": 3,
        "format": "text",
        "checks": [
            {"name": "first", "args": ["validate", "zoo:G"]},
            {"name": "second", "args": ["tensor", "adjunction-check", "zoo:1", "zoo:G", "zoo:arrowH"]},
            {"name": "third", "args": ["monoid", "check", monoid_path.to_str().unwrap()]},
        ]
    });
    let path = dir.path().join("suite.json");
    write_json(&path, &config);
    let out = run(&["suite", "run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (p1, p2, p3) = (
        text.find("first:").unwrap(),
        text.find("second:").unwrap(),
        text.find("third:").unwrap(),
    );
    assert!(p1 < p2 && p2 < p3, "{text}");
}

#[test]
fn suite_with_a_failing_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let mut m = discrete_monoid_data(&zoo::cyclic_table(2), 0);
    m.unit = ObjId(1);
    let monoid_path = dir.path().join("broken.json");
    write_json(&monoid_path, &m);
    let config = serde_json::json!({
        "checks": [
            {"name": "good", "args": ["validate", "zoo:1"]},
            {"name": "bad", "args": ["monoid", "check", monoid_path.to_str().unwrap()]},
        ]
    });
    let path = dir.path().join("suite.json");
    write_json(&path, &config);
    let out = run(&["suite", "run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("ok   good:"), "{text}");
    assert!(text.contains("FAIL bad:"), "{text}");
}

#[test]
fn products_parse_in_zoo_names() {
    let out = run(&["validate", "zoo:arrowH*arrowV"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("objects=4"));
}

#[test]
fn missing_arguments_are_usage_errors() {
    let out = run(&["functors", "zoo:G"]);
    assert_eq!(out.status.code(), Some(3));
}
