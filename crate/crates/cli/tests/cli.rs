use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn drlattice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drlattice"))
        .args(args)
        .env_remove("DRLATTICE_MAX_VERTICES")
        .env_remove("DRLATTICE_MAX_VERIFY_VERTICES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json_of(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = drlattice(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "schemas", &format!("{name}.schema.json")]
        .iter()
        .collect();
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    jsonschema::validator_for(&serde_json::from_str(&text).expect("schema is JSON")).expect("schema compiles")
}

fn assert_valid(name: &str, value: &Value) {
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(value).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name}: {errors:#?}");
}

const FAMILIES: [&[&str]; 4] = [
    &["--family", "johnson", "--n", "5", "--k", "2"],
    &["--family", "hamming", "--n", "3"],
    &["--family", "grassmann", "--n", "4", "--k", "2", "--q", "2"],
    &["--family", "johnson", "--n", "4", "--k", "1"],
];

fn with<'a>(cmd: &'a str, family: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(family);
    v
}

#[test]
fn every_json_output_matches_its_schema() {
    for family in FAMILIES {
        assert_valid("lattice", &json_of(&with("build", family)));
        assert_valid("spectral", &json_of(&with("eigen", family)));
        assert_valid("frame", &json_of(&with("frame", family)));
        assert_valid("norton", &json_of(&with("norton", family)));
        assert_valid("verify", &json_of(&with("verify", family)));
    }
}

#[test]
fn schemas_reject_malformed_reports() {
    let mut table = json_of(&["eigen", "--family", "hamming", "--n", "2"]);
    table["rows"][0]["theta"] = Value::from(2);
    assert!(!schema("spectral").is_valid(&table));

    let mut table = json_of(&["eigen", "--family", "hamming", "--n", "2"]);
    table["rows"][0]["mu"] = Value::from("4/1x");
    assert!(!schema("spectral").is_valid(&table));

    let mut report = json_of(&["norton", "--family", "hamming", "--n", "2"]);
    report["extra"] = Value::from(true);
    assert!(!schema("norton").is_valid(&report));

    let mut report = json_of(&["frame", "--family", "hamming", "--n", "2"]);
    report["family"] = Value::from("petersen");
    assert!(!schema("frame").is_valid(&report));
}

#[test]
fn battery_report_matches_schema_and_skips_the_large_instance() {
    let report = json_of(&["verify", "--all"]);
    assert_valid("verify", &report);
    assert_eq!(report["passed"], true);
    assert_eq!(report["checks_failed"], 0);
    let instances = report["instances"].as_array().unwrap();
    assert_eq!(instances.len(), 11);
    let skipped: Vec<&Value> = instances.iter().filter(|i| i["status"] == "skipped").collect();
    assert_eq!(skipped.len(), 1);
    assert_eq!(skipped[0]["label"], "J_2(6,2)");
    assert!(skipped[0]["skipped_reason"].as_str().unwrap().contains("651"));
}

#[test]
fn eigen_tables_for_worked_examples() {
    let col = |v: &Value, key: &str| -> Vec<String> {
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| match &r[key] {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect()
    };
    let j52 = json_of(&["eigen", "--family", "johnson", "--n", "5", "--k", "2"]);
    assert_eq!(col(&j52, "theta"), ["6", "1", "-2"]);
    assert_eq!(col(&j52, "dim"), ["1", "4", "5"]);
    assert_eq!(col(&j52, "mu")[1], "3");

    let h4 = json_of(&["eigen", "--family", "hamming", "--n", "4"]);
    assert_eq!(col(&h4, "theta"), ["4", "2", "0", "-2", "-4"]);

    let g = json_of(&["eigen", "--family", "grassmann", "--n", "4", "--k", "2", "--q", "2"]);
    assert_eq!(col(&g, "theta"), ["18", "3", "-3"]);
    assert_eq!(col(&g, "mu")[1], "6");
}

#[test]
fn norton_summaries() {
    let md = |args: &[&str]| {
        let mut all = vec!["norton"];
        all.extend_from_slice(args);
        all.extend(["--format", "md"]);
        let out = drlattice(&all);
        assert!(out.status.success());
        stdout(&out)
    };
    assert!(md(&["--family", "hamming", "--n", "3"]).contains("all products zero; verified 36/36 pairs"));
    assert!(md(&["--family", "johnson", "--n", "5", "--k", "2"]).contains("diag 1/5; offdiag -1/15; verified 25/25 pairs"));
    assert!(md(&["--family", "grassmann", "--n", "4", "--k", "2", "--q", "2"]).contains("diag 3/5; offdiag (-1/5, 1/6)"));
}

#[test]
fn build_reports_level_sizes_when_writing_a_file() {
    let dir = std::env::temp_dir().join(format!("drlattice-build-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lattice.json");
    let out = drlattice(&["build", "--family", "johnson", "--n", "4", "--k", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "level sizes [1, 4, 6, 1]");
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid("lattice", &written);
    assert_eq!(written["level_sizes"], serde_json::json!([1, 4, 6, 1]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn frame_single_level() {
    let v = json_of(&["frame", "--family", "johnson", "--n", "5", "--k", "2", "--j", "1"]);
    let frames = v["frames"].as_array().unwrap();
    assert_eq!(frames.len(), 1);
    assert_eq!(frames[0]["mu"], "3");
    assert_eq!(frames[0]["mu_closed_form"], "3");
    assert_eq!(frames[0]["frame_size"], 5);
}

#[test]
fn csv_and_markdown_outputs() {
    let csv = stdout(&drlattice(&["eigen", "--family", "hamming", "--n", "2", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("j,theta,dim,mu,c,alpha,beta,a_up,a_down,nu"));
    assert_eq!(lines.count(), 3);

    let md = stdout(&drlattice(&["verify", "--family", "johnson", "--n", "5", "--k", "2", "--format", "md"]));
    assert!(md.contains("checks passed, 0 failed"));
    assert!(md.contains("| norton.closed_forms | pass |"));
}

#[test]
fn piped_output_defaults_to_json() {
    let out = drlattice(&["eigen", "--family", "hamming", "--n", "2"]);
    assert!(out.status.success());
    serde_json::from_slice::<Value>(&out.stdout).expect("JSON when stdout is not a terminal");
}

#[test]
fn exit_code_zero_on_success() {
    assert_eq!(drlattice(&["verify", "--family", "johnson", "--n", "5", "--k", "2"]).status.code(), Some(0));
}

#[test]
fn exit_code_two_on_bad_parameters() {
    let rejected = drlattice(&["verify", "--family", "johnson", "--n", "3", "--k", "2"]);
    assert_eq!(rejected.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&rejected.stderr).contains("error"));
    for args in [
        &["eigen", "--family", "grassmann", "--n", "4", "--k", "2", "--q", "4"][..],
        &["eigen", "--family", "johnson", "--n", "5"],
        &["eigen", "--n", "5", "--k", "2"],
        &["eigen", "--family", "petersen", "--n", "5"],
        &["frame", "--family", "johnson", "--n", "5", "--k", "2", "--j", "3"],
        &["verify", "--all", "--family", "hamming"],
    ] {
        assert_eq!(drlattice(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exit_code_three_on_size_cap() {
    assert_eq!(drlattice(&["build", "--family", "hamming", "--n", "20"]).status.code(), Some(3));
    assert_eq!(
        drlattice(&["eigen", "--family", "hamming", "--n", "6", "--max-vertices", "50"]).status.code(),
        Some(3)
    );
    let env_cap = Command::new(env!("CARGO_BIN_EXE_drlattice"))
        .args(["build", "--family", "hamming", "--n", "6"])
        .env("DRLATTICE_MAX_VERTICES", "10")
        .output()
        .unwrap();
    assert_eq!(env_cap.status.code(), Some(3));
    let verify_cap = drlattice(&["verify", "--family", "johnson", "--n", "7", "--k", "3", "--max-verify-vertices", "20"]);
    assert_eq!(verify_cap.status.code(), Some(3));
}
