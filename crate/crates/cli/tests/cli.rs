use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2-blocks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn blocks_p5_zero() {
    let v = json(&["blocks", "--p", "5", "--chi", "zero"]);
    let omegas: Vec<u64> = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["omega"].as_u64().unwrap())
        .collect();
    let dims: Vec<u64> = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(omegas, [0, 1, 2]);
    assert_eq!(dims, [25, 50, 50]);
    assert_eq!(v["chi"], "zero");
    assert_eq!(v["a"], Value::Null);
}

#[test]
fn blocks_regular_p3() {
    let v = json(&["blocks", "--p", "3", "--chi", "regular", "--a", "1"]);
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 3);
    assert!(blocks.iter().all(|b| b["dim"] == 9 && b["coinvariant_dim"] == 1));
    // extension elements print as coefficient vectors of length p
    assert!(blocks
        .iter()
        .all(|b| b["alpha"].as_str().unwrap().matches(',').count() == 2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["blocks", "--p", "4"][..],
        &["blocks", "--p", "17"],
        &["blocks"],
        &["blocks", "--p", "5", "--max-p", "7"],
        &["blocks", "--p", "7", "--chi", "regular"],
        &["blocks", "--p", "5", "--chi", "regular", "--a", "5"],
        &["blocks", "--p", "5", "--a", "1"],
        &["blocks", "--p", "5", "--chi", "one"],
        &["filtration", "--p", "5", "--omega", "3"],
        &["filtration", "--p", "5", "--alpha", "2"],
        &["filtration", "--p", "3", "--chi", "regular", "--omega", "0"],
        &["verify", "--p", "5", "--jobs", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn pushforward_markdown_row() {
    let out = run(&[
        "filtration",
        "--p",
        "5",
        "--chi",
        "zero",
        "--omega",
        "1",
        "--kind",
        "pf",
        "--format",
        "md",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| omega=1 | 1 | 4 | 10 | 20 | 34 | 49 | 50 |"), "{text}");
}

#[test]
fn intersection_markdown_row() {
    let out = run(&[
        "filtration",
        "--p",
        "5",
        "--chi",
        "zero",
        "--omega",
        "0",
        "--kind",
        "int",
        "--format",
        "md",
    ]);
    let text = stdout(&out);
    assert!(
        text.contains("| omega=0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 0 | 9 | 16 | 21 | 24 | 25 |"),
        "{text}"
    );
}

#[test]
fn shifted_equals_pushforward_on_trivial_coinvariants() {
    let sh = json(&["filtration", "--p", "5", "--omega", "0", "--kind", "sh"]);
    let pf = json(&["filtration", "--p", "5", "--omega", "0", "--kind", "pf"]);
    assert_eq!(sh["tables"][0]["cumulative"], pf["tables"][0]["cumulative"]);
    assert_eq!(sh["tables"][0]["graded"], pf["tables"][0]["graded"]);
}

#[test]
fn alpha_selector_matches_omega_selector() {
    // ω = 2 has α = 4 at p = 5
    let by_alpha = json(&["filtration", "--p", "5", "--alpha", "4", "--kind", "int"]);
    let by_omega = json(&["filtration", "--p", "5", "--omega", "2", "--kind", "int"]);
    assert_eq!(by_alpha, by_omega);
    let v = json(&["blocks", "--p", "3", "--chi", "regular", "--a", "1"]);
    let alpha = v["blocks"][1]["alpha"].as_str().unwrap().to_string();
    let spaced = alpha.replace(',', ", ");
    let f = json(&[
        "filtration",
        "--p",
        "3",
        "--chi",
        "regular",
        "--a",
        "1",
        "--alpha",
        &spaced,
    ]);
    assert_eq!(f["tables"].as_array().unwrap().len(), 3);
    assert_eq!(f["tables"][0]["block"], format!("alpha={alpha}"));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--p", "5", "--chi", "zero"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v[0]["checks"].as_array().unwrap();
    assert!(checks.len() > 40);
    assert!(checks.iter().all(|c| c["pass"] == true));
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    for name in [
        "duality.gram_rank",
        "ideal.dim.omega=1",
        "adjoint.tally.omega=2",
        "reference.int.omega=1",
    ] {
        assert!(names.contains(&name), "{name}");
    }
}

#[test]
fn verify_regular_passes() {
    let out = run(&["verify", "--p", "3", "--chi", "regular"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn corrupted_idempotent_fails() {
    let out = run(&["verify", "--p", "3", "--chi", "zero", "--corrupt-idempotent"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("idempotents.square"), "{err}");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failing = v[0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .count();
    assert!(failing > 0);
}

#[test]
fn output_independent_of_thread_count() {
    let a = run(&["verify", "--max-p", "5", "--chi", "zero,e,regular", "--jobs", "1"]);
    let b = run(&["verify", "--max-p", "5", "--chi", "regular,e,zero", "--jobs", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn range_clips_regular_jobs() {
    let v = json(&["blocks", "--max-p", "7", "--chi", "regular", "--a", "4"]);
    let ps: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["p"].as_u64().unwrap()).collect();
    assert_eq!(ps, [5]);
}

#[test]
fn csv_long_format() {
    let out = run(&[
        "filtration",
        "--p",
        "3",
        "--omega",
        "1",
        "--kind",
        "pf",
        "--format",
        "csv",
    ]);
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        &headers,
        vec!["p", "chi", "a", "record", "name", "i", "value", "expected", "source", "pass"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let cumulative: Vec<&str> = rows
        .iter()
        .filter(|r| &r[3] == "pf.cumulative")
        .map(|r| &r[6])
        .collect();
    assert_eq!(cumulative, ["1", "4", "10", "17", "18", "18", "18"]);
    // list-valued cells are quoted
    let blocks = run(&["blocks", "--p", "3", "--format", "csv"]);
    assert!(stdout(&blocks).contains(",check,blocks.dims,,\"[9,18]\",\"[9,18]\",formula,true"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("sl2-blocks-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("blocks.json");
    let out = run(&["blocks", "--p", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["p"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_matches_schema() {
    let schema: Value = serde_json::from_str(include_str!("../../../docs/report.schema.json")).expect("schema parses");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    for args in [
        &["verify", "--p", "5", "--chi", "zero,e"][..],
        &["blocks", "--p", "3", "--chi", "regular", "--a", "2"],
        &["filtration", "--p", "7", "--omega", "3"],
    ] {
        let v = json(args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}
