//! End-to-end tests against the built binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ineqforge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_table_reproduces_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "verify-table",
        "--n-max",
        "5",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "exit code must be 0");
    let text = stdout(&out);
    assert!(text.contains("3 3 certified"));
    assert!(text.contains("3 4 witness-refuted"));
    assert!(text.contains("3 1 validated-empirically"));
    assert!(text.contains("5 1 certified"));
    assert!(text.contains("6 1 witness-refuted"));
    let table = read_json(&dir.path().join("table.json"));
    assert_eq!(table["schema"], 1);
    let rows = table["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 30);
    // the (6,1) row records the exact witness tuple
    let row61 = rows
        .iter()
        .find(|r| r["m"] == 6 && r["n"] == 1)
        .expect("(6,1) row");
    assert_eq!(row61["detail"]["tuple"][5], "1/32");
    assert_eq!(row61["detail"]["value"], "33/1025");
}

#[test]
fn certify_known_claims() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();

    let out = run(&["certify", "m3n3", "--out", out_dir]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("m3n3: certified"));

    let out = run(&["certify", "ineq-1", "--out", out_dir]);
    assert!(out.status.success());
    let cert = read_json(&dir.path().join("cert-ineq-1.json"));
    assert_eq!(cert["payload"]["verdict"], "certified");
    let steps = cert["payload"]["steps"].as_array().unwrap();
    let centroid = steps
        .iter()
        .find(|s| s["description"] == "centroid value equals the constant")
        .expect("centroid step");
    assert_eq!(centroid["values"][0]["value"], "27/125");

    let out = run(&["certify", "m2-n7", "--out", out_dir]);
    assert!(out.status.success());

    let out = run(&["certify", "bogus", "--out", out_dir]);
    assert_eq!(out.status.code(), Some(2), "unknown claim exits 2");
}

#[test]
fn explore_writes_samples_regions_and_nested() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "explore",
        "--grid-steps",
        "24",
        "--n-values",
        "3,5,6",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let csv = std::fs::read_to_string(dir.path().join("samples-n6.csv")).unwrap();
    assert!(csv.starts_with("n,x,y,z,value,violating\n"));
    assert_eq!(csv.lines().count(), 1 + 25 * 25);

    let r3 = read_json(&dir.path().join("region-n3.json"));
    assert_eq!(r3["payload"]["violation_count"], 0);
    let r6 = read_json(&dir.path().join("region-n6.json"));
    assert!(r6["payload"]["violation_count"].as_u64().unwrap() > 0);
    assert!(r6["payload"]["min_dist_to_one"].is_string());

    // 3 and 5 are not consecutive: only the 5->6 nested file exists
    assert!(!dir.path().join("nested-3-5.json").exists());
    let nested = read_json(&dir.path().join("nested-5-6.json"));
    assert_eq!(nested["payload"]["count"], 0);
}

#[test]
fn report_merges_artifacts_and_flags_gaps() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();

    // empty workspace: missing-inputs error
    let out = run(&["report", "--out", out_dir]);
    assert_eq!(out.status.code(), Some(2));

    // partial workspace: merges what exists and lists the gaps
    assert!(run(&["verify-table", "--n-max", "2", "--out", out_dir])
        .status
        .success());
    let out = run(&["report", "--out", out_dir]);
    assert!(out.status.success());
    let report = read_json(&dir.path().join("report.json"));
    let gaps = report["payload"]["summary"]["gaps"].as_array().unwrap();
    assert!(!gaps.is_empty());

    // full workspace: 12/12 inequalities certified in the summary
    assert!(run(&["certify", "ineq-all", "--out", out_dir]).status.success());
    assert!(run(&[
        "explore",
        "--grid-steps",
        "12",
        "--n-values",
        "5,6",
        "--out",
        out_dir
    ])
    .status
    .success());
    let out = run(&["report", "--out", out_dir]);
    assert!(out.status.success());
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(
        report["payload"]["summary"]["modified_inequalities_certified"],
        "12/12"
    );
    assert_eq!(report["payload"]["summary"]["certificates"]["failed"], 0);
}

#[test]
fn identical_configs_are_byte_identical_modulo_timestamp() {
    let strip_timestamp = |text: &str| -> String {
        text.lines()
            .filter(|l| !l.contains("generated_unix"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let out = run(&[
            "explore",
            "--grid-steps",
            "16",
            "--n-values",
            "6",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    for name in ["region-n6.json"] {
        let a = std::fs::read_to_string(dir_a.path().join(name)).unwrap();
        let b = std::fs::read_to_string(dir_b.path().join(name)).unwrap();
        assert_eq!(strip_timestamp(&a), strip_timestamp(&b), "{name} differs");
    }
    // CSV has no header timestamp at all: byte-identical as-is
    let a = std::fs::read(dir_a.path().join("samples-n6.csv")).unwrap();
    let b = std::fs::read(dir_b.path().join("samples-n6.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn thread_cap_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args([
            "explore",
            "--grid-steps",
            "12",
            "--n-values",
            "6",
            "--out",
            dir.path().to_str().unwrap(),
        ])
        .env("INEQFORGE_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let r = read_json(&dir.path().join("region-n6.json"));
    assert!(r["payload"]["violation_count"].as_u64().unwrap() > 0);
}

#[test]
fn invalid_grid_rejected() {
    let out = run(&["explore", "--grid-lo", "0", "--out", "/tmp/never-used"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["explore", "--grid-lo", "abc", "--out", "/tmp/never-used"]);
    assert_eq!(out.status.code(), Some(2));
}
