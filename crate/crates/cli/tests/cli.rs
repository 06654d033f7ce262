use std::process::{Command, Output};

fn ercd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ercd"))
        .args(args)
        .env_remove("ERCD_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn passing_suite_exits_zero() {
    let o = ercd(&["--suite", "ercd"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rank=64"));
    assert!(out.contains("hermitian=36/antihermitian=28"));
}

#[test]
fn run_subcommand_matches_default() {
    let a = ercd(&["--suite", "so6", "--format", "json"]);
    let b = ercd(&["run", "--suite", "so6", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn injected_fault_exits_one_and_names_the_pair() {
    let o = ercd(&["--suite", "cd", "--inject-fault", "2:0:1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL ] cd.anticommutation"), "{out}");
    assert!(out.contains("gamma_2"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["--suite", "nope"][..],
        &["--format", "yaml"],
        &["--mass", "0"],
        &["--tol", "closure"],
        &["--inject-fault", "9:0:0"],
        &["--no-such-flag"],
        &["tables", "--set", "nope"],
        &["tables", "--set", "cd16", "--kind", "bogus"],
    ] {
        assert_eq!(ercd(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_two() {
    let o = ercd(&["--suite", "ercd", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = [
        "--suite",
        "cd,fw,poincare",
        "--samples",
        "40",
        "--format",
        "json",
        "--out",
    ];
    let mut first = args.to_vec();
    first.push(a.to_str().unwrap());
    let mut second = args.to_vec();
    second.push(b.to_str().unwrap());
    second.push("--parallel");
    assert_eq!(ercd(&first).status.code(), Some(0));
    assert_eq!(ercd(&second).status.code(), Some(0));
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["samples"], 40);
    assert!(v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c.get("runtime").is_none()));
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_ercd"))
        .args(["--suite", "pgi", "--format", "csv"])
        .env("ERCD_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("ercd-report.csv")).unwrap();
    assert!(csv.starts_with("id,suite,group,status,residual,anchor,detail\n"));
    assert!(csv.contains("pgi.lorentz-sign,pgi,pgi,noted"));
}

#[test]
fn tables_percd_structure_constants() {
    let o = ercd(&[
        "tables",
        "--set",
        "percd29",
        "--kind",
        "structure-constants",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 29);
    for c in v["constants"].as_array().unwrap() {
        let value = c["value"].as_str().unwrap();
        assert!(value == "1" || value == "-1", "{value}");
    }
}

#[test]
fn tables_cd_multiplication_csv() {
    let o = ercd(&["tables", "--set", "cd16", "--kind", "multiplication", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 17);
    assert!(lines.iter().all(|l| l.split(',').count() == 17));
}
