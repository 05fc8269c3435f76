// The real binary, spawned as a process: exit codes, stdout formats, the
// cache directory variable.

use std::path::Path;
use std::process::{Command, Output};

fn trigprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigprod"))
        .args(args)
        .env_remove("TRIGPROD_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_field(text: &str, row: usize, col: &str) -> String {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == col).expect("column present");
    lines.nth(row).unwrap().split(',').nth(i).unwrap().to_string()
}

#[test]
fn eval_root_of_unity() {
    let o = trigprod(&["eval", "P", "--n", "4", "--theta", "2pi/5"]);
    assert_eq!(o.status.code(), Some(0));
    let mag: f64 = csv_field(&stdout(&o), 0, "magnitude").parse().unwrap();
    assert!((mag - 5.0).abs() < 1e-13);
}

#[test]
fn eval_zero_prints_negative_infinity() {
    let o = trigprod(&["eval", "Q", "--n", "3", "--theta", "pi"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(csv_field(&text, 0, "log_magnitude"), "-inf");
    assert_eq!(csv_field(&text, 0, "magnitude"), "0.0000000000000000e0");
}

#[test]
fn eval_accepts_negative_angles() {
    let o = trigprod(&["eval", "P", "--n", "4", "--theta", "-2pi/5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mag: f64 = csv_field(&stdout(&o), 0, "magnitude").parse().unwrap();
    assert!((mag - 5.0).abs() < 1e-13);
}

#[test]
fn coeffs_q7_row_nine() {
    let o = trigprod(&["coeffs", "Q", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 29);
    assert_eq!(csv_field(&text, 9, "coeff"), "6");
    assert_eq!(csv_field(&text, 9, "j"), "9");
}

#[test]
fn coeffs_cache_via_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = trigprod(&["coeffs", "P", "--n", "6", "--cache", d]);
    assert_eq!(o.status.code(), Some(0));
    let cached = std::fs::read_to_string(dir.path().join("P6.coeffs")).unwrap();
    assert!(cached.starts_with("TRIGPROD-COEFFS v1 P n=6 N=21\n"));

    let env_dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_trigprod"))
        .args(["coeffs", "Q", "--n", "5"])
        .env("TRIGPROD_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(env_dir.path().join("Q5.coeffs").exists());
}

#[test]
fn corrupt_cache_fails_with_integrity_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(trigprod(&["coeffs", "Q", "--n", "5", "--cache", d]).status.code(), Some(0));
    let path = dir.path().join("Q5.coeffs");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen("\n2\n", "\n3\n", 1)).unwrap();
    let o = trigprod(&["coeffs", "Q", "--n", "5", "--cache", d]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("integrity") && err.contains("sum"), "{err}");
}

#[test]
fn constants_table() {
    let o = trigprod(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("name,value,error,reference\n"));
    let b: f64 = csv_field(&text, 3, "value").parse().unwrap();
    assert!((b - 2.740222990).abs() < 1e-8);
    assert_eq!(trigprod(&["constants", "--tol", "1e-20"]).status.code(), Some(2));
}

#[test]
fn norms_csv() {
    let o = trigprod(&["norms", "P", "--n", "30", "--p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n,p,value_log,method,error\n30,2,"));
    assert_eq!(csv_field(&text, 0, "method"), "quadrature");

    let o = trigprod(&["norms", "Q", "--n", "30", "--p", "inf"]);
    let text = stdout(&o);
    assert_eq!(csv_field(&text, 0, "p"), "inf");
    assert_eq!(csv_field(&text, 0, "method"), "exact");

    let o = trigprod(&["norms", "P", "--n", "30", "--p", "1", "--coefficients"]);
    assert_eq!(csv_field(&stdout(&o), 0, "method"), "coefficient-sum");
}

#[test]
fn verify_emits_json_and_exit_code() {
    let o = trigprod(&["verify", "--theorem", "pentagonal", "--n-max", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem"], "Pentagonal");
    assert_eq!(v["pass"], true);

    // Far too small for the asymptotic ratio to settle: a failed report exits 1.
    let o = trigprod(&["verify", "--theorem", "T1", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn verify_all_small() {
    let o = trigprod(&["verify", "--all", "--n-max", "100"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 13);
    let failed: Vec<_> = reports.iter().filter(|r| r["pass"] != true).map(|r| r["criterion"].clone()).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn figure_files() {
    let dir = tempfile::tempdir().unwrap();
    let f4 = dir.path().join("f4.csv");
    let o = trigprod(&["figure", "--id", "4", "--out", f4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&f4).unwrap();
    assert!(text.starts_with("theta,value\n0.0000000000000000e0,1.0240000000000000e3\n"));
    assert_eq!(text.lines().count(), 2049);

    let f2 = dir.path().join("sub/f2.csv");
    let o = trigprod(&["figure", "--id", "2", "--out", f2.to_str().unwrap(), "--n-max", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&f2).unwrap().lines().count(), 51);
}

#[test]
fn usage_errors() {
    for args in [
        &["figure", "--id", "0", "--out", "x.csv"][..],
        &["figure", "--id", "2", "--out", "x.csv", "--n-max", "401"],
        &["eval", "P", "--n", "3"],
        &["verify", "--theorem", "T1", "--all", "--n-max", "5"],
        &["coeffs", "P", "--n", "0"],
    ] {
        let o = trigprod(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!Path::new("x.csv").exists());
    }
}

#[test]
fn over_cap_is_a_failure_not_a_usage_error() {
    let o = trigprod(&["coeffs", "P", "--n", "700"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource limit"));
}
