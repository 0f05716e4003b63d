//! End-to-end runs of the `kron` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn kron(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kron"));
    cmd.args(args).env_remove("KRONCACHE_PATH");
    if let Some(path) = cache {
        cmd.arg("--cache").arg(path);
    }
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn terms(pairs: &[(&[usize], i64)]) -> Value {
    Value::from(
        pairs
            .iter()
            .map(|(l, c)| json!({"lambda": l, "coeff": c}))
            .collect::<Vec<_>>(),
    )
}

#[test]
fn two_row_example() {
    let v = stdout_json(&kron(&["two-row", "--d", "2", "--k", "1"], None));
    assert_eq!(v["terms"], terms(&[(&[3, 1], 1), (&[2, 1, 1], 1)]));
    assert_eq!(v["mu"], json!([2, 2]));
    assert_eq!(v["nu"], json!([3, 1]));
}

#[test]
fn hook_identity_example() {
    let v = stdout_json(&kron(&["hook", "--d", "3", "--k", "0"], None));
    assert_eq!(v["terms"], terms(&[(&[3, 3], 1)]));
}

#[test]
fn oracle_example() {
    let v = stdout_json(&kron(&["oracle", "--mu", "[2,1]", "--nu", "[2,1]"], None));
    assert_eq!(
        v["terms"],
        terms(&[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)])
    );
}

#[test]
fn gf_examples() {
    let g0 = stdout_json(&kron(&["gf", "g", "--k", "0", "--order", "4"], None));
    assert_eq!(g0["series"], json!([1, 1, 3, 4, 7]));
    let g2 = stdout_json(&kron(&["gf", "g", "--k", "2", "--order", "2"], None));
    assert_eq!(g2["numerator"], json!([0, 0, 1, 1, 2, 1]));
    let l22 = stdout_json(&kron(
        &["gf", "l", "--k", "2", "--r", "2", "--order", "7"],
        None,
    ));
    let series = l22["series"].as_array().unwrap();
    let first = series.iter().position(|c| c != &json!(0)).unwrap();
    assert_eq!((first, &series[first]), (6, &json!(1)));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "cleanest", "--max-d", "6"][..],
        &["verify", "magic", "--max-d", "6"],
        &["verify", "gf", "--max-d", "8", "--max-k", "4"],
    ] {
        let v = stdout_json(&kron(args, None));
        assert_eq!(v["passed"], json!(true), "{args:?}");
        assert_eq!(v["failures"], json!([]));
    }
}

#[test]
fn csv_table() {
    let out = kron(&["table", "--max-d", "2", "--format", "csv"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d,k,lambda,coeff"));
    assert!(text.contains("2,1,\"[3,1]\",1\n2,1,\"[2,1,1]\",1\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        kron(&["two-row", "--d", "2", "--k", "3"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kron(&["oracle", "--mu", "[2,1]", "--nu", "[2]"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kron(&["oracle", "--mu", "[27]", "--nu", "[27]"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kron(&["verify", "cleanest", "--max-d", "14"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(kron(&["gf", "l", "--k", "2"], None).status.code(), Some(2));
    assert_eq!(kron(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn outputs_identical_with_and_without_warm_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("chars.txt");
    let args = ["verify", "cleanest", "--max-d", "5"];
    let cold = kron(&args, None);
    let first = kron(&args, Some(&cache));
    assert!(String::from_utf8_lossy(&first.stderr).contains("warning"));
    assert!(fs::metadata(&cache).unwrap().len() > 0);
    let warm = kron(&args, Some(&cache));
    assert!(!String::from_utf8_lossy(&warm.stderr).contains("warning"));
    assert!(cold.status.success());
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(cold.stdout, warm.stdout);

    let oracle = [
        "oracle", "--mu", "[4,3,1]", "--nu", "[3,3,2]", "--format", "csv",
    ];
    assert_eq!(
        kron(&oracle, None).stdout,
        kron(&oracle, Some(&cache)).stdout
    );
}

#[test]
fn cache_round_trip_is_byte_exact() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("chars.txt");
    kron(&["oracle", "--mu", "[3,3]", "--nu", "[4,2]"], Some(&cache));
    let saved = fs::read(&cache).unwrap();
    assert!(saved.starts_with(b"KRONCACHE v1\n"));
    // a run that adds nothing rewrites the same bytes
    kron(&["two-row", "--d", "2", "--k", "0"], Some(&cache));
    assert_eq!(saved, fs::read(&cache).unwrap());
}

#[test]
fn bad_cache_files_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("v2.txt", "KRONCACHE v2\n"),
        ("degree.txt", "KRONCACHE v1\n5\t[3,2]\t[3,2,1]\t0\n"),
        ("malformed.txt", "KRONCACHE v1\n3\t[2,1]\n"),
        ("wrong.txt", "KRONCACHE v1\n3\t[2,1]\t[1,1,1]\t5\n"),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        fs::write(&path, body).unwrap();
        let out = kron(&["two-row", "--d", "2", "--k", "1"], Some(&path));
        assert_eq!(out.status.code(), Some(3), "{name}");
        assert!(out.stdout.is_empty());
        assert_eq!(
            fs::read_to_string(&path).unwrap(),
            body,
            "{name} left untouched"
        );
    }
}

#[test]
fn cache_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_kron"))
        .args(["oracle", "--mu", "[2,2]", "--nu", "[2,2]"])
        .env("KRONCACHE_PATH", &cache)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(fs::read_to_string(&cache)
        .unwrap()
        .starts_with("KRONCACHE v1\n"));
}
