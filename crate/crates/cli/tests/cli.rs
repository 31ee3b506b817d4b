use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use coinv_core::verify::sha256_hex;

fn coinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = coinv(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = fs::remove_dir_all(&dir);
    dir
}

#[test]
fn hilbert_examples() {
    assert_eq!(
        stdout(&["hilbert", "--n", "2", "--k", "2", "--r", "1"]),
        "1 + 2q + 2q^2 + q^3\n"
    );
    assert_eq!(
        stdout(&["hilbert", "--n", "3", "--k", "0", "--r", "0"]),
        "1 + 2q + 2q^2 + q^3\n"
    );
    assert_eq!(stdout(&["hilbert", "--n", "2", "--k", "1", "--r", "2"]), "1 + q\n");
    let checked = stdout(&["hilbert", "--n", "3", "--k", "2", "--r", "1", "--from-groebner"]);
    assert!(checked.ends_with("equal: true\n"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "hilbert",
        "--n",
        "2",
        "--k",
        "1",
        "--r",
        "1",
        "--variant",
        "p",
        "--from-groebner",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["equal"], true);
    assert_eq!(json["variant"], "p");
}

#[test]
fn exit_codes() {
    assert_eq!(
        coinv(&["verify", "--suite", "stdmon", "--nmax", "3", "--kmax", "1"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        coinv(&["verify", "--suite", "conjecture51", "--nmax", "2", "--kmax", "1"])
            .status
            .code(),
        Some(0)
    );
    // points beyond the Tesler bound are reported as failures, not crashes
    let out = coinv(&["verify", "--suite", "tesler", "--nmax", "8", "--kmax", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("(7,1,0) fail"));
    assert_eq!(coinv(&["verify", "--suite", "unknown"]).status.code(), Some(2));
    assert_eq!(coinv(&["hilbert", "--n", "2", "--r", "3"]).status.code(), Some(2));
    assert_eq!(coinv(&["hilbert", "--n", "0"]).status.code(), Some(2));
    assert_eq!(coinv(&["emit", "nothing", "--n", "2"]).status.code(), Some(2));
    assert_eq!(coinv(&[]).status.code(), Some(2));
}

#[test]
fn emitted_objects() {
    let good = stdout(&["emit", "goodmons", "--n", "2", "--k", "2", "--r", "1"]);
    assert_eq!(good.lines().count(), 6);
    let words = stdout(&["emit", "words", "--n", "2", "--k", "2", "--r", "1"]);
    assert_eq!(words, "0012\n0021\n0102\n0201\n1002\n2001\n");
    let gb = stdout(&["emit", "gb", "--n", "5", "--k", "2", "--r", "3", "--format", "csv"]);
    let rows: Vec<&str> = gb.lines().skip(1).collect();
    assert_eq!(rows.iter().filter(|l| l.starts_with("h,")).count(), 5);
    assert_eq!(rows.iter().filter(|l| l.starts_with("kappa,")).count(), 10);
    assert!(rows.last().unwrap().ends_with("x3^3*x4^3*x5^3,x3^3*x4^3*x5^3"));
    let stairs = stdout(&[
        "emit",
        "staircases",
        "--n",
        "3",
        "--k",
        "2",
        "--r",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stairs).unwrap();
    assert_eq!(v["staircases"].as_array().unwrap().len(), 3);
    let tesler = stdout(&["emit", "tesler", "--n", "2", "--k", "1", "--r", "0", "--format", "csv"]);
    assert_eq!(tesler.lines().next(), Some("alpha,matrices,q0,q1,q2,q3"));
    let frob = stdout(&["emit", "frobenius", "--n", "2", "--k", "0", "--r", "0"]);
    assert_eq!(frob, "(1)*s[2] + (q)*s[1,1]\n");
}

#[test]
fn emission_is_deterministic() {
    for object in ["words", "staircases", "goodmons", "gb", "frobenius", "tesler"] {
        for format in ["text", "json", "csv"] {
            let args = ["emit", object, "--n", "3", "--k", "2", "--r", "1", "--format", format];
            assert_eq!(stdout(&args), stdout(&args), "{object} {format}");
        }
    }
}

#[test]
fn reports_and_artifacts_are_reproducible() {
    let a = scratch("verify_a");
    let b = scratch("verify_b");
    for dir in [&a, &b] {
        let out = coinv(&[
            "verify",
            "--suite",
            "frobenius",
            "--nmax",
            "3",
            "--kmax",
            "1",
            "--jobs",
            "2",
            "--format",
            "json",
            "--out",
            dir.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let report_a = fs::read(a.join("frobenius.report.json")).unwrap();
    assert_eq!(report_a, fs::read(b.join("frobenius.report.json")).unwrap());
    let report: serde_json::Value = serde_json::from_slice(&report_a).unwrap();
    assert_eq!(report["status"], "pass");
    let artifacts = report["artifacts"].as_object().unwrap();
    assert_eq!(artifacts.len(), report["grid"].as_array().unwrap().len());
    for (name, hash) in artifacts {
        let bytes = fs::read(a.join(name)).unwrap();
        assert_eq!(&sha256_hex(&bytes), hash.as_str().unwrap());
        assert_eq!(bytes, fs::read(b.join(name)).unwrap());
    }
}
