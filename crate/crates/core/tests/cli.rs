use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eisenstein-descent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON report")
}

/// Report text with the timing line removed.
fn stable_part(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| !l.contains("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = run(&["verify", "no-solution", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["report"], "verification");
    assert_eq!(r["lemma"], "no-solution");
    assert_eq!(r["modulus"], 81);
    assert_eq!(r["set_sizes"]["image_of_g"], 1519);
    assert_eq!(r["set_sizes"]["rhs_set"], 21);
    assert_eq!(r["input_fingerprint"].as_str().unwrap().len(), 64);

    // Failing below the threshold is a finding, not an error.
    let out = run(&["verify", "no-solution", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["holds"], false);
    let first = &r["counterexamples"][0];
    for key in ["x", "y", "z"] {
        assert!(first[key].is_string(), "missing {key}");
    }

    assert_eq!(
        run(&["verify", "no-such-lemma", "--k", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "cube-closure", "--k", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "cube-closure"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_stable() {
    let a = run(&[
        "search", "--coeffs", "6,0,0,3", "--height", "12", "--jobs", "1",
    ]);
    let b = run(&[
        "search", "--coeffs", "6,0,0,3", "--height", "12", "--jobs", "4",
    ]);
    assert_eq!(stable_part(&a), stable_part(&b));
    let c = run(&["verify", "cube-closure", "--k", "3"]);
    let d = run(&["verify", "cube-closure", "--k", "3"]);
    assert_eq!(stable_part(&c), stable_part(&d));
    assert!(String::from_utf8_lossy(&c.stdout).contains("\"elapsed_ms\""));
}

#[test]
fn json_flag_writes_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["classify", "6+3*w", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, String::from_utf8(out.stdout.clone()).unwrap());
    let r = json(&out);
    assert_eq!(r["classification"]["verdict"], "descends");
    assert_eq!(r["classification"]["witness"]["x"], "2");
    assert_eq!(r["classification"]["witness"]["y"], "1");
    assert_eq!(r["consistent"], true);
}

#[test]
fn classify_solve_factor_reduce() {
    let r = json(&run(&["classify", "inf"]));
    assert_eq!(r["classification"]["verdict"], "undefined");
    let r = json(&run(&["classify", "8"]));
    assert_eq!(r["classification"]["verdict"], "disconnected");
    let r = json(&run(&["classify", "3"]));
    assert_eq!(r["classification"]["verdict"], "no-descent");

    let r = json(&run(&["solve", "6+3w"]));
    assert_eq!(r["solution"]["x"], "2");
    let r = json(&run(&["solve", "2"]));
    assert!(r["solution"].is_null());

    let out = run(&["factor", "6+3*w"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["unit"], "w");
    assert_eq!(r["factors"][0]["prime"], "1+2*w");
    assert_eq!(r["factors"][0]["exponent"], 3);

    let out = run(&["reduce", "3", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["identity_holds"], true);
    assert_eq!(r["pi_divides_both_parts"], true);
    assert_eq!(run(&["reduce", "1", "0"]).status.code(), Some(2));
}

#[test]
fn malformed_input_is_a_usage_error() {
    for args in [
        &["classify", "1/0"][..],
        &["classify", "2**w"],
        &["factor", "1/3"],
        &["search", "--coeffs", "5", "--height", "3"],
        &["search", "--coeffs", "1,1", "--height", "0"],
        &["dump-set", "squares", "--k", "2", "--path", "/dev/null"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error:"),
            "{args:?}"
        );
    }
}

#[test]
fn dump_set_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rhs.csv");
    let out = run(&[
        "dump-set",
        "rhs",
        "--k",
        "4",
        "--path",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["size"], 21);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# ring=3^4 set=rhs"));
    let rows: Vec<(u64, u64)> = lines
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 21);
    assert!(rows.windows(2).all(|w| w[0] < w[1]));
    assert!(rows.iter().all(|&(a, b)| a < 81 && b < 81));
}

#[test]
fn minimal_modulus_report() {
    let out = run(&["minimal-modulus", "--max-k", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["max_k"], 6);
    assert!(r["minimal_k"].is_u64());
}
