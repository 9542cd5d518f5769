//! End-to-end checks of the egz binary.

use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

const FIGURE_INSTANCE: &str = "5\n0 1 6 2 7 3 8 4 9\n";

fn egz() -> Command {
    Command::new(env!("CARGO_BIN_EXE_egz"))
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = egz()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn solve_prints_mask_from_stdin() {
    let output = run_with_stdin(&["solve"], FIGURE_INSTANCE);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    assert_eq!(stdout_of(&output), "101010101\n");
}

#[test]
fn solve_prints_indices() {
    let output = run_with_stdin(&["solve", "--format", "indices"], FIGURE_INSTANCE);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout_of(&output), "1 3 5 7 9\n");
}

#[test]
fn solve_reads_files_and_dash() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("instance.txt");
    fs::write(&path, FIGURE_INSTANCE).unwrap();

    let from_file = egz().arg("solve").arg(&path).output().unwrap();
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout_of(&from_file), "101010101\n");

    let from_dash = run_with_stdin(&["solve", "-"], FIGURE_INSTANCE);
    assert_eq!(from_dash.status.code(), Some(0));
    assert_eq!(stdout_of(&from_dash), "101010101\n");
}

#[test]
fn solve_rejects_malformed_instances() {
    for bad in [
        "",
        "abc",
        "0",
        "3 1 2",
        "3 1 2 3 4 5 6",
        "3 1 2 x 4 5",
        "4294967296 0",
    ] {
        let output = run_with_stdin(&["solve"], bad);
        assert_eq!(output.status.code(), Some(2), "input {bad:?}");
        assert!(!stderr_of(&output).is_empty(), "input {bad:?}");
    }
}

#[test]
fn solve_rejects_missing_file() {
    let output = egz().args(["solve", "/no/such/file"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("cannot read"));
}

#[test]
fn verify_accepts_both_layouts() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("instance.txt");
    fs::write(&instance, FIGURE_INSTANCE).unwrap();
    for cert_text in ["101010101\n", "1 3 5 7 9\n", "9 7 5 3 1\n"] {
        let cert = dir.path().join("cert.txt");
        fs::write(&cert, cert_text).unwrap();
        let output = egz()
            .arg("verify")
            .arg(&instance)
            .arg(&cert)
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0), "cert {cert_text:?}");
        assert_eq!(stdout_of(&output), "valid\n");
    }
}

#[test]
fn verify_flags_wrong_cardinality() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("instance.txt");
    fs::write(&instance, FIGURE_INSTANCE).unwrap();
    let cert = dir.path().join("cert.txt");
    fs::write(&cert, "1 3 5 7\n").unwrap();
    let output = egz()
        .arg("verify")
        .arg(&instance)
        .arg(&cert)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("positions selected"));
}

#[test]
fn verify_flags_bad_sum() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("instance.txt");
    fs::write(&instance, FIGURE_INSTANCE).unwrap();
    let cert = dir.path().join("cert.txt");
    fs::write(&cert, "111010001\n").unwrap();
    let output = egz()
        .arg("verify")
        .arg(&instance)
        .arg(&cert)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("remainder"));
}

#[test]
fn verify_rejects_malformed_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("instance.txt");
    fs::write(&instance, FIGURE_INSTANCE).unwrap();
    for bad in ["", "abc", "0", "3 3", "10101010"] {
        let cert = dir.path().join("cert.txt");
        fs::write(&cert, bad).unwrap();
        let output = egz()
            .arg("verify")
            .arg(&instance)
            .arg(&cert)
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(2), "cert {bad:?}");
        assert!(!stderr_of(&output).is_empty());
    }
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let first = egz()
        .args(["gen", "--n", "9", "--seed", "7"])
        .output()
        .unwrap();
    let second = egz()
        .args(["gen", "--n", "9", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout_of(&first), stdout_of(&second));

    let other_seed = egz()
        .args(["gen", "--n", "9", "--seed", "8"])
        .output()
        .unwrap();
    assert_ne!(stdout_of(&first), stdout_of(&other_seed));

    let text = stdout_of(&first);
    assert_eq!(text.lines().next(), Some("9"));
    assert_eq!(text.lines().count(), 18);

    let solved = run_with_stdin(&["solve"], &text);
    assert_eq!(solved.status.code(), Some(0));
}

#[test]
fn gen_supports_every_distribution() {
    for dist in ["uniform", "adversarial-equal", "two-class"] {
        let output = egz()
            .args(["gen", "--n", "6", "--seed", "3", "--dist", dist])
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0), "dist {dist}");
        let solved = run_with_stdin(&["solve"], &stdout_of(&output));
        assert_eq!(solved.status.code(), Some(0), "dist {dist}");
    }
}

#[test]
fn gen_rejects_bad_n() {
    let output = egz().args(["gen", "--n", "0"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("between"));
}

#[test]
fn bench_emits_csv() {
    let output = egz()
        .args(["bench", "--n", "5,6,8", "--trials", "2"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,kind,trial,elapsed_ns"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    let expected = [
        ("5", "prime", "1"),
        ("5", "prime", "2"),
        ("6", "composite", "1"),
        ("6", "composite", "2"),
        ("8", "power2", "1"),
        ("8", "power2", "2"),
    ];
    for (row, (n, kind, trial)) in rows.iter().zip(expected) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 4);
        assert_eq!(fields[0], n);
        assert_eq!(fields[1], kind);
        assert_eq!(fields[2], trial);
        assert!(fields[3].parse::<u128>().unwrap() >= 1);
    }
}

#[test]
fn bench_rejects_bad_arguments() {
    let zero_trials = egz()
        .args(["bench", "--n", "5", "--trials", "0"])
        .output()
        .unwrap();
    assert_eq!(zero_trials.status.code(), Some(2));

    let tiny_n = egz()
        .args(["bench", "--n", "1", "--trials", "2"])
        .output()
        .unwrap();
    assert_eq!(tiny_n.status.code(), Some(2));

    let missing_trials = egz().args(["bench", "--n", "5"]).output().unwrap();
    assert_eq!(missing_trials.status.code(), Some(2));
}

#[test]
fn usage_and_help_codes() {
    let help = egz().arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout_of(&help).contains("solve"));

    let unknown = egz().arg("frobnicate").output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));

    let no_args = egz().output().unwrap();
    assert_eq!(no_args.status.code(), Some(2));
}
