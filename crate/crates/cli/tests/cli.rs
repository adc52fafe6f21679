//! Behavioral tests for the command-line surface beyond the acceptance
//! contract.

use std::process::{Command, Output};

fn subpack_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subpack"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn compute_paths_print_identical_values() {
    let closed = subpack_bin(&["compute", "-N", "3", "-K", "7", "-D", "3", "--via", "closed"]);
    let oracle = subpack_bin(&["compute", "-N", "3", "-K", "7", "-D", "3", "--via", "recursion"]);
    assert!(closed.status.success());
    assert!(oracle.status.success());
    assert_eq!(stdout_of(&closed), stdout_of(&oracle));
}

#[test]
fn compute_rejects_demand_of_one() {
    let output = subpack_bin(&["compute", "-N", "3", "-K", "7", "-D", "1"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("requires D > 1"));
}

#[test]
fn sweep_accepts_bare_integers_as_ranges() {
    let output = subpack_bin(&["sweep", "-N", "2", "-K", "4", "-D", "3"]);
    assert!(output.status.success());
    let body = stdout_of(&output);
    let mut lines = body.lines();
    assert!(lines.next().unwrap().starts_with("N,K,D"));
    assert_eq!(lines.next().unwrap(), "2,4,3,2,1,8,3,8,3");
    assert_eq!(lines.next(), None);
}

#[test]
fn sweep_reports_unwritable_output_path() {
    let output = subpack_bin(&[
        "sweep", "-N", "2", "-K", "4", "-D", "3", "--output", "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("/nonexistent-dir/out.csv"));
}

#[test]
fn verify_rejects_malformed_grid() {
    let output = subpack_bin(&["verify", "--grid", "N=2..4,K=3..6"]);
    assert_eq!(output.status.code(), Some(2));

    let output = subpack_bin(&["verify", "--grid", "N=2..4,K=3..6,D=4..2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_lists_every_identity_once() {
    let output = subpack_bin(&["verify", "--grid", "N=2..3,K=3..5,D=2..3"]);
    assert!(output.status.success());
    let body = stdout_of(&output);
    for label in [
        "closed form vs recursion",
        "reversed recursion",
        "binomial sum identities",
        "root-of-unity sums",
        "characteristic roots",
        "initial conditions",
        "intermediate level form",
        "root-of-unity level forms",
        "geometric ratio",
        "filtered-coefficient average",
    ] {
        assert_eq!(
            body.matches(label).count(),
            1,
            "expected exactly one line for {label}"
        );
    }
}

#[test]
fn bench_rejects_zero_repetitions() {
    let output = subpack_bin(&["bench", "-N", "2", "-K", "5", "-D", "2", "-r", "0"]);
    assert_eq!(output.status.code(), Some(2));
}
