//! Acceptance suite for the command-line surface: performance budgets and
//! the CLI contract (formats, round-trips, exit codes).

use std::fs;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use subpack::{closed_form, Parameters};

fn subpack_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subpack"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("not killed by signal")
}

#[test]
fn criterion_8_performance_budgets() {
    let start = Instant::now();
    let compute = subpack_bin(&["compute", "-N", "4", "-K", "200", "-D", "5"]);
    let compute_time = start.elapsed();
    assert_eq!(exit_code(&compute), 0, "stderr: {}", stderr_of(&compute));
    assert!(
        compute_time < Duration::from_secs(1),
        "compute took {compute_time:?}, budget is 1s"
    );

    let start = Instant::now();
    let verify = subpack_bin(&["verify"]);
    let verify_time = start.elapsed();
    assert_eq!(exit_code(&verify), 0, "stderr: {}", stderr_of(&verify));
    assert!(
        verify_time < Duration::from_secs(60),
        "default-grid verify took {verify_time:?}, budget is 60s"
    );

    println!(
        "criterion 8 (compute N=4 K=200 D=5 in {compute_time:?} < 1s; default verify in {verify_time:?} < 60s): PASS"
    );
}

#[test]
fn criterion_9_cli_contract() {
    // --- CSV/JSON round-trip on a 100-row sweep -------------------------
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("sweep.csv");
    let json_path = dir.path().join("sweep.json");
    let ranges = ["-N", "2..5", "-K", "4..10", "-D", "2..5"];

    let csv_run = subpack_bin(
        &[&["sweep"], &ranges[..], &["--format", "csv", "--output", csv_path.to_str().unwrap()]]
            .concat(),
    );
    assert_eq!(exit_code(&csv_run), 0);
    let json_run = subpack_bin(
        &[&["sweep"], &ranges[..], &["--format", "json", "--output", json_path.to_str().unwrap()]]
            .concat(),
    );
    assert_eq!(exit_code(&json_run), 0);

    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    let headers = reader.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        vec!["N", "K", "D", "T", "S", "L_numerator", "L_denominator", "subpacketization", "multiplier"]
    );
    let csv_rows: Vec<csv::StringRecord> =
        reader.records().map(|r| r.unwrap()).collect();

    let json_text = fs::read_to_string(&json_path).unwrap();
    let json_rows: Vec<serde_json::Map<String, serde_json::Value>> =
        serde_json::from_str(&json_text).unwrap();

    assert_eq!(csv_rows.len(), 100, "expected a 100-row sweep");
    assert_eq!(json_rows.len(), 100);
    for (csv_row, json_row) in csv_rows.iter().zip(&json_rows) {
        for (column, csv_value) in headers.iter().zip(csv_row.iter()) {
            let json_value = &json_row[column];
            let json_as_string = match json_value {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(csv_value, json_as_string, "column {column} differs");
        }
    }

    // every row agrees with the library
    for row in &csv_rows {
        let n: u64 = row[0].parse().unwrap();
        let k: u64 = row[1].parse().unwrap();
        let d: u64 = row[2].parse().unwrap();
        let result = closed_form::subpacketization_level(&Parameters::new(n, k, d).unwrap());
        assert_eq!(row[5], result.level.numer().to_string());
        assert_eq!(row[6], result.level.denom().to_string());
        assert_eq!(row[7], result.subpacketization.to_string());
        assert_eq!(row[8], result.multiplier.to_string());
    }

    // --- compute: example invocations and exit codes --------------------
    let both = subpack_bin(&["compute", "-N", "2", "-K", "4", "-D", "3", "--via", "both"]);
    assert_eq!(exit_code(&both), 0);
    let text = stdout_of(&both);
    assert!(text.contains("L = 8/3"), "got: {text}");
    assert!(text.contains("subpacketization = 8"));
    assert!(text.contains("paths agree"));

    let plain = subpack_bin(&["compute", "-N", "2", "-K", "3", "-D", "2"]);
    assert_eq!(exit_code(&plain), 0);
    let text = stdout_of(&plain);
    assert!(text.contains("L = 3\n"));
    assert!(text.contains("subpacketization = 3"));

    let invalid = subpack_bin(&["compute", "-N", "1", "-K", "3", "-D", "2"]);
    assert_eq!(exit_code(&invalid), 2);
    assert!(stderr_of(&invalid).contains("requires N > 1"));

    // --- sweep: example invocations --------------------------------------
    let small = subpack_bin(&["sweep", "-N", "2..3", "-K", "3..4", "-D", "2..3", "--format", "csv"]);
    assert_eq!(exit_code(&small), 0);
    let body = stdout_of(&small);
    let rows: Vec<&str> = body.lines().skip(1).collect();
    assert_eq!(rows.len(), 6, "valid triples in N=2..3, K=3..4, D=2..3");
    assert!(stderr_of(&small).contains("2 invalid"));

    let single = subpack_bin(&["sweep", "-N", "2..2", "-K", "3..3", "-D", "2..2", "--format", "json"]);
    assert_eq!(exit_code(&single), 0);
    let parsed: Vec<serde_json::Map<String, serde_json::Value>> =
        serde_json::from_str(&stdout_of(&single)).unwrap();
    assert_eq!(parsed.len(), 1);
    assert_eq!(parsed[0]["L_numerator"], "3");
    assert_eq!(parsed[0]["L_denominator"], "1");

    let malformed = subpack_bin(&["sweep", "-N", "5..2", "-K", "3..4", "-D", "2..3"]);
    assert_eq!(exit_code(&malformed), 2);
    assert!(stderr_of(&malformed).contains("malformed range"));

    // --- verify: example invocations --------------------------------------
    let default_grid = subpack_bin(&["verify"]);
    assert_eq!(exit_code(&default_grid), 0, "stderr: {}", stderr_of(&default_grid));
    assert!(stdout_of(&default_grid).contains("10/10 identities passed"));

    let custom_grid = subpack_bin(&["verify", "--grid", "N=2..4,K=3..10,D=2..4"]);
    assert_eq!(exit_code(&custom_grid), 0);

    let unattainable = subpack_bin(&[
        "verify",
        "--grid",
        "N=2..3,K=3..6,D=2..3",
        "--tolerance",
        "1e-30",
    ]);
    assert_eq!(exit_code(&unattainable), 1);
    assert!(stdout_of(&unattainable).contains("FAIL"));
    let failure_text = stderr_of(&unattainable);
    assert!(failure_text.contains("worst residual"), "got: {failure_text}");

    // --- bench: example invocations ---------------------------------------
    let bench = subpack_bin(&["bench", "-N", "4", "-K", "100", "-D", "5", "-r", "10"]);
    assert_eq!(exit_code(&bench), 0);
    let text = stdout_of(&bench);
    assert!(text.contains("recursion:"));
    assert!(text.contains("closed form:"));
    assert!(text.contains("all outputs equal"));

    let smallest = subpack_bin(&["bench", "-N", "2", "-K", "3", "-D", "2", "-r", "1"]);
    assert_eq!(exit_code(&smallest), 0);
    assert!(stdout_of(&smallest).contains("all outputs equal"));

    let invalid = subpack_bin(&["bench", "-N", "4", "-K", "3", "-D", "9", "-r", "1"]);
    assert_eq!(exit_code(&invalid), 2);
    assert!(stderr_of(&invalid).contains("requires K > D"));

    // sanity for the witness row everything above relies on
    assert_eq!(
        closed_form::normalized_level(&Parameters::new(2, 4, 3).unwrap())
            .to_f64()
            .unwrap(),
        8.0 / 3.0
    );

    println!("criterion 9 (CSV/JSON round-trip on 100 rows; exit codes for all example invocations): PASS");
}
