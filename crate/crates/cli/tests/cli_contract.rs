use std::process::{Command, Output};

use dcpell_core::verifier::reports_from_json;
use dcpell_core::DualComplexQ;
use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcpell"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn seq_csv_row() {
    let out = run(&[
        "seq", "--family", "pell", "--k", "2", "--from", "0", "--to", "5", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0,1,2,6,16,44");
}

#[test]
fn seq_default_json_values() {
    let rows = ok_json(&[
        "seq", "--family", "pell", "--k", "1", "--from", "0", "--to", "6",
    ]);
    let values: Vec<&str> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["0", "1", "2", "5", "12", "29", "70"]);
}

#[test]
fn seq_plain_lines() {
    let out = run(&[
        "seq",
        "--family",
        "pell-lucas",
        "--k",
        "1",
        "--from",
        "0",
        "--to",
        "2",
        "--format",
        "plain",
    ]);
    assert_eq!(stdout(&out), "0 2\n1 2\n2 6\n");
}

#[test]
fn seq_rejects_bad_inputs() {
    for args in [
        vec!["seq", "--family", "pell", "--k", "0"],
        vec!["seq", "--family", "pell", "--k", "-1/2"],
        vec!["seq", "--family", "pell", "--k", "x"],
        vec!["seq", "--family", "nope", "--k", "1"],
        vec![
            "seq", "--family", "pell", "--k", "1", "--from", "3", "--to", "1",
        ],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn quat_outputs() {
    assert_eq!(
        ok_json(&["quat", "--family", "pell", "--k", "1", "--n", "1"]),
        json!({"one": "1", "i": "2", "eps": "5", "ieps": "12"})
    );
    assert_eq!(
        ok_json(&["quat", "--family", "pell", "--k", "2", "--n", "0"]),
        json!({"one": "0", "i": "1", "eps": "2", "ieps": "6"})
    );
    let out = run(&[
        "quat", "--family", "pell", "--k", "1", "--n", "0", "--format", "plain",
    ]);
    assert_eq!(stdout(&out).trim(), "0 + 1·i + 2·eps + 5·i·eps");
    assert_eq!(
        run(&["quat", "--family", "pell", "--k", "1/0", "--n", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn quat_json_is_a_fixed_point_of_parse_and_render() {
    for args in [
        [
            "quat",
            "--family",
            "modified-pell",
            "--k",
            "7/3",
            "--n",
            "-4",
        ],
        ["quat", "--family", "pell", "--k", "5", "--n", "30"],
    ] {
        let text = stdout(&run(&args));
        let parsed: DualComplexQ = serde_json::from_str(&text).unwrap();
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_value(&parsed).unwrap(), value);

        let mut plain_args = args.to_vec();
        plain_args.extend(["--format", "plain"]);
        let plain = stdout(&run(&plain_args));
        let reparsed = DualComplexQ::parse_plain(plain.trim()).unwrap();
        assert_eq!(reparsed, parsed);
        assert_eq!(reparsed.to_string(), plain.trim());
    }
}

#[test]
fn identity_exit_codes_and_payload() {
    let out = run(&["identity", "--id", "g18", "--k", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["equal"], json!(true));
    assert_eq!(v["lhs"], v["rhs"]);

    let out = run(&["identity", "--id", "f31", "--k", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["equal"], json!(false));
    assert_eq!(v["lhs"]["one"], json!("8"));
    assert_eq!(v["rhs"]["one"], json!("6"));

    for args in [
        vec!["identity", "--id", "g18", "--k", "1"],
        vec!["identity", "--id", "g99", "--k", "1", "--n", "1"],
        vec![
            "identity", "--id", "g18", "--k", "1", "--n", "1", "--r", "2",
        ],
        vec![
            "identity", "--id", "g19proof", "--k", "1", "--n", "2", "--r", "5",
        ],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sweep_single_identity_line() {
    let out = run(&["sweep", "--ids", "g18", "--k", "1", "--n", "1..4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "g18 holds 4 0\n");
}

#[test]
fn sweep_report_file_matches_summary_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path_str = path.to_str().unwrap();
    let base = [
        "sweep",
        "--ids",
        "g18,f31,g19stated,g13",
        "--k",
        "1,2",
        "--n",
        "0..6",
        "--m",
        "0..3",
        "--r",
        "1..3",
    ];

    let mut with_out = base.to_vec();
    with_out.extend(["--out", path_str]);
    let plain = run(&with_out);
    // f31 and g19stated do not hold, so the run reports a mathematical failure.
    assert_eq!(plain.status.code(), Some(1));

    let reports = reports_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ids: Vec<String> = reports.iter().map(|r| r.identity.to_string()).collect();
    assert_eq!(ids, ["g18", "f31", "g19stated", "g13"]);

    let mut csv_args = base.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv = stdout(&run(&csv_args));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("identity,verdict,grid_size,skipped"));
    let from_csv: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect();
    let from_plain: Vec<Vec<String>> = stdout(&plain)
        .lines()
        .map(|l| l.split(' ').map(str::to_owned).collect())
        .collect();
    assert_eq!(from_csv, from_plain);
    for (row, report) in from_csv.iter().zip(&reports) {
        assert_eq!(row[1], report.verdict.to_string());
        assert_eq!(row[2], report.grid_size.to_string());
    }
}

#[test]
fn sweep_unwritable_path_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let out = run(&[
        "sweep",
        "--ids",
        "g18",
        "--k",
        "1",
        "--n",
        "1..2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn binet_outputs() {
    let v = ok_json(&["binet", "--k", "1", "--n", "4", "--level", "number"]);
    assert_eq!(v, json!({"value": "12", "consistent": true}));
    let v = ok_json(&["binet", "--k", "3", "--n", "3", "--level", "number"]);
    assert_eq!(v["value"], json!("7"));
    let v = ok_json(&["binet", "--k", "1", "--n", "0", "--level", "quaternion"]);
    assert_eq!(
        v["value"],
        json!({"one": "0", "i": "1", "eps": "2", "ieps": "5"})
    );
    assert_eq!(v["consistent"], json!(true));
    assert_eq!(
        run(&["binet", "--k", "1", "--n", "-1"]).status.code(),
        Some(2)
    );
}
