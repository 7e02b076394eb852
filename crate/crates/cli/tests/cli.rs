use std::process::{Command, Output};

use serde_json::Value;
use subcount_cli::OutputRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_owned()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "2", "2", "2", "2"]), "67");
    assert_eq!(stdout(&["count", "2", "2", "2", "2", "--order", "4"]), "35");
    assert_eq!(stdout(&["count", "1", "1", "1", "1"]), "1");
    assert_eq!(stdout(&["count", "30", "30", "30", "30"]), "15908480");
}

#[test]
fn poly_examples() {
    assert_eq!(
        stdout(&["poly", "1", "1", "1", "1"]),
        "p^4 + 3*p^3 + 4*p^2 + 3*p + 5"
    );
    assert_eq!(stdout(&["poly", "0", "0", "0", "0"]), "1");
    assert_eq!(
        stdout(&["poly", "3", "3", "3", "3", "--order", "6"]),
        "p^12 + p^11 + 3*p^10 + 4*p^9 + 6*p^8 + 6*p^7 + 7*p^6 + 5*p^5 + 4*p^4 + 3*p^3 + 2*p^2 + p + 1"
    );
    assert_eq!(stdout(&["poly", "1", "1", "1", "3", "--eval", "2"]), "169");
}

#[test]
fn table_rows() {
    let text = stdout(&["table"]);
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 30);
    assert_eq!(rows[0], "1\t1");
    assert_eq!(rows[9], "10\t75040");
    assert_eq!(rows[23], "24\t9187868");
}

#[test]
fn verify_and_conjectures_pass() {
    assert!(stdout(&["verify", "--max-order", "16"]).contains("pass"));
    assert!(stdout(&["verify", "--max-order", "1"]).starts_with("checked 1 groups"));
    let json: Value = serde_json::from_str(&stdout(&[
        "verify",
        "--max-order",
        "64",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["value"]["pass"], Value::Bool(true));
    let text = stdout(&["conjectures", "--max-exp", "1"]);
    assert!(text.contains("[1, 1, 1, 1]: degree 4 leading 1 pass"));
    assert_eq!(exit_code(&["conjectures", "--max-exp", "0"]), 0);
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["count", "0", "1", "1", "1"][..],
        &["count", "2", "2", "2", "2", "--order", "3"],
        &["count", "2", "2", "2"],
        &["count", "-1", "2", "2", "2"],
        &["poly", "1", "1", "1", "1", "--order", "5"],
        &["poly", "1", "1", "1", "1", "--eval", "6"],
        &["poly", "1", "1", "1", "1", "--eval", "1"],
        &["table", "--max", "0"],
        &["verify", "--max-order", "257"],
        &["count", "2", "2", "2", "2", "--via", "sideways"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &[
            "count", "6", "4", "10", "3", "--order", "12", "--format", "json",
        ][..],
        &[
            "poly", "2", "3", "3", "3", "--order", "5", "--format", "json",
        ],
        &[
            "poly", "1", "1", "1", "1", "--eval", "3", "--format", "json",
        ],
        &["table", "--max", "12", "--format", "json"],
        &["verify", "--max-order", "8", "--format", "json"],
        &["conjectures", "--max-exp", "2", "--format", "json"],
        &[
            "count", "720720", "720720", "720720", "720720", "--format", "json",
        ],
    ] {
        let emitted = stdout(args);
        let record: OutputRecord = serde_json::from_str(&emitted).unwrap();
        assert_eq!(record.to_json(), emitted, "{args:?}");
        let generic: Value = serde_json::from_str(&emitted).unwrap();
        assert_eq!(
            serde_json::to_string(&generic).unwrap(),
            emitted,
            "{args:?}"
        );
    }
}

#[test]
fn json_shapes() {
    let v: Value =
        serde_json::from_str(&stdout(&["count", "2", "2", "2", "2", "--format", "json"])).unwrap();
    assert_eq!(v["kind"], "count");
    assert_eq!(v["value"], "67");
    assert_eq!(v["inputs"]["m"], 2);
    let v: Value =
        serde_json::from_str(&stdout(&["poly", "1", "1", "1", "1", "--format", "json"])).unwrap();
    assert_eq!(v["kind"], "polynomial");
    assert_eq!(v["value"], serde_json::json!([5, 3, 4, 3, 1]));
}

#[test]
fn engines_agree() {
    for args in [
        ["2", "2", "2", "2"],
        ["12", "18", "8", "30"],
        ["7", "49", "1", "14"],
        ["36", "36", "36", "36"],
    ] {
        let mut primes = vec!["count"];
        primes.extend(args);
        let mut direct = primes.clone();
        primes.extend(["--via", "primes"]);
        direct.extend(["--via", "direct"]);
        assert_eq!(stdout(&primes), stdout(&direct), "{args:?}");
    }
    for k in ["1", "4", "16", "48", "96", "576"] {
        let a = stdout(&["count", "4", "6", "8", "3", "--order", k, "--via", "primes"]);
        let b = stdout(&["count", "4", "6", "8", "3", "--order", k, "--via", "direct"]);
        assert_eq!(a, b, "k={k}");
    }
}

#[test]
fn disagreement_exits_with_three() {
    use subcount_cli::{commands::verify_outcome, exit, verify::verify_with};
    let report = verify_with(
        16,
        |[m, n, r, s]| subcount::rank4::count_rank4(m, n, r, s),
        |[m, n, r, s], k| {
            subcount::rank4::count_rank4_order(m, n, r, s, k)
                .map(|v| if k == 4 { v * 2u8 } else { v })
        },
    )
    .unwrap();
    let out = verify_outcome(&report);
    assert_eq!(out.exit_code, exit::VERIFICATION_FAILED);
    assert_eq!(out.exit_code, 3);
    let d = report.first_disagreement.unwrap();
    assert_eq!(d.order, Some(4));
    assert!(out.text.contains("FAIL"));
}
