use std::process::{Command, Output};

fn qaudit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaudit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn integrate_powq2() {
    let o = qaudit(&[
        "integrate",
        "--p",
        "5",
        "--q-offset",
        "1",
        "--N",
        "6",
        "--integrand",
        "powq:2",
        "--measure",
        "bosonic",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("reference (q)/(1 + 2q + 2q^2 + q^3)"), "{out}");
    assert!(out.contains("v_p(value - reference) = 6"), "{out}");
}

#[test]
fn integrate_without_reference() {
    let o = qaudit(&[
        "integrate",
        "--p",
        "3",
        "--q-offset",
        "1",
        "--N",
        "2",
        "--integrand",
        "multiexp:2,0",
        "--measure",
        "fermionic",
        "--reference",
        "none",
    ]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("reference"));
}

#[test]
fn integrate_budget_error() {
    let o = qaudit(&[
        "integrate",
        "--p",
        "5",
        "--q-offset",
        "1",
        "--N",
        "9",
        "--integrand",
        "powq:1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn unknown_case_id() {
    let o = qaudit(&["audit", "--ids", "NO-SUCH"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NO-SUCH"));
}

#[test]
fn usage_errors() {
    assert_eq!(qaudit(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        qaudit(&["table", "--family", "nope", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qaudit(&["table", "--family", "gauss-binom", "--n", "0..999"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qaudit(&[
            "integrate",
            "--p",
            "4",
            "--q-offset",
            "1",
            "--N",
            "1",
            "--integrand",
            "powq:1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn audit_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = qaudit(&[
        "audit",
        "--ids",
        "EQ03-PARTITION,THM1-PRINTED",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let cases = report["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 2);
    assert_eq!(cases[0]["id"], "EQ03-PARTITION");
    assert_eq!(cases[0]["status"], "pass");
    assert_eq!(cases[0]["ranges"]["n"], serde_json::json!([0, 10]));
    assert_eq!(cases[1]["status"], "expected-fail-confirmed");
    assert_eq!(cases[1]["counterexample"]["params"]["m"], 0);
    assert_eq!(cases[1]["counterexample"]["lhs"], "1");
    assert_eq!(cases[1]["counterexample"]["rhs"], "q");
    assert!(cases[0]["ms"].is_null());
    assert_eq!(report["summary"]["pass"], 1);
    assert_eq!(report["summary"]["expected_fail_confirmed"], 1);
}

#[test]
fn audit_max_n_and_timings() {
    let o = qaudit(&["audit", "--ids", "EQ31", "--max-n", "3", "--timings"]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["cases"][0]["ranges"]["k"], serde_json::json!([1, 3]));
    assert!(report["cases"][0]["ms"].is_u64());
}

#[test]
fn table_outputs() {
    let o = qaudit(&[
        "table",
        "--family",
        "gauss-binom",
        "--n",
        "4",
        "--k",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&o),
        "n,k,value,limit_q1\n4,2,1 + q + 2q^2 + q^3 + q^4,6\n"
    );

    let o = qaudit(&[
        "table",
        "--family",
        "carlitz-beta",
        "--m",
        "0..2",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<&str> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "(-1)/(1 + q)", "(q)/(1 + 2q + 2q^2 + q^3)"]);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.tex");
    let o = qaudit(&[
        "table",
        "--family",
        "stirling2-S",
        "--n",
        "0..3",
        "--format",
        "latex",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let tex = std::fs::read_to_string(&path).unwrap();
    assert!(tex.starts_with("\\begin{tabular}"));
    assert!(tex.contains("S_{2,q}(n,k)"));
}

#[test]
fn limits() {
    let o = qaudit(&["limit", "--family", "carlitz-beta", "--m", "0..4"]);
    assert_eq!(stdout(&o), "m=0 1\nm=1 -1/2\nm=2 1/6\nm=3 0\nm=4 -1/30\n");
    let o = qaudit(&[
        "limit",
        "--family",
        "stirling2-S",
        "--m",
        "3",
        "--k",
        "0..3",
    ]);
    assert_eq!(stdout(&o), "n=3 k=0 0\nn=3 k=1 1\nn=3 k=2 3\nn=3 k=3 1\n");
}
