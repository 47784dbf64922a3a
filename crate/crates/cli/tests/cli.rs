use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_specres"));
    cmd.args(args)
        .env_remove("SPECRES_MAX_ORDER")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json on stdout")
}

#[test]
fn eckart_csv_at_u_zero() {
    let o = run(
        &[
            "residues", "--family", "eckart", "--order", "3", "--params", "u=0", "--format", "csv",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,residue");
    assert_eq!(lines[3], "3,v + 2/3 v^2 + 1/12 v^3");
}

#[test]
fn morse_first_residue() {
    let o = run(&["residues", "--family", "morse", "--order", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "rho_1 = u");
}

#[test]
fn free_residues_as_json() {
    let o = run(
        &[
            "residues", "--family", "free", "--order", "2", "--format", "json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["order"], 2);
    let grade2: Vec<(Value, Value)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["grade"] == 2)
        .map(|t| (t["word"].clone(), t["coeff"].clone()))
        .collect();
    assert_eq!(
        grade2,
        vec![
            (serde_json::json!([2]), serde_json::json!("1/2")),
            (serde_json::json!([1, 1]), serde_json::json!("1/2")),
        ]
    );
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "residues", "--family", "pt", "--order", "5", "--format", "json",
    ];
    assert_eq!(run(&args, None).stdout, run(&args, None).stdout);
}

#[test]
fn invert_single_residue() {
    let input = r#"{"order": 1, "terms": [{"grade": 1, "word": [], "coeff": "1"}]}"#;
    let o = run(&["invert-residues", "--order", "1"], Some(input));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "U_1 = 1");
}

#[test]
fn residues_then_invert_round_trip() {
    let rho = run(
        &[
            "residues", "--family", "free", "--order", "5", "--format", "json",
        ],
        None,
    );
    let o = run(
        &["invert-residues", "--format", "json"],
        Some(&stdout(&rho)),
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    for (i, t) in terms.iter().enumerate() {
        assert_eq!(t["word"], serde_json::json!([i + 1]));
        assert_eq!(t["coeff"], "1/1");
    }
}

#[test]
fn malformed_json_reports_location() {
    let o = run(&["invert-residues"], Some("{\"order\": 2,\n \"terms\": [}"));
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(
        run(&["residues", "--family", "nope", "--order", "2"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--suite", "nope"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(
            &["residues", "--family", "eckart", "--order", "2", "--params", "w"],
            None
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn guards_and_override() {
    let free = ["residues", "--family", "free", "--order", "11"];
    assert_eq!(run(&free, None).status.code(), Some(3));
    assert_eq!(
        run(&["residues", "--family", "morse", "--order", "15"], None)
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["residues", "--family", "morse", "--order", "14"], None)
            .status
            .code(),
        Some(0)
    );
    let lowered = run_env(
        &["residues", "--family", "morse", "--order", "4"],
        None,
        &[("SPECRES_MAX_ORDER", "3")],
    );
    assert_eq!(lowered.status.code(), Some(3));
    let raised = run_env(
        &["residues", "--family", "free", "--order", "3"],
        None,
        &[("SPECRES_MAX_ORDER", "3")],
    );
    assert_eq!(raised.status.code(), Some(0));
}

#[test]
fn verify_rhoinv_and_darboux() {
    for suite in ["rhoinv", "darboux"] {
        let o = run(&["verify", "--suite", suite, "--max-order", "8"], None);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        let v = json(&o);
        assert_eq!(v["suite"], suite);
        assert_eq!(v["overall"], true);
        assert!(v["cases"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["pass"] == true));
    }
}

#[test]
fn verify_kdv_reports_sign() {
    let o = run(
        &[
            "verify",
            "--suite",
            "kdv",
            "--max-order",
            "4",
            "--format",
            "pretty",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("note: flow sign +1"), "{text}");
    assert!(text.contains("PASS free n=4"));
}

#[test]
fn verify_all_small() {
    let o = run(&["verify", "--suite", "all", "--max-order", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["suite"], "all");
    assert!(v["cases"].as_array().unwrap().len() > 14);
}

#[test]
fn darboux_emits_all_series() {
    let o = run(&["darboux", "--order", "3", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    for key in [
        "potential",
        "prepotential",
        "partner",
        "residues",
        "partner_residues",
    ] {
        assert_eq!(v[key]["order"], 3, "{key}");
    }
    assert_eq!(v["negation_holds"], true);
}

#[test]
fn compsum_both_sides() {
    let o = run(
        &[
            "compsum", "--id", "csum2", "--n", "4", "--k", "1", "--format", "csv",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1), Some("1,108/1,108/1,true"));
    assert_eq!(
        run(&["compsum", "--id", "corrid", "--n", "4"], None)
            .status
            .code(),
        Some(2)
    );
}
