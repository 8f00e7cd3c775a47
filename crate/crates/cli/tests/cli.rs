use std::process::Command;

use m0n::gamma::reference_table;
use m0n::{Rational, SigmaMonomial, SigmaPoly};
use m0n_cli::{run_verify, GammaRecord};

fn m0n(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_m0n"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn gamma_text() {
    assert_eq!(
        m0n(&["gamma", "--n", "4"]),
        ("1 + σ1\n".into(), String::new(), 0)
    );
    assert_eq!(m0n(&["gamma", "--n", "3"]).0, "1\n");
    assert_eq!(
        m0n(&["gamma", "--n", "5", "--ascii"]).0,
        "1 + 3/2 s1 + 1/2 s1^2 + s2\n"
    );
}

#[test]
fn gamma_json() {
    let (stdout, _, code) = m0n(&["gamma", "--n", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let record: GammaRecord = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(record.n, 5);
    assert_eq!(record.degree, 2);
    let coeffs: Vec<&str> = record.terms.iter().map(|t| t.coeff.as_str()).collect();
    assert_eq!(coeffs, ["1/1", "3/2", "1/2", "1/1"]);
    assert!(record.terms[0].sigma.is_empty());
    assert_eq!(record.terms[2].sigma.get(&1), Some(&2));
    assert_eq!(record.terms[3].sigma.get(&2), Some(&1));
    assert_eq!(serde_json::to_string(&record).unwrap(), stdout.trim());
}

#[test]
fn gamma_latex() {
    let (stdout, _, _) = m0n(&["gamma", "--n", "6", "--format", "latex"]);
    assert!(stdout.starts_with("1+\\frac{11}{6}\\sigma_1+"));
}

#[test]
fn gamma_rejects_small_n() {
    let (stdout, stderr, code) = m0n(&["gamma", "--n", "2"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("at least 3"), "{stderr}");
}

#[test]
fn eval_values() {
    assert_eq!(m0n(&["eval", "--n", "4", "--x", "1,2,3,4"]).0, "11\n");
    assert_eq!(m0n(&["eval", "--n", "7", "--x", "0,0,0,0,0,0,0"]).0, "1\n");
    assert_eq!(m0n(&["eval", "--n", "5", "--x", "1,1,1,1,1"]).0, "31\n");
}

#[test]
fn eval_validation_errors() {
    for args in [
        ["eval", "--n", "4", "--x", "1,2,3"],
        ["eval", "--n", "4", "--x", "1,-2,3,4"],
        ["eval", "--n", "4", "--x", "1,a,3,4"],
        ["eval", "--n", "1", "--x", "0"],
    ] {
        let (stdout, stderr, code) = m0n(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(stdout.is_empty());
        assert!(stderr.starts_with("error:"), "{stderr}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(m0n(&["gamma"]).2, 2);
    assert_eq!(m0n(&["gamma", "--n", "5", "--format", "pdf"]).2, 2);
    assert_eq!(m0n(&["frobnicate"]).2, 2);
}

#[test]
fn verify_defaults() {
    let (stdout, _, code) = m0n(&["verify"]);
    assert_eq!(code, 0, "{stdout}");
    let summary = stdout.lines().last().unwrap();
    assert_eq!(summary, "tables: 6/6 pass; oracle: 9828 points pass");
    assert!(stdout.contains("PASS coefficient of σ5 in γ8 equals 19"));
}

#[test]
fn verify_trivial_and_invalid() {
    let (stdout, _, code) = m0n(&["verify", "--n-max", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("oracle: 27 points pass\n"), "{stdout}");
    assert_eq!(m0n(&["verify", "--n-max", "2"]).2, 2);
}

#[test]
fn verify_with_injected_fault_exits_one() {
    let mut table = reference_table();
    let (_, g8) = &mut table[5];
    let bump = SigmaPoly::monomial(SigmaMonomial::sigma(5), Rational::one());
    *g8 = &*g8 + &bump;
    let out = run_verify(&table, 4, 1);
    assert_eq!(out.code, 1);
    assert!(out
        .stdout
        .contains("FAIL gamma_8 matches table: first divergent monomial σ5"));
    assert!(out.stdout.contains("tables: 5/6 pass"));
    assert!(
        out.stderr.contains("σ5: expected 20, computed 19"),
        "{}",
        out.stderr
    );
}

#[test]
fn table_blocks() {
    let (stdout, _, _) = m0n(&["table", "--n-max", "5"]);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].ends_with("1 + 3/2 σ1 + 1/2 σ1^2 + σ2"));
    assert_eq!(m0n(&["table", "--n-max", "3"]).0, "γ3 = 1\n");

    let (json, _, _) = m0n(&["table", "--n-max", "8", "--format", "json"]);
    let records: Vec<GammaRecord> = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(records.len(), 6);
    assert_eq!(records[5].terms[1].coeff, "137/60");

    let (latex, _, _) = m0n(&["table", "--n-max", "8", "--format", "latex"]);
    assert!(latex
        .lines()
        .last()
        .unwrap()
        .starts_with("\\gamma_{8} = 1+\\frac{137}{60}\\sigma_1"));
}

#[test]
fn output_is_deterministic() {
    let a = m0n(&["table", "--n-max", "7", "--format", "json"]);
    let b = m0n(&["table", "--n-max", "7", "--format", "json"]);
    assert_eq!(a, b);
}
