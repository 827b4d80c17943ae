//! Runs the binary and parses every output back through the library types.

use std::process::Command;

use repgrowth::bounds::{BoundReport, BoundValue};
use repgrowth_cli::commands::{EnumerationCsvRow, EnumerationRow, EnumerationTable, MullineuxReport, WitnessReport};
use repgrowth_cli::output::{record_from_csv, table_from_csv, ErrorReport};
use repgrowth_cli::verify::{CheckCsvRow, CheckVerdict, VerificationSuite};

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_repgrowth"))
        .args(args)
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap_or(-1))
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> (T, i32) {
    let (out, code) = run(args);
    (serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")), code)
}

#[test]
fn bound_examples() {
    let (r, code): (BoundReport, _) = json(&["bound", "--family", "A", "--rank", "5", "--n", "1000", "--p", "7"]);
    assert_eq!(code, 0);
    assert_eq!(r.formula, "n^2.5");
    let v = r.value.to_interval(256).unwrap();
    assert!((v.midpoint_f64() / 1000f64.powf(2.5) - 1.0).abs() < 1e-12);

    let (r, _): (BoundReport, _) = json(&["bound", "--family", "C", "--rank", "2", "--n", "3", "--p", "3"]);
    assert_eq!(r.formula, "n^2");
    assert_eq!(r.value, BoundValue::exact(9u32));
    assert!(r.guard_detail.contains("n < 4"), "{}", r.guard_detail);

    let (r, _): (BoundReport, _) = json(&["bound", "--family", "B", "--rank", "3", "--n", "1", "--p", "5"]);
    assert_eq!(r.value, BoundValue::exact(1u32));
}

#[test]
fn bound_csv_roundtrips() {
    let args = ["bound", "--family", "E", "--rank", "7", "--n", "60", "--p", "5"];
    let (j, _): (BoundReport, _) = json(&args);
    let (csv, code) = run(&[&args[..], &["--format", "csv"]].concat());
    assert_eq!(code, 0);
    let back: BoundReport = record_from_csv(&csv).unwrap();
    assert_eq!(back, j);
}

#[test]
fn usage_errors_exit_nonzero() {
    let (_, code) = run(&["bound", "--family", "Q", "--rank", "2", "--n", "3", "--p", "3"]);
    assert_ne!(code, 0);
    let (_, code) = run(&["bound", "--family", "A", "--rank", "2", "--n", "3"]);
    assert_ne!(code, 0);
    let (e, code): (ErrorReport, _) = json(&["bound", "--family", "E", "--rank", "5", "--n", "3", "--p", "3"]);
    assert_eq!(code, 1);
    assert_eq!(e.error, "invalid-rank");
    let (_, code) = run(&["verify", "--suite", "char2", "--prec", "4096"]);
    assert_ne!(code, 0);
}

#[test]
fn witness_examples() {
    let (w, code): (WitnessReport, _) = json(&["witness", "middle2", "--rank", "3", "--weight", "2,0,1"]);
    assert_eq!(code, 0);
    assert!(w.chain.target.coeffs()[1] > 0);
    assert_eq!(w.bracket_source, w.bracket_target);
    assert!(w.verified());

    let (w, _): (WitnessReport, _) = json(&["witness", "good", "--rank", "2", "--weight", "2,2"]);
    assert!(w.chain.target.coeffs().iter().all(|&a| a > 0));

    let (e, code): (ErrorReport, _) = json(&["witness", "incr", "--rank", "3", "--weight", "1,0,0", "--m", "1"]);
    assert_eq!(code, 1);
    assert_eq!(e.hypothesis.as_deref(), Some("sum_{i<=m} i*a_i > m"));

    let (e, _): (ErrorReport, _) = json(&["witness", "middle", "--rank", "3", "--weight", "1,0,0"]);
    assert!(e.message.contains("--m"));
}

#[test]
fn witness_a5_family() {
    let args = ["witness", "a5", "--rank", "5", "--weight", "0,0,26,0,0"];
    let (w, code): (WitnessReport, _) = json(&args);
    assert_eq!(code, 0);
    let fam = w.family.clone().unwrap();
    assert_eq!(fam.orbit_total, BoundValue::exact(174_960u32));
    assert_eq!(fam.distinct_good_members, BoundValue::exact(243u32));
    let (csv, _) = run(&[&args[..], &["--format", "csv"]].concat());
    assert_eq!(record_from_csv::<WitnessReport>(&csv).unwrap(), w);
}

#[test]
fn enumerate_examples() {
    let (t, code): (EnumerationTable, _) =
        json(&["enumerate", "--family", "A", "--rank", "1", "--p", "7", "--n-max", "7", "--bound", "nlambda"]);
    assert_eq!(code, 0);
    let counts: Vec<_> = t.rows.iter().map(|r| r.count.clone().unwrap()).collect();
    let want: Vec<_> = [2u32, 2, 4, 4, 6, 6, 7].into_iter().map(BoundValue::exact).collect();
    assert_eq!(counts, want);

    let args = ["enumerate", "--family", "A", "--rank", "2", "--p", "3", "--n-max", "10", "--bound", "premet"];
    let (t, _): (EnumerationTable, _) = json(&args);
    let last = t.rows.last().unwrap();
    let count = last.count.as_ref().unwrap().as_exact().unwrap().clone();
    assert!(count <= 10u32.pow(4).into());
    let (csv, _) = run(&[&args[..], &["--format", "csv"]].concat());
    let rows: Vec<EnumerationRow> = table_from_csv::<EnumerationCsvRow>(&csv)
        .unwrap()
        .into_iter()
        .map(|r| r.try_into().unwrap())
        .collect();
    assert_eq!(rows, t.rows);

    let (t, _): (EnumerationTable, _) =
        json(&["enumerate", "--family", "B", "--rank", "3", "--p", "5", "--n-max", "0", "--bound", "premet"]);
    assert!(t.rows.is_empty());
}

#[test]
fn enumerate_reports_cap_per_row() {
    let (t, code): (EnumerationTable, _) = json(&[
        "enumerate", "--family", "A", "--rank", "2", "--p", "5", "--n-max", "8", "--bound", "premet", "--cap", "4",
    ]);
    assert_eq!(code, 0);
    assert!(t.rows[..4].iter().all(|r| r.count.is_some() && r.error.is_none()));
    assert!(t.rows[4..].iter().all(|r| r.count.is_none() && r.error.is_some()));
}

#[test]
fn mullineux_examples() {
    let (m, code): (MullineuxReport, _) = json(&["mullineux", "--p", "0", "--partition", "3,2"]);
    assert_eq!(code, 0);
    assert_eq!(m.image.parts(), &[2, 2, 1]);
    let (m, _): (MullineuxReport, _) = json(&["mullineux", "--p", "2", "--partition", "4,3,1"]);
    assert_eq!(m.image.parts(), &[4, 3, 1]);
    let (e, code): (ErrorReport, _) = json(&["mullineux", "--p", "3", "--partition", "2,2,2"]);
    assert_eq!(code, 1);
    assert_eq!(e.repeated_part, Some(2));
    let (csv, _) = run(&["mullineux", "--p", "5", "--partition", "6,3,3,1", "--format", "csv"]);
    let m: MullineuxReport = record_from_csv(&csv).unwrap();
    assert!(m.involution);
}

#[test]
fn verify_suites_roundtrip() {
    let (s, code): (VerificationSuite, _) = json(&["verify", "--suite", "partitions"]);
    assert_eq!(code, 0);
    let c = s.get("partitions.p21").unwrap();
    assert_eq!(c.verdict, CheckVerdict::Pass);
    assert_eq!(c.anchor, "p(21) = 792");

    let (csv, code) = run(&["verify", "--suite", "partitions", "--format", "csv"]);
    assert_eq!(code, 0);
    let back = VerificationSuite::from_csv_rows(table_from_csv::<CheckCsvRow>(&csv).unwrap()).unwrap();
    assert_eq!(back, s);
}

#[test]
fn verify_examples() {
    let (s, code): (VerificationSuite, _) = json(&["verify", "--suite", "typeA"]);
    assert_eq!(code, 0);
    assert_eq!(s.get("typeA.a5-orbit-total").unwrap().anchor, "3^5 · 720 = 174,960");
    assert_eq!(s.get("typeA.a5-orbit-total").unwrap().verdict, CheckVerdict::Pass);
    let (s, _): (VerificationSuite, _) = json(&["verify", "--suite", "nonA"]);
    assert_eq!(s.get("nonA.zeta-C").unwrap().verdict, CheckVerdict::Pass);
}

#[test]
fn verify_all_is_deterministic_and_sorted() {
    let (a, code) = run(&["verify", "--suite", "all", "--scale", "desk"]);
    let (b, _) = run(&["verify", "--suite", "all", "--scale", "desk"]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let s: VerificationSuite = serde_json::from_str(&a).unwrap();
    assert!(s.checks.windows(2).all(|w| w[0].id < w[1].id));
    for c in &s.checks {
        assert_eq!(c.anchor, repgrowth_cli::verify::anchor(&c.id));
    }
}
