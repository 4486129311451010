use std::process::Command;

use clifford_typify::cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("clifford-typify").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = cli(&full);
    (out.code, serde_json::from_str(&out.stdout).expect("json report"))
}

#[test]
fn eval_examples() {
    assert_eq!(cli(&["eval", "--sig", "2,0", "--field", "r", "e1 comm e2"]).stdout, "2*e12\n");
    assert_eq!(cli(&["eval", "--sig", "2,0", "--field", "r", "e1 anti e2"]).stdout, "0\n");
    assert_eq!(cli(&["eval", "--sig", "0,2", "--field", "r", "e12 * e12"]).stdout, "-e\n");
    assert_eq!(cli(&["eval", "--sig", "1,1", "--field", "r", "e12 * e12"]).stdout, "e\n");
    assert_eq!(cli(&["conj", "--sig", "3,0", "e1 + e12 + e123"]).stdout, "e1 - e12 - e123\n");
    // reversal with complex conjugation: i e1 + e123 is anti-self-conjugate
    assert_eq!(cli(&["conj", "--sig", "3,0", "i*e1 + e123"]).stdout, "-1i*e1 - e123\n");
}

#[test]
fn rank_range_example() {
    assert_eq!(cli(&["rank-range", "3", "2", "4"]).stdout, "1 3\n");
}

#[test]
fn commutator_type_table_matches_fixture() {
    let fixture = include_str!("../fixtures/commutator_table.txt");
    let out = cli(&["type-table", "--op", "comm"]);
    let norm = |s: &str| s.lines().map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).collect::<Vec<_>>();
    // the fixture omits the absent-type row and column
    let ours: Vec<String> = norm(&out.stdout)
        .into_iter()
        .filter(|l| !l.starts_with('-'))
        .map(|l| l.split(' ').enumerate().filter(|&(i, _)| i != 1).map(|(_, t)| t).collect::<Vec<_>>().join(" "))
        .collect();
    assert_eq!(ours, norm(fixture));
}

#[test]
fn type_tables_hold_for_every_signature() {
    let out = cli(&["verify", "--theorem", "tables", "--n", "4", "--all-signatures"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.ends_with("status: ok\n"));
}

#[test]
fn wc_enumeration_counts() {
    let (code, v) = json(&["enumerate", "--n", "12", "--op", "comm", "--field", "c", "--pattern", "wc"]);
    assert_eq!((code, v["payload"]["count"].as_u64()), (0, Some(31)));
    let out = cli(&["enumerate", "--n", "13", "--op", "comm", "--field", "c", "--pattern", "wc"]);
    assert!(out.stdout.ends_with("count: 43\nstatus: ok\n"), "{}", out.stdout);
}

#[test]
fn closure_reports_violation() {
    let (code, v) = json(&["closure", "--n", "3", "--op", "comm", "--field", "r", "--spec", "1:r"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "violations");
    assert_eq!(v["payload"]["closed"], false);
    let first = &v["payload"]["violations"][0];
    assert_eq!((first["left_rank"].as_u64(), first["right_rank"].as_u64(), first["result_rank"].as_u64()), (Some(1), Some(1), Some(2)));
}

#[test]
fn closure_accepts_full_spec_line() {
    let out = cli(&["closure", "--n", "3", "--op", "comm", "--field", "c", "--spec", "n=3 field=complex 0:i 1:- 2:r 3:-"]);
    assert_eq!(out.code, 0);
    let out = cli(&["closure", "--n", "4", "--op", "comm", "--field", "c", "--spec", "n=3 field=complex 2:r"]);
    assert_eq!(out.code, 2);
}

#[test]
fn catalog_theorems_verify() {
    for t in ["T1", "T2", "T3", "T8", "T9", "T10", "T11", "T12", "T13"] {
        let out = cli(&["verify", "--theorem", t, "--n", "4", "--all-signatures"]);
        assert_eq!(out.code, 0, "{t}\n{}", out.stdout);
    }
}

#[test]
fn group_theorems_verify() {
    for t in ["T4", "T5", "T6", "T7", "groups"] {
        let out = cli(&["verify", "--theorem", t, "--n", "3", "--all-signatures", "--seed", "7"]);
        assert_eq!(out.code, 0, "{t}\n{}", out.stdout);
    }
}

#[test]
fn verify_reports_are_seeded() {
    let a = cli(&["verify", "--theorem", "T5", "--n", "3", "--seed", "11"]);
    let b = cli(&["verify", "--theorem", "T5", "--n", "3", "--seed", "11"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    // malformed input
    assert_eq!(cli(&["eval", "--sig", "2,0", "e1 +"]).code, 2);
    assert_eq!(cli(&["eval", "--sig", "2,0", "--field", "r", "2i*e1"]).code, 2);
    assert_eq!(cli(&["eval", "--sig", "40,0", "e1"]).code, 2);
    assert_eq!(cli(&["verify", "--theorem", "T99", "--n", "3"]).code, 2);
    assert_eq!(cli(&["enumerate", "--n", "3", "--op", "comm", "--field", "r", "--pattern", "wc"]).code, 2);
    // internal limits
    assert_eq!(cli(&["enumerate", "--n", "14", "--op", "comm", "--field", "r"]).code, 3);
    assert_eq!(cli(&["verify", "--theorem", "tables", "--n", "9"]).code, 3);
}

#[test]
fn json_errors_are_reports() {
    let (code, v) = json(&["eval", "--sig", "2,0", "e3"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert!(v["error"].as_str().unwrap().contains("e3"), "{v}");
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = json(&["--timing", "rank-range", "1", "1", "2"]);
    assert!(v["timing_ms"].as_f64().unwrap() >= 0.0);
    assert!(cli(&["--timing", "rank-range", "1", "1", "2"]).stdout.contains("time: "));
}

#[test]
fn binary_honours_thread_variable() {
    let bin = env!("CARGO_BIN_EXE_clifford-typify");
    let out = Command::new(bin)
        .args(["enumerate", "--n", "6", "--op", "comm", "--field", "r"])
        .env("CLIFFORD_TYPIFY_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let single = Command::new(bin)
        .args(["enumerate", "--n", "6", "--op", "comm", "--field", "r"])
        .env("CLIFFORD_TYPIFY_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.stdout, single.stdout);
    let bad = Command::new(bin).args(["rank-range", "1", "1", "2"]).env("CLIFFORD_TYPIFY_THREADS", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("CLIFFORD_TYPIFY_THREADS"));
}
