//! Command-line front end. [`run`] parses arguments, dispatches, and renders
//! one report as text or JSON; `main` only prints it.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{parse_binary, parse_multivector, Field, GradeSet, Operation, Signature};
use crate::error::{Error, Result};
use crate::parallel;
use crate::subspace::{
    catalog_entries, closure_check, diff_catalog, enumerate_closed, grade_interaction, rank_product_range, wc_domain,
    GradedSubspaceSpec, Pattern, TheoremId,
};
use crate::types::{verify_type_tables, TypeTable};
use crate::unitary::{
    check_group_tables, group_membership, mv_exp, parse_group_table, random_element, verify_theorem4,
    verify_theorem5_13, DEFAULT_MAX_TERMS, DEFAULT_TOL, GROUP_TABLES,
};

#[derive(Parser, Debug)]
#[command(name = "clifford-typify", version, about = "Clifford algebra arithmetic, quaternion types and closed graded subspaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate `EXPR [OP EXPR]` with OP one of `*`, `comm`, `anti`.
    Eval {
        #[arg(long, value_parser = parse_signature)]
        sig: Signature,
        #[arg(long, default_value = "c")]
        field: Field,
        expr: String,
    },
    /// Clifford conjugate of an expression.
    Conj {
        #[arg(long, value_parser = parse_signature)]
        sig: Signature,
        #[arg(long, default_value = "c")]
        field: Field,
        expr: String,
    },
    /// Quaternion type table of an operation.
    TypeTable {
        #[arg(long)]
        op: Operation,
    },
    /// Ranks of the product of rank-K and rank-L elements in dimension N;
    /// with --op comm|anti only the ranks those operations reach.
    RankRange {
        k: usize,
        l: usize,
        n: usize,
        #[arg(long)]
        op: Option<Operation>,
    },
    /// Check a graded subspace for closure.
    Closure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        op: Operation,
        #[arg(long, default_value = "c")]
        field: Field,
        /// Rank domains, e.g. "0:i 2:r 3:r" (absent ranks may be omitted).
        #[arg(long)]
        spec: String,
    },
    /// List every closed graded subspace.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        op: Operation,
        #[arg(long, default_value = "c")]
        field: Field,
        /// Restrict candidates: `wc` (wCl coefficient pattern) or `type`
        /// (domain depends on rank mod 4).
        #[arg(long)]
        pattern: Option<Pattern>,
    },
    /// Verify a theorem (T1-T13), the type tables, or the group tables.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Repeat for every (p, q) with p + q = n.
        #[arg(long)]
        all_signatures: bool,
        /// Restrict catalog theorems to one field.
        #[arg(long)]
        field: Option<Field>,
        /// Seed for random samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_signature(s: &str) -> std::result::Result<Signature, String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected p,q, got '{s}'"))?;
    let p = p.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let q = q.trim().parse::<usize>().map_err(|e| e.to_string())?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violations,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violations => "violations",
            Status::Error => "error",
        }
    }
}

/// The document emitted for one invocation.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// What [`run`] produced: the process exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error: 3 for internal limits, 2 for everything the user
/// can fix in the input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded(_) | Error::Convergence { .. } => 3,
        _ => 2,
    }
}

struct Rendered {
    status: Status,
    payload: Value,
    text: String,
    /// Whether the text form ends with a `status:` line.
    status_line: bool,
}

impl Rendered {
    fn plain(payload: Value, text: String) -> Self {
        Self { status: Status::Ok, payload, text, status_line: false }
    }

    fn checked(ok: bool, payload: Value, text: String) -> Self {
        let status = if ok { Status::Ok } else { Status::Violations };
        Self { status, payload, text, status_line: true }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let command = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let result = parallel::configured_threads().and_then(|_| dispatch(&cli.command));
    let timing_ms = cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3);

    match result {
        Ok(r) => {
            let code = if r.status == Status::Ok { 0 } else { 1 };
            let stdout = match cli.format {
                Format::Json => {
                    let report = Report { command, status: r.status, payload: r.payload, error: None, timing_ms };
                    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
                }
                Format::Text => {
                    let mut out = r.text;
                    if r.status_line {
                        let _ = writeln!(out, "status: {}", r.status.as_str());
                    }
                    if let Some(ms) = timing_ms {
                        let _ = writeln!(out, "time: {ms:.1} ms");
                    }
                    out
                }
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Json => {
                    let report =
                        Report { command, status: Status::Error, payload: Value::Null, error: Some(e.to_string()), timing_ms };
                    let stdout = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
                    Outcome { code, stdout, stderr: String::new() }
                }
                Format::Text => Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") },
            }
        }
    }
}

fn dispatch(command: &Command) -> Result<Rendered> {
    match command {
        Command::Eval { sig, field, expr } => {
            let (lhs, rest) = parse_binary(expr, *sig, *field)?;
            let value = match rest {
                Some((op, rhs)) => op.apply(&lhs, &rhs)?,
                None => lhs,
            };
            let text = value.to_string();
            Ok(Rendered::plain(json!({ "signature": sig, "field": field, "result": text }), text + "\n"))
        }
        Command::Conj { sig, field, expr } => {
            let value = parse_multivector(expr, *sig, *field)?.clifford_conjugate();
            let text = value.to_string();
            Ok(Rendered::plain(json!({ "signature": sig, "field": field, "result": text }), text + "\n"))
        }
        Command::TypeTable { op } => {
            let table = TypeTable::new(*op);
            Ok(Rendered::plain(json!({ "op": op, "entries": table.entries() }), table.to_grid()))
        }
        Command::RankRange { k, l, n, op } => {
            let ranks: GradeSet = match op {
                None | Some(Operation::Product) => rank_product_range(*k, *l, *n)?,
                Some(op) => grade_interaction(*k, *l, *n, *op)?,
            };
            let op = op.unwrap_or(Operation::Product);
            Ok(Rendered::plain(json!({ "k": k, "l": l, "n": n, "op": op, "ranks": ranks }), format!("{ranks}\n")))
        }
        Command::Closure { n, op, field, spec } => {
            let spec = parse_spec_arg(spec, *n, *field)?;
            let report = closure_check(&spec, *op, Signature::euclidean(*n)?)?;
            let mut text = format!("{}\nop: {}\nclosed: {}\n", report.spec, op, if report.closed { "yes" } else { "no" });
            for v in &report.violations {
                let _ = writeln!(
                    text,
                    "violation: ranks {} x {} -> {} needs {}, has {} (witness {}, {})",
                    v.left_rank,
                    v.right_rank,
                    v.result_rank,
                    v.required.symbol(),
                    v.available.symbol(),
                    v.witness.left,
                    v.witness.right
                );
            }
            Ok(Rendered::checked(report.closed, to_value(&report), text))
        }
        Command::Enumerate { n, op, field, pattern } => {
            let specs = enumerate_closed(*n, *op, *field, *pattern)?;
            let mut text = String::new();
            for s in &specs {
                let _ = writeln!(text, "{s}");
            }
            let _ = writeln!(text, "count: {}", specs.len());
            let payload = json!({ "n": n, "op": op, "field": field, "count": specs.len(), "specs": specs });
            Ok(Rendered::checked(true, payload, text))
        }
        Command::Verify { theorem, n, p, q, all_signatures, field, seed } => {
            let sigs = verify_signatures(*n, *p, *q, *all_signatures)?;
            match theorem.to_ascii_lowercase().as_str() {
                "tables" => verify_tables(&sigs),
                "groups" => verify_groups(*n, &sigs, *seed),
                "t4" | "4" => verify_t4(&sigs),
                "t5" | "5" | "t6" | "6" => verify_t5(&sigs, *seed),
                "t7" | "7" => verify_t7(*n),
                _ => {
                    let t: TheoremId = theorem.parse()?;
                    verify_catalog(t, *n, &sigs, *field)
                }
            }
        }
    }
}

/// Accepts a full spec line or just the rank tokens.
fn parse_spec_arg(text: &str, n: usize, field: Field) -> Result<GradedSubspaceSpec> {
    let spec: GradedSubspaceSpec = if text.contains("n=") {
        text.parse()?
    } else {
        format!("n={n} field={field} {text}").parse()?
    };
    if spec.n() != n || spec.field() != field {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("spec is for n={} field={}, but --n {n} --field {field} was given", spec.n(), spec.field()),
        });
    }
    Ok(spec)
}

fn verify_signatures(n: usize, p: Option<usize>, q: Option<usize>, all: bool) -> Result<Vec<Signature>> {
    let sig = match (p, q) {
        (None, None) => Signature::euclidean(n)?,
        (Some(p), None) => Signature::new(p, n.checked_sub(p).ok_or(Error::InvalidSignature { p, q: 0, max: n })?)?,
        (None, Some(q)) => Signature::new(n.checked_sub(q).ok_or(Error::InvalidSignature { p: 0, q, max: n })?, q)?,
        (Some(p), Some(q)) => Signature::new(p, q)?,
    };
    if sig.n() != n {
        return Err(Error::SignatureMismatch { left: format!("n = {n}"), right: format!("p + q = {}", sig.n()) });
    }
    if all {
        Signature::all_for(n)
    } else {
        Ok(vec![sig])
    }
}

fn verify_tables(sigs: &[Signature]) -> Result<Rendered> {
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for &sig in sigs {
        let r = verify_type_tables(sig)?;
        let _ = writeln!(text, "{sig}: {} blade pairs, {} violations", r.pairs_checked, r.violations.len());
        for v in r.violations.iter().take(10) {
            let _ = writeln!(text, "  {} {} {}: {} not in {}", v.op, v.left, v.right, v.result_type, v.allowed);
        }
        ok &= r.ok();
        reports.push(json!({ "signature": sig, "report": r }));
    }
    Ok(Rendered::checked(ok, json!({ "check": "tables", "signatures": reports }), text))
}

fn verify_t4(sigs: &[Signature]) -> Result<Rendered> {
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for &sig in sigs {
        let r = verify_theorem4(sig)?;
        let _ = writeln!(text, "{sig}: {} blade pairs, {} violations", r.pairs_checked, r.violations.len());
        for v in r.violations.iter().take(10) {
            let _ = writeln!(text, "  {} x {} should land in part {}", v.left, v.right, v.expected_part);
        }
        ok &= r.ok();
        reports.push(json!({ "signature": sig, "report": r }));
    }
    Ok(Rendered::checked(ok, json!({ "check": "T4", "signatures": reports }), text))
}

fn verify_t5(sigs: &[Signature], seed: u64) -> Result<Rendered> {
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for &sig in sigs {
        let r = verify_theorem5_13(sig, seed)?;
        let _ = writeln!(text, "{sig}: {} subalgebras", r.checks.len());
        for c in &r.checks {
            let _ = writeln!(
                text,
                "  {:<16} {}  wc={} closed={} exp={}/{} eps={}/{}",
                c.source,
                c.spec,
                yes_no(c.in_wc),
                yes_no(c.closed),
                c.exp_samples - c.exp_failures,
                c.exp_samples,
                c.epsilon_checks - c.epsilon_failures,
                c.epsilon_checks
            );
        }
        ok &= r.ok();
        reports.push(json!({ "signature": sig, "report": r }));
    }
    Ok(Rendered::checked(ok, json!({ "check": "T5", "signatures": reports }), text))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Realisable product ranks from a blade scan against the closed-form range.
fn verify_t7(n: usize) -> Result<Rendered> {
    if n > crate::types::EXHAUSTIVE_MAX_N {
        return Err(Error::LimitExceeded(format!("blade scan needs n <= {}, got {n}", crate::types::EXHAUSTIVE_MAX_N)));
    }
    Signature::euclidean(n)?;
    let mut seen = vec![vec![GradeSet::EMPTY; n + 1]; n + 1];
    for a in 0..1u32 << n {
        for b in 0..1u32 << n {
            seen[a.count_ones() as usize][b.count_ones() as usize].insert((a ^ b).count_ones() as usize);
        }
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for (k, row) in seen.iter().enumerate() {
        for (l, &got) in row.iter().enumerate().skip(k) {
            let range = rank_product_range(k, l, n)?;
            let matches = got == range;
            ok &= matches;
            let _ = writeln!(text, "{k} x {l}: {range}{}", if matches { "" } else { "  MISMATCH" });
            rows.push(json!({ "k": k, "l": l, "range": range, "realized": got, "ok": matches }));
        }
    }
    Ok(Rendered::checked(ok, json!({ "check": "T7", "n": n, "pairs": rows }), text))
}

fn verify_groups(n: usize, sigs: &[Signature], seed: u64) -> Result<Rendered> {
    const SAMPLES: usize = 200;
    const TABLE_TOL: f64 = 1e-12;
    let rows: Vec<_> = parse_group_table(GROUP_TABLES)?.into_iter().filter(|r| sigs.contains(&r.signature)).collect();
    let checks = check_group_tables(&rows, TABLE_TOL)?;
    let mut ok = true;
    let mut text = String::new();
    for c in &checks {
        ok &= c.ok;
        let printed = match (c.printed_error, c.row.suspected_typo) {
            (None, _) => "no closed form printed".to_string(),
            (Some(d), true) => format!("printed form off by {d:.1e} (flagged typo)"),
            (Some(d), false) => format!("printed form off by {d:.1e}"),
        };
        let _ = writeln!(
            text,
            "{} exp(phi*{}): exp error {:.1e}, {printed}{}",
            c.row.signature,
            c.row.generator,
            c.exp_error,
            if c.ok { "" } else { "  FAIL" }
        );
    }
    let mut samples = Vec::new();
    if n <= crate::unitary::EXP_SAMPLE_MAX_N {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for &sig in sigs {
            let wc = GradedSubspaceSpec::new(Field::Complex, (0..=n).map(wc_domain).collect())?;
            let mut worst = 0.0f64;
            let mut failures = 0;
            for _ in 0..SAMPLES {
                let u = random_element(&wc, sig, &mut rng)?;
                let big_u = mv_exp(&u, DEFAULT_TOL * 1e-3, DEFAULT_MAX_TERMS)?;
                if !group_membership(&big_u, DEFAULT_TOL) {
                    failures += 1;
                }
                let e = crate::algebra::Multivector::identity(sig, Field::Complex);
                worst = worst.max(big_u.clifford_conjugate().product(&big_u)?.minus(&e)?.norm_inf());
            }
            ok &= failures == 0;
            let _ = writeln!(text, "{sig}: {SAMPLES} random exponentials, {failures} outside the group (max |U*U - e| = {worst:.1e})");
            samples.push(json!({ "signature": sig, "samples": SAMPLES, "failures": failures, "max_residual": worst }));
        }
    }
    Ok(Rendered::checked(ok, json!({ "check": "groups", "n": n, "table_rows": checks, "random": samples }), text))
}

fn verify_catalog(t: TheoremId, n: usize, sigs: &[Signature], field: Option<Field>) -> Result<Rendered> {
    let fields: Vec<Field> = match field {
        Some(f) => vec![f],
        None => [Field::Real, Field::Complex].into_iter().filter(|&f| t.applies_to(f)).collect(),
    };
    // T9-T13 claim completeness; the earlier lists are a selection
    let complete = matches!(t, TheoremId::T9 | TheoremId::T10 | TheoremId::T11 | TheoremId::T12 | TheoremId::T13);
    let mut ok = true;
    let mut text = String::new();
    let mut per_field = Vec::new();
    for f in fields {
        let entries = catalog_entries(t, n, f)?;
        let mut failures = Vec::new();
        for &sig in sigs {
            for e in &entries {
                let r = closure_check(&e.spec, t.op(), sig)?;
                if !r.closed {
                    failures.push(json!({ "signature": sig, "label": e.label, "report": r }));
                }
            }
        }
        let diff = diff_catalog(t, n, f, t.op())?;
        ok &= failures.is_empty() && (!complete || diff.is_empty());
        let sig_list = sigs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(text, "{t} n={n} field={f} op={} signatures {sig_list}", t.op());
        for e in &entries {
            let label = match &e.augmentation {
                Some(a) => format!("{} +{a}", e.label),
                None => e.label.clone(),
            };
            let _ = writeln!(text, "  {label:<14} {}", e.spec);
        }
        let _ = writeln!(text, "catalog: {} specs, {} closure failures", entries.len(), failures.len());
        let _ = writeln!(
            text,
            "enumeration: {} closed specs, {} not listed, {} listed but not closed{}",
            diff.enumerated_count,
            diff.missing_from_catalog.len(),
            diff.missing_from_enumeration.len(),
            if complete { "" } else { " (list not claimed complete)" }
        );
        for s in &diff.missing_from_catalog {
            let _ = writeln!(text, "  not listed: {s}");
        }
        for e in &diff.missing_from_enumeration {
            let _ = writeln!(text, "  not closed: {} ({})", e.spec, e.label);
        }
        per_field.push(json!({
            "field": f,
            "entries": entries,
            "closure_failures": failures,
            "diff": diff,
            "diff_must_be_empty": complete,
        }));
    }
    let payload = json!({ "check": t, "n": n, "op": t.op(), "signatures": sigs, "fields": per_field });
    Ok(Rendered::checked(ok, payload, text))
}
