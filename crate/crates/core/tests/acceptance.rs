//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clifford_typify::algebra::{Blade, Field, GradeSet, Multivector, Operation, Signature};
use clifford_typify::subspace::{
    catalog, closure_check, diff_catalog, enumerate_closed, rank_product_range, wc_domain, CoefficientDomain,
    GradedSubspaceSpec, InteractionTable, Pattern, TheoremId,
};
use clifford_typify::types::{comm_type, verify_type_tables, QuaternionType};
use clifford_typify::unitary::{
    check_group_tables, group_membership, mv_exp, parse_group_table, random_element, verify_theorem4, GROUP_TABLES,
};

const ASSOC_TOL: f64 = 1e-12;
const ASSOC_TRIPLES: usize = 1000;
const GROUP_TOL: f64 = 1e-9;
const GROUP_SAMPLES: usize = 200;
const TABLE_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;

fn signatures(n_max: usize) -> impl Iterator<Item = Signature> {
    (1..=n_max).flat_map(|n| Signature::all_for(n).unwrap())
}

fn random_sparse(sig: Signature, rng: &mut ChaCha8Rng) -> Multivector {
    let terms: Vec<(Blade, Complex64)> = (0..rng.gen_range(1..=8))
        .map(|_| {
            let blade = Blade(rng.gen_range(0..1u32 << sig.n()));
            (blade, Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
        })
        .collect();
    Multivector::from_terms(sig, Field::Complex, terms).unwrap()
}

fn generator_relation_and_associativity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for sig in signatures(6) {
        for a in 1..=sig.n() {
            for b in 1..=sig.n() {
                let ea = Multivector::blade(sig, Field::Real, Blade::generator(a), 1.0).unwrap();
                let eb = Multivector::blade(sig, Field::Real, Blade::generator(b), 1.0).unwrap();
                let eta = if a == b { sig.eta(a - 1) } else { 0.0 };
                let want = Multivector::identity(sig, Field::Real).scale(2.0 * eta);
                if ea.anticommutator(&eb).unwrap() != want {
                    return Err(format!("{sig}: e{a} e{b} + e{b} e{a} != 2 eta e"));
                }
            }
        }
        for _ in 0..ASSOC_TRIPLES {
            let (x, y, z) = (random_sparse(sig, &mut rng), random_sparse(sig, &mut rng), random_sparse(sig, &mut rng));
            let left = x.product(&y).unwrap().product(&z).unwrap();
            let right = x.product(&y.product(&z).unwrap()).unwrap();
            worst = worst.max(left.minus(&right).unwrap().norm_inf());
            cases += 1;
        }
    }
    if worst <= ASSOC_TOL {
        Ok(format!("{cases} triples, worst |(xy)z - x(yz)| = {worst:.1e}"))
    } else {
        Err(format!("associativity error {worst:.1e} > {ASSOC_TOL:e}"))
    }
}

fn type_tables() -> Outcome {
    let fixture = include_str!("../fixtures/commutator_table.txt");
    let rows: Vec<Vec<&str>> = fixture.lines().map(|l| l.split_whitespace().collect()).collect();
    let header = &rows[0][1..];
    let sym = |s: &str| s.parse::<QuaternionType>().unwrap();
    let mut mismatches = Vec::new();
    for row in &rows[1..] {
        for (col, cell) in header.iter().zip(&row[1..]) {
            let got = comm_type(sym(row[0]), sym(col));
            if got != sym(cell) {
                mismatches.push(format!("[{},{}] printed {cell} computed {got}", row[0], col));
            }
        }
    }
    if rows.len() != 16 || header.len() != 15 || !mismatches.is_empty() {
        return Err(format!("printed table mismatch: {mismatches:?}"));
    }
    let mut pairs = 0;
    for sig in signatures(6) {
        let report = verify_type_tables(sig).unwrap();
        if !report.ok() {
            return Err(format!("{sig}: {:?}", &report.violations[..report.violations.len().min(3)]));
        }
        pairs += report.pairs_checked;
    }
    Ok(format!("225 printed cells match; {pairs} blade pairs x 3 tables, 0 violations"))
}

fn rank_range() -> Outcome {
    for n in 1..=8 {
        let mut seen = vec![vec![GradeSet::EMPTY; n + 1]; n + 1];
        for a in 0..1u32 << n {
            for b in 0..1u32 << n {
                let (k, l) = (a.count_ones() as usize, b.count_ones() as usize);
                seen[k][l].insert((a ^ b).count_ones() as usize);
            }
        }
        for k in 0..=n {
            for l in 0..=n {
                let range = rank_product_range(k, l, n).unwrap();
                if seen[k][l] != range {
                    return Err(format!("n={n} ({k},{l}): blades give {{{}}}, range {{{range}}}", seen[k][l]));
                }
            }
        }
        for op in [Operation::Commutator, Operation::Anticommutator] {
            for sig in Signature::all_for(n).unwrap() {
                if !InteractionTable::from_blades(sig, op).unwrap().same_grades(&InteractionTable::from_rule(n, op).unwrap()) {
                    return Err(format!("{sig} {op}: parity rule disagrees with blades"));
                }
            }
        }
    }
    Ok("n <= 8: realizable product grades equal the range; parity rule matches blades for [,] and {,}".into())
}

fn catalogs_closed() -> Outcome {
    let mut checked = 0;
    for t in TheoremId::ALL {
        for field in [Field::Real, Field::Complex] {
            if !t.applies_to(field) {
                continue;
            }
            for n in 1..=10 {
                let specs = catalog(t, n, field).unwrap();
                for sig in Signature::all_for(n).unwrap() {
                    for spec in &specs {
                        let report = closure_check(spec, t.op(), sig).unwrap();
                        if !report.closed {
                            return Err(format!("{t} {sig}: {spec} not closed: {:?}", report.violations[0]));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (spec, signature) pairs closed, 0 violations"))
}

fn enumeration_complete() -> Outcome {
    let mut failures = Vec::new();
    let mut total = 0;
    for (t, field, n_max) in [
        (TheoremId::T9, Field::Real, 6),
        (TheoremId::T11, Field::Real, 6),
        (TheoremId::T10, Field::Complex, 5),
        (TheoremId::T12, Field::Complex, 5),
    ] {
        for n in 1..=n_max {
            let d = diff_catalog(t, n, field, t.op()).unwrap();
            total += d.enumerated_count;
            if !d.is_empty() {
                let missing: Vec<String> = d.missing_from_catalog.iter().map(|s| s.to_string()).collect();
                let extra: Vec<String> =
                    d.missing_from_enumeration.iter().map(|e| format!("{} ({})", e.spec, e.label)).collect();
                failures.push(format!("{t} n={n}: not listed {missing:?}; not closed {extra:?}"));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("T9-T12: {total} closed specs, all diffs empty"))
    } else {
        Err(failures.join("; "))
    }
}

fn count_claim() -> Outcome {
    let even = enumerate_closed(12, Operation::Commutator, Field::Complex, Some(Pattern::Wc)).unwrap().len();
    let odd = enumerate_closed(13, Operation::Commutator, Field::Complex, Some(Pattern::Wc)).unwrap().len();
    let convention = "non-empty wCl-pattern rank sums, reducible (+0 / +n) ones included";
    if (even, odd) == (31, 43) {
        Ok(format!("n=12: {even}, n=13: {odd} ({convention})"))
    } else {
        Err(format!("closest counts n=12: {even}, n=13: {odd} ({convention})"))
    }
}

fn theorem4() -> Outcome {
    let mut pairs = 0;
    for sig in signatures(8) {
        let report = verify_theorem4(sig).unwrap();
        if !report.ok() {
            return Err(format!("{sig}: {:?}", report.violations[0]));
        }
        pairs += report.pairs_checked;
    }
    Ok(format!("{pairs} blade pairs, 0 violations"))
}

fn group_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut samples = 0;
    for sig in signatures(5) {
        let n = sig.n();
        let wc = GradedSubspaceSpec::new(Field::Complex, (0..=n).map(wc_domain).collect()).unwrap();
        for _ in 0..GROUP_SAMPLES {
            let u = random_element(&wc, sig, &mut rng).unwrap();
            let big_u = mv_exp(&u, GROUP_TOL * 1e-3, 500).unwrap();
            if !group_membership(&big_u, GROUP_TOL) {
                return Err(format!("{sig}: exp({u}) fails U*U = e"));
            }
            samples += 1;
        }
    }
    let rows = parse_group_table(GROUP_TABLES).unwrap();
    let checks = check_group_tables(&rows, TABLE_TOL).unwrap();
    if let Some(bad) = checks.iter().find(|c| !c.ok) {
        return Err(format!("table row {} {}: {bad:?}", bad.row.signature, bad.row.generator));
    }
    let typos = rows.iter().filter(|r| r.suspected_typo).count();
    Ok(format!("{samples} exponentials in the group; {} table rows match ({typos} flagged rows matched to the oracle)", rows.len()))
}

fn all_specs(n: usize, field: Field) -> Vec<GradedSubspaceSpec> {
    let choices: &[CoefficientDomain] = match field {
        Field::Real => &[CoefficientDomain::Absent, CoefficientDomain::Real],
        Field::Complex => &CoefficientDomain::ALL,
    };
    let base = choices.len();
    (1..base.pow(n as u32 + 1))
        .map(|mut idx| {
            let mut d = Vec::with_capacity(n + 1);
            for _ in 0..=n {
                d.push(choices[idx % base]);
                idx /= base;
            }
            GradedSubspaceSpec::new(field, d).unwrap()
        })
        .collect()
}

fn signature_independence() -> Outcome {
    let mut compared = 0;
    for n in 1..=6 {
        let sigs = Signature::all_for(n).unwrap();
        for field in [Field::Real, Field::Complex] {
            for spec in all_specs(n, field) {
                for op in Operation::ALL {
                    let reports: BTreeSet<String> = sigs
                        .iter()
                        .map(|&s| serde_json::to_string(&closure_check(&spec, op, s).unwrap()).unwrap())
                        .collect();
                    if reports.len() != 1 {
                        return Err(format!("n={n} {op} {spec}: reports differ across signatures"));
                    }
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} (spec, op) reports byte-identical across signatures"))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("generator relation and associativity", Duration::from_secs(10), generator_relation_and_associativity),
        ("type tables", Duration::from_secs(60), type_tables),
        ("rank range", Duration::from_secs(120), rank_range),
        ("theorem catalogs closed", Duration::from_secs(300), catalogs_closed),
        ("enumeration completeness", Duration::from_secs(300), enumeration_complete),
        ("31/43 count", Duration::from_secs(120), count_claim),
        ("wCl quaternion split", Duration::from_secs(60), theorem4),
        ("group checks", Duration::from_secs(60), group_checks),
        ("signature independence", Duration::from_secs(300), signature_independence),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {}s budget", budget.as_secs())),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {}: {status} {name} ({:.2}s): {detail}", i + 1, elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
