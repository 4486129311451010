use serde::Serialize;

use super::domain::{CoefficientDomain, GradedSubspaceSpec};
use super::interaction::{InteractionTable, Witness};
use crate::algebra::{Operation, Signature};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureViolation {
    pub left_rank: usize,
    pub right_rank: usize,
    pub result_rank: usize,
    pub required: CoefficientDomain,
    pub available: CoefficientDomain,
    pub witness: Witness,
}

/// Outcome of a closure check. `closed` holds exactly when `violations` is
/// empty. The signature is not part of the report: the result is the same
/// for every `(p, q)` with equal `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub spec: GradedSubspaceSpec,
    pub op: Operation,
    pub closed: bool,
    pub violations: Vec<ClosureViolation>,
}

/// Checks whether `op` maps the spec into itself.
///
/// Since `op(a e^A, b e^B) = a b c e^C` with `c` real, closure reduces to:
/// for all present ranks `k <= l` and every rank `m` that `op` realises
/// from them, `D_m` contains `D_k * D_l`.
pub fn closure_check(spec: &GradedSubspaceSpec, op: Operation, sig: Signature) -> Result<ClosureReport> {
    if spec.n() != sig.n() {
        return Err(Error::SignatureMismatch {
            left: format!("spec n={}", spec.n()),
            right: format!("signature {sig} (n={})", sig.n()),
        });
    }
    let table = InteractionTable::for_signature(sig, op)?;
    closure_check_with(spec, &table)
}

/// [`closure_check`] against a prebuilt interaction table.
pub fn closure_check_with(spec: &GradedSubspaceSpec, table: &InteractionTable) -> Result<ClosureReport> {
    if spec.n() != table.n() {
        return Err(Error::SignatureMismatch {
            left: format!("spec n={}", spec.n()),
            right: format!("table n={}", table.n()),
        });
    }
    let present: Vec<usize> = spec.present_ranks().collect();
    let mut violations = Vec::new();
    for (i, &k) in present.iter().enumerate() {
        for &l in &present[i..] {
            let required = spec.domain(k).mul(spec.domain(l));
            for m in table.realizable(k, l).iter() {
                let available = spec.domain(m);
                if !available.contains(required) {
                    let witness = table.witness(k, l, m).expect("every realizable grade has a witness");
                    violations.push(ClosureViolation {
                        left_rank: k,
                        right_rank: l,
                        result_rank: m,
                        required,
                        available,
                        witness,
                    });
                }
            }
        }
    }
    Ok(ClosureReport { spec: spec.clone(), op: table.op(), closed: violations.is_empty(), violations })
}

/// Allocation-free variant used by enumeration.
pub(crate) fn is_closed(domains: &[CoefficientDomain], table: &InteractionTable) -> bool {
    for k in 0..domains.len() {
        let dk = domains[k];
        if !dk.is_present() {
            continue;
        }
        for l in k..domains.len() {
            let required = dk.mul(domains[l]);
            if required == CoefficientDomain::Absent {
                continue;
            }
            let grades = table.realizable(k, l);
            if grades.iter().any(|m| !domains[m].contains(required)) {
                return false;
            }
        }
    }
    true
}
