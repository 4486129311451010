use rayon::prelude::*;

use super::closure::is_closed;
use super::domain::{wc_domain, CoefficientDomain, GradedSubspaceSpec};
use super::interaction::InteractionTable;
use crate::algebra::{Field, Operation, Signature};
use crate::error::{Error, Result};
use crate::parallel;

/// Largest `n` for real-field (or pattern-restricted) enumeration: `2^{n+1}`
/// candidates.
pub const REAL_MAX_N: usize = 13;
/// Largest `n` for unrestricted complex enumeration: `4^{n+1}` candidates.
pub const COMPLEX_MAX_N: usize = 10;

/// Restriction of the candidate space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Each rank absent or carrying the wCl coefficient domain.
    Wc,
    /// Domain depends only on the rank mod 4.
    TypeUniform,
}

impl std::str::FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wc" => Ok(Pattern::Wc),
            "type" => Ok(Pattern::TypeUniform),
            other => Err(Error::Parse { pos: 0, msg: format!("unknown pattern '{other}'") }),
        }
    }
}

fn field_choices(field: Field) -> &'static [CoefficientDomain] {
    match field {
        Field::Real => &[CoefficientDomain::Absent, CoefficientDomain::Real],
        Field::Complex => &CoefficientDomain::ALL,
    }
}

/// Every non-empty closed spec in canonical (lexicographic) order.
///
/// Closure depends only on `n`, so the Euclidean signature is used; see
/// [`enumerate_with`] for an explicit signature.
pub fn enumerate_closed(
    n: usize,
    op: Operation,
    field: Field,
    pattern: Option<Pattern>,
) -> Result<Vec<GradedSubspaceSpec>> {
    enumerate_with(Signature::euclidean(n)?, op, field, pattern)
}

pub fn enumerate_with(
    sig: Signature,
    op: Operation,
    field: Field,
    pattern: Option<Pattern>,
) -> Result<Vec<GradedSubspaceSpec>> {
    let n = sig.n();
    let cap = match (field, pattern) {
        (_, Some(Pattern::TypeUniform)) => crate::algebra::MAX_DIM,
        (Field::Real, _) | (_, Some(Pattern::Wc)) => REAL_MAX_N,
        (Field::Complex, None) => COMPLEX_MAX_N,
    };
    if n > cap {
        return Err(Error::LimitExceeded(format!("enumeration of {field} specs supports n <= {cap}, got {n}")));
    }
    if pattern == Some(Pattern::Wc) && field != Field::Complex {
        return Err(Error::FieldMismatch("the wc pattern needs the complex field".into()));
    }
    let table = InteractionTable::for_signature(sig, op)?;

    if pattern == Some(Pattern::TypeUniform) {
        let choices = field_choices(field);
        let mut out: Vec<GradedSubspaceSpec> = Vec::new();
        for idx in 0..choices.len().pow(4) {
            let mut by_residue = [CoefficientDomain::Absent; 4];
            let mut rest = idx;
            for slot in by_residue.iter_mut().rev() {
                *slot = choices[rest % choices.len()];
                rest /= choices.len();
            }
            let spec = GradedSubspaceSpec::from_type_pattern(n, field, by_residue)?;
            if !spec.is_empty() && is_closed(spec.domains(), &table) {
                out.push(spec);
            }
        }
        out.sort();
        out.dedup();
        return Ok(out);
    }

    let per_rank: Vec<Vec<CoefficientDomain>> = (0..=n)
        .map(|k| match pattern {
            Some(Pattern::Wc) => vec![CoefficientDomain::Absent, wc_domain(k)],
            _ => field_choices(field).to_vec(),
        })
        .collect();
    let base = per_rank[0].len() as u64;
    let total = base.pow(n as u32 + 1);

    let closed: Vec<Vec<CoefficientDomain>> = parallel::install(|| {
        (1..total)
            .into_par_iter()
            .filter_map(|idx| {
                let mut domains = vec![CoefficientDomain::Absent; n + 1];
                let mut rest = idx;
                for k in (0..=n).rev() {
                    domains[k] = per_rank[k][(rest % base) as usize];
                    rest /= base;
                }
                is_closed(&domains, &table).then_some(domains)
            })
            .collect()
    });
    closed.into_iter().map(|d| GradedSubspaceSpec::new(field, d)).collect()
}
