use std::collections::BTreeSet;

use serde::Serialize;

use super::catalog::{catalog_entries, CatalogEntry, TheoremId};
use super::domain::GradedSubspaceSpec;
use super::enumerate::{enumerate_closed, Pattern};
use crate::algebra::{Field, Operation};
use crate::error::{Error, Result};

/// Catalog against enumeration, restricted to the theorem's candidate space.
#[derive(Clone, Debug, Serialize)]
pub struct DiffReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub field: Field,
    pub op: Operation,
    pub catalog_count: usize,
    pub enumerated_count: usize,
    /// Closed specs the catalog does not list.
    pub missing_from_catalog: Vec<GradedSubspaceSpec>,
    /// Catalog specs the enumeration did not produce (i.e. not closed, or
    /// outside the candidate space).
    pub missing_from_enumeration: Vec<CatalogEntry>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.missing_from_catalog.is_empty() && self.missing_from_enumeration.is_empty()
    }
}

/// Candidate space a theorem's list is meant to exhaust.
fn ambient(t: TheoremId) -> Option<Pattern> {
    match t {
        TheoremId::T1 | TheoremId::T2 | TheoremId::T3 => Some(Pattern::TypeUniform),
        TheoremId::T13 => Some(Pattern::Wc),
        _ => None,
    }
}

pub fn diff_catalog(t: TheoremId, n: usize, field: Field, op: Operation) -> Result<DiffReport> {
    if op != t.op() {
        return Err(Error::Inapplicable(format!("{t} is stated for {}, not {op}", t.op())));
    }
    let entries = catalog_entries(t, n, field)?;
    let enumerated: BTreeSet<GradedSubspaceSpec> = enumerate_closed(n, op, field, ambient(t))?.into_iter().collect();
    let listed: BTreeSet<&GradedSubspaceSpec> = entries.iter().map(|e| &e.spec).collect();
    let missing_from_catalog = enumerated.iter().filter(|s| !listed.contains(s)).cloned().collect();
    let mut missing_from_enumeration: Vec<CatalogEntry> =
        entries.iter().filter(|e| !enumerated.contains(&e.spec)).cloned().collect();
    missing_from_enumeration.sort_by(|a, b| a.spec.cmp(&b.spec));
    Ok(DiffReport {
        theorem: t,
        n,
        field,
        op,
        catalog_count: listed.len(),
        enumerated_count: enumerated.len(),
        missing_from_catalog,
        missing_from_enumeration,
    })
}
