//! Graded subspaces `⊕_k a_k Cl_k`: closure under the three operations,
//! exhaustive enumeration, and theorem catalogs to diff against.

mod catalog;
mod closure;
mod diff;
mod domain;
mod enumerate;
mod interaction;

pub use catalog::{catalog, catalog_entries, CatalogEntry, TheoremId};
pub use closure::{closure_check, closure_check_with, ClosureReport, ClosureViolation};
pub use diff::{diff_catalog, DiffReport};
pub use domain::{wc_domain, CoefficientDomain, GradedSubspaceSpec};
pub use enumerate::{enumerate_closed, enumerate_with, Pattern, COMPLEX_MAX_N, REAL_MAX_N};
pub use interaction::{grade_interaction, rank_product_range, InteractionTable, Witness};
