//! Exact arithmetic in the real and complex Clifford algebras Cl(p,q).
//!
//! Basis blades are bitmasks (generator `a` is bit `a - 1`), coefficients are
//! `Complex64` tagged with the field the multivector lives over.

mod blade;
mod multivector;
mod signature;
mod text;

pub use blade::{blade_product, product_sign, reversal_sign, Blade};
pub use multivector::{Field, GradeSet, Multivector, Operation};
pub use signature::{Signature, MAX_DIM};
pub use text::{parse_binary, parse_multivector};
