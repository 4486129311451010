//! Clifford algebras `Cl(p,q)` over the reals and complexes: blade
//! arithmetic, quaternion typification, closed graded subspaces and the
//! pseudo-unitary Lie algebra `wCl(p,q)`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod parallel;
pub mod subspace;
pub mod types;
pub mod unitary;

pub use algebra::{Blade, Field, GradeSet, Multivector, Operation, Signature};
pub use error::{Error, Result};
pub use types::QuaternionType;
