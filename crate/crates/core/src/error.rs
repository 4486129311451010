use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid signature ({p},{q}): need 1 <= p + q <= {max}")]
    InvalidSignature { p: usize, q: usize, max: usize },

    #[error("blade mask {mask:#b} out of range for n = {n}")]
    MaskOutOfRange { mask: u32, n: usize },

    #[error("rank {rank} out of range for n = {n}")]
    RankOutOfRange { rank: usize, n: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("element is not in the Lie algebra wC(p,q): |u* + u| = {residual:e}")]
    NotInLieAlgebra { residual: f64 },

    #[error("element is not in the group WC(p,q): |U*U - e| = {residual:e}")]
    NotInGroup { residual: f64 },

    #[error("exponential series did not converge within {max_terms} terms")]
    Convergence { max_terms: usize },

    #[error("{0}")]
    Inapplicable(String),

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
