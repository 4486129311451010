use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported generating-space dimension.
pub const MAX_DIM: usize = 16;

/// Metric signature: the first `p` generators square to `+e`, the remaining
/// `q` to `-e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidSignature { p, q, max: MAX_DIM });
        }
        Ok(Self { p, q })
    }

    /// Euclidean signature `(n, 0)`.
    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Number of basis blades, `2^n`.
    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// Diagonal metric entry for the zero-based generator `index`.
    pub fn eta(&self, index: usize) -> f64 {
        if index < self.p {
            1.0
        } else {
            -1.0
        }
    }

    /// Bitmask of the generators squaring to `-e`.
    pub fn negative_mask(&self) -> u32 {
        let all = ((1u64 << self.n()) - 1) as u32;
        let pos = ((1u64 << self.p) - 1) as u32;
        all & !pos
    }

    /// Every signature with `p + q = n`, ordered by descending `p`.
    pub fn all_for(n: usize) -> Result<Vec<Signature>> {
        (0..=n).rev().map(|p| Signature::new(p, n - p)).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}
