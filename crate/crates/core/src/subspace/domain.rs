use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Field, Multivector, MAX_DIM};
use crate::error::{Error, Result};

/// Which coefficients a rank admits: none, real, purely imaginary, or all
/// complex numbers. Ordered `Absent < Real < Imaginary < Full`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientDomain {
    Absent,
    Real,
    Imaginary,
    Full,
}

use CoefficientDomain::*;

impl CoefficientDomain {
    pub const ALL: [CoefficientDomain; 4] = [Absent, Real, Imaginary, Full];

    /// Domain of `a * b` for `a`, `b` drawn from the two domains.
    pub fn mul(self, other: Self) -> Self {
        match (self, other) {
            (Absent, _) | (_, Absent) => Absent,
            (Full, _) | (_, Full) => Full,
            (Real, Real) | (Imaginary, Imaginary) => Real,
            _ => Imaginary,
        }
    }

    /// Whether every value of `other` is a value of `self`.
    pub fn contains(self, other: Self) -> bool {
        other == Absent || self == Full || self == other
    }

    pub fn intersect(self, other: Self) -> Self {
        if self.contains(other) {
            other
        } else if other.contains(self) {
            self
        } else {
            Absent
        }
    }

    pub fn is_present(self) -> bool {
        self != Absent
    }

    pub fn symbol(self) -> char {
        match self {
            Absent => '-',
            Real => 'r',
            Imaginary => 'i',
            Full => 'c',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '-' => Some(Absent),
            'r' => Some(Real),
            'i' => Some(Imaginary),
            'c' => Some(Full),
            _ => None,
        }
    }

    /// Whether a coefficient value lies in the domain.
    pub fn admits(self, re: f64, im: f64) -> bool {
        match self {
            Absent => re == 0.0 && im == 0.0,
            Real => im == 0.0,
            Imaginary => re == 0.0,
            Full => true,
        }
    }
}

/// Coefficient pattern of the Lie algebra wCl(p,q): real for ranks 2, 3
/// mod 4, imaginary for ranks 0, 1 mod 4.
pub fn wc_domain(rank: usize) -> CoefficientDomain {
    if rank % 4 >= 2 {
        Real
    } else {
        Imaginary
    }
}

/// A candidate subspace `⊕_k D_k Cl_k^R` given by one coefficient domain per
/// rank `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedSubspaceSpec {
    n: usize,
    field: Field,
    domains: Vec<CoefficientDomain>,
}

impl GradedSubspaceSpec {
    pub fn new(field: Field, domains: Vec<CoefficientDomain>) -> Result<Self> {
        let n = domains.len().checked_sub(1).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "a spec needs at least one rank".into(),
        })?;
        if n == 0 || n > MAX_DIM {
            return Err(Error::RankOutOfRange { rank: n, n: MAX_DIM });
        }
        if field == Field::Real && domains.iter().any(|d| matches!(d, Imaginary | Full)) {
            return Err(Error::FieldMismatch("real-field specs admit only absent or real ranks".into()));
        }
        Ok(Self { n, field, domains })
    }

    /// The zero subspace.
    pub fn empty(n: usize, field: Field) -> Self {
        Self { n, field, domains: vec![Absent; n + 1] }
    }

    /// Spec with the listed `(rank, domain)` pairs present.
    pub fn from_ranks(n: usize, field: Field, ranks: &[(usize, CoefficientDomain)]) -> Result<Self> {
        let mut domains = vec![Absent; n + 1];
        for &(k, d) in ranks {
            if k > n {
                return Err(Error::RankOutOfRange { rank: k, n });
            }
            domains[k] = d;
        }
        Self::new(field, domains)
    }

    /// Spec whose domain depends only on the rank mod 4.
    pub fn from_type_pattern(n: usize, field: Field, by_residue: [CoefficientDomain; 4]) -> Result<Self> {
        Self::new(field, (0..=n).map(|k| by_residue[k % 4]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domains(&self) -> &[CoefficientDomain] {
        &self.domains
    }

    pub fn domain(&self, k: usize) -> CoefficientDomain {
        self.domains.get(k).copied().unwrap_or(Absent)
    }

    pub fn set(&mut self, k: usize, d: CoefficientDomain) {
        self.domains[k] = d;
    }

    pub fn is_empty(&self) -> bool {
        self.domains.iter().all(|d| *d == Absent)
    }

    pub fn present_ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.domains.iter().enumerate().filter(|(_, d)| d.is_present()).map(|(k, _)| k)
    }

    /// Rankwise intersection of two specs of equal size.
    pub fn intersect(&self, other: &Self) -> Self {
        let domains = self.domains.iter().zip(&other.domains).map(|(a, b)| a.intersect(*b)).collect();
        Self { n: self.n, field: self.field, domains }
    }

    /// Every present rank carries exactly the wCl coefficient domain.
    pub fn is_wc_pattern(&self) -> bool {
        self.domains.iter().enumerate().all(|(k, d)| *d == Absent || *d == wc_domain(k))
    }

    /// Domain depends only on the rank mod 4.
    pub fn is_type_uniform(&self) -> bool {
        (0..=self.n).all(|k| k < 4 || self.domains[k] == self.domains[k % 4])
    }

    /// Whether all present ranks are even.
    pub fn only_even_ranks(&self) -> bool {
        self.present_ranks().all(|k| k % 2 == 0)
    }

    /// Whether `u` lies in the subspace.
    pub fn contains(&self, u: &Multivector) -> bool {
        u.n() == self.n
            && u.terms().all(|(b, c)| self.domain(b.rank()).admits(c.re, c.im))
    }
}

impl fmt::Display for GradedSubspaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} field={}", self.n, self.field)?;
        for (k, d) in self.domains.iter().enumerate() {
            write!(f, " {k}:{}", d.symbol())?;
        }
        Ok(())
    }
}

impl Serialize for GradedSubspaceSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for GradedSubspaceSpec {
    type Err = Error;

    /// Parses `n=4 field=complex 0:i 1:- 2:r 3:- 4:i`. Ranks left out are
    /// absent.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { pos: 0, msg };
        let mut n = None;
        let mut field = None;
        let mut ranks = Vec::new();
        for tok in s.split_whitespace() {
            if let Some(v) = tok.strip_prefix("n=") {
                n = Some(v.parse::<usize>().map_err(|_| bad(format!("bad dimension '{v}'")))?);
            } else if let Some(v) = tok.strip_prefix("field=") {
                field = Some(v.parse::<Field>()?);
            } else if let Some((k, d)) = tok.split_once(':') {
                let k = k.parse::<usize>().map_err(|_| bad(format!("bad rank in '{tok}'")))?;
                let mut chars = d.chars();
                let dom = match (chars.next().and_then(CoefficientDomain::from_symbol), chars.next()) {
                    (Some(dom), None) => dom,
                    _ => return Err(bad(format!("bad domain in '{tok}'"))),
                };
                ranks.push((k, dom));
            } else {
                return Err(bad(format!("unexpected token '{tok}'")));
            }
        }
        let n = n.ok_or_else(|| bad("missing n=".into()))?;
        let field = field.ok_or_else(|| bad("missing field=".into()))?;
        let mut seen = vec![false; n + 1];
        for &(k, _) in &ranks {
            if k > n {
                return Err(Error::RankOutOfRange { rank: k, n });
            }
            if std::mem::replace(&mut seen[k], true) {
                return Err(bad(format!("rank {k} given twice")));
            }
        }
        Self::from_ranks(n, field, &ranks)
    }
}
