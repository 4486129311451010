use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::blade::{product_sign, reversal_sign, Blade};
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::types::QuaternionType;

/// Scalar field a multivector lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" | "real" => Ok(Field::Real),
            "c" | "complex" => Ok(Field::Complex),
            other => Err(Error::Parse { pos: 0, msg: format!("unknown field '{other}'") }),
        }
    }
}

/// The three bilinear operations studied here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Product,
    Commutator,
    Anticommutator,
}

impl Operation {
    pub const ALL: [Operation; 3] = [Operation::Commutator, Operation::Anticommutator, Operation::Product];

    pub fn apply(self, u: &Multivector, v: &Multivector) -> Result<Multivector> {
        match self {
            Operation::Product => u.product(v),
            Operation::Commutator => u.commutator(v),
            Operation::Anticommutator => u.anticommutator(v),
        }
    }

    /// Coefficient of `e^{A xor B}` in `op(e^A, e^B)` given the two
    /// ordering signs `e^A e^B = s_ab e^C` and `e^B e^A = s_ba e^C`.
    pub fn combine(self, s_ab: f64, s_ba: f64) -> f64 {
        match self {
            Operation::Product => s_ab,
            Operation::Commutator => s_ab - s_ba,
            Operation::Anticommutator => s_ab + s_ba,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Operation::Product => "prod",
            Operation::Commutator => "comm",
            Operation::Anticommutator => "anti",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prod" | "product" | "*" => Ok(Operation::Product),
            "comm" | "commutator" => Ok(Operation::Commutator),
            "anti" | "anticommutator" => Ok(Operation::Anticommutator),
            other => Err(Error::Parse { pos: 0, msg: format!("unknown operation '{other}'") }),
        }
    }
}

/// Set of ranks `0..=n`, one bit per rank.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeSet(pub u32);

impl GradeSet {
    pub const EMPTY: GradeSet = GradeSet(0);

    pub fn from_ranks<I: IntoIterator<Item = usize>>(ranks: I) -> Self {
        GradeSet(ranks.into_iter().fold(0, |acc, k| acc | 1 << k))
    }

    pub fn contains(self, k: usize) -> bool {
        k < 32 && self.0 >> k & 1 == 1
    }

    pub fn insert(&mut self, k: usize) {
        self.0 |= 1 << k;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GradeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GradeSet) -> GradeSet {
        GradeSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&k| self.contains(k))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
}

impl fmt::Display for GradeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|k| k.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for GradeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Element of `Cl(p,q)` over the real or complex numbers.
///
/// Only non-zero coefficients are stored; exact zeros produced by arithmetic
/// are removed, nothing else is.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    sig: Signature,
    field: Field,
    coeffs: BTreeMap<Blade, Complex64>,
}

impl Multivector {
    pub fn zero(sig: Signature, field: Field) -> Self {
        Self { sig, field, coeffs: BTreeMap::new() }
    }

    /// The identity `e` scaled by `c`.
    pub fn scalar(sig: Signature, field: Field, c: Complex64) -> Result<Self> {
        Self::from_terms(sig, field, [(Blade::IDENTITY, c)])
    }

    pub fn identity(sig: Signature, field: Field) -> Self {
        Self::blade(sig, field, Blade::IDENTITY, 1.0).expect("identity is always valid")
    }

    /// A real multiple of one basis blade.
    pub fn blade(sig: Signature, field: Field, blade: Blade, coeff: f64) -> Result<Self> {
        Self::from_terms(sig, field, [(blade, Complex64::new(coeff, 0.0))])
    }

    /// Sums the given terms; repeated blades accumulate.
    pub fn from_terms<I>(sig: Signature, field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Complex64)>,
    {
        let mut mv = Self::zero(sig, field);
        for (blade, c) in terms {
            blade.check(sig)?;
            if field == Field::Real && c.im != 0.0 {
                return Err(Error::FieldMismatch(format!(
                    "imaginary coefficient {c} in a real multivector"
                )));
            }
            *mv.coeffs.entry(blade).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        mv.prune();
        Ok(mv)
    }

    fn from_map(sig: Signature, field: Field, coeffs: BTreeMap<Blade, Complex64>) -> Self {
        let mut mv = Self { sig, field, coeffs };
        mv.prune();
        mv
    }

    fn prune(&mut self) {
        self.coeffs.retain(|_, c| c.re != 0.0 || c.im != 0.0);
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.sig.n()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `blade`, zero when absent.
    pub fn get(&self, blade: Blade) -> Complex64 {
        self.coeffs.get(&blade).copied().unwrap_or_default()
    }

    /// Non-zero terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, Complex64)> + '_ {
        self.coeffs.iter().map(|(b, c)| (*b, *c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same element viewed in the complex algebra.
    pub fn to_complex(&self) -> Self {
        Self { field: Field::Complex, ..self.clone() }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut coeffs = self.coeffs.clone();
        for (b, c) in &other.coeffs {
            *coeffs.entry(*b).or_default() += c;
        }
        Ok(Self::from_map(self.sig, self.field, coeffs))
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.plus(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(b, c)| (*b, -c)).collect();
        Self { sig: self.sig, field: self.field, coeffs }
    }

    /// Multiplies every coefficient by a real factor.
    pub fn scale(&self, s: f64) -> Self {
        let coeffs = self.coeffs.iter().map(|(b, c)| (*b, c * s)).collect();
        Self::from_map(self.sig, self.field, coeffs)
    }

    /// Multiplies every coefficient by a complex factor. Real multivectors
    /// only accept factors with zero imaginary part.
    pub fn scale_complex(&self, s: Complex64) -> Result<Self> {
        if self.field == Field::Real && s.im != 0.0 {
            return Err(Error::FieldMismatch(format!("complex factor {s} on a real multivector")));
        }
        let coeffs = self.coeffs.iter().map(|(b, c)| (*b, c * s)).collect();
        Ok(Self::from_map(self.sig, self.field, coeffs))
    }

    /// Geometric (Clifford) product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut coeffs: BTreeMap<Blade, Complex64> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let s = product_sign(*a, *b, self.sig);
                *coeffs.entry(Blade(a.0 ^ b.0)).or_default() += ca * cb * s;
            }
        }
        Ok(Self::from_map(self.sig, self.field, coeffs))
    }

    /// `[U, V] = UV - VU`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.product(other)?.minus(&other.product(self)?)
    }

    /// `{U, V} = UV + VU`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.product(other)?.plus(&other.product(self)?)
    }

    /// Rank-`k` part.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.n() {
            return Err(Error::RankOutOfRange { rank: k, n: self.n() });
        }
        Ok(self.filter(|b| b.rank() == k))
    }

    /// Part of quaternion type `residue` (ranks congruent to it mod 4).
    pub fn type_project(&self, residue: usize) -> Result<Self> {
        if residue > 3 {
            return Err(Error::RankOutOfRange { rank: residue, n: 3 });
        }
        Ok(self.filter(|b| b.rank() % 4 == residue))
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        let coeffs = self.coeffs.iter().filter(|(b, _)| keep(**b)).map(|(b, c)| (*b, *c)).collect();
        Self { sig: self.sig, field: self.field, coeffs }
    }

    /// Ranks with a non-zero component.
    pub fn grade_set(&self) -> GradeSet {
        GradeSet::from_ranks(self.coeffs.keys().map(|b| b.rank()))
    }

    /// Residues mod 4 of the occupied ranks; empty for zero.
    pub fn quaternion_type(&self) -> QuaternionType {
        QuaternionType::from_residues(self.coeffs.keys().map(|b| b.rank() % 4))
    }

    /// Clifford conjugation: reverse the blade factors and conjugate the
    /// coefficients.
    pub fn clifford_conjugate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(b, c)| (*b, c.conj() * reversal_sign(b.rank())))
            .collect();
        Self { sig: self.sig, field: self.field, coeffs }
    }

    /// Largest coefficient modulus.
    pub fn norm_inf(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Sum of coefficient moduli; submultiplicative under the geometric
    /// product since all structure constants are `±1`.
    pub fn norm_l1(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    /// `|self - other|_inf <= tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match self.minus(other) {
            Ok(d) => d.norm_inf() <= tol,
            Err(_) => false,
        }
    }
}
