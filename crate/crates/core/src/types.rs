//! Arithmetic on quaternion types.
//!
//! A quaternion type is a subset of the residues `{0,1,2,3}`; residue `k`
//! stands for the subspace spanned by blades whose rank is `k` mod 4. The
//! bracket rules between single residues are extended to composite types by
//! taking unions, which is exact because both brackets are bilinear.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{product_sign, Blade, Field, Multivector, Operation, Signature};
use crate::error::{Error, Result};

/// Subset of `{0,1,2,3}`; the empty set is the type of the zero element.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuaternionType(u8);

/// Alias used when a quaternion type is treated as a symbol of the calculus
/// rather than the type of a concrete element.
pub type TypeSymbol = QuaternionType;

impl QuaternionType {
    pub const EMPTY: QuaternionType = QuaternionType(0);
    pub const ALL: QuaternionType = QuaternionType(0b1111);

    pub fn from_residues<I: IntoIterator<Item = usize>>(residues: I) -> Self {
        QuaternionType(residues.into_iter().fold(0, |acc, k| acc | 1 << (k % 4)))
    }

    pub fn from_bits(bits: u8) -> Self {
        QuaternionType(bits & 0b1111)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn single(k: usize) -> Self {
        QuaternionType(1 << (k % 4))
    }

    pub fn contains(self, k: usize) -> bool {
        k < 4 && self.0 >> k & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        QuaternionType(self.0 | other.0)
    }

    pub fn residues(self) -> impl Iterator<Item = usize> {
        (0..4).filter(move |&k| self.contains(k))
    }

    /// All sixteen subsets: the empty type, then the fifteen quaternion types
    /// in the customary order (singletons, pairs, triples, everything).
    pub fn all_symbols() -> [QuaternionType; 16] {
        let mut out = [QuaternionType::EMPTY; 16];
        let mut bits: Vec<u8> = (1..16).collect();
        bits.sort_by_key(|&b| (b.count_ones(), QuaternionType(b).residues().collect::<Vec<_>>()));
        for (slot, b) in out[1..].iter_mut().zip(bits) {
            *slot = QuaternionType(b);
        }
        out
    }
}

impl fmt::Display for QuaternionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for k in self.residues() {
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for QuaternionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "-" | "" => Ok(QuaternionType::EMPTY),
            "A" => Ok(QuaternionType::ALL),
            _ => {
                let mut t = QuaternionType::EMPTY;
                for c in s.chars() {
                    match c.to_digit(10) {
                        Some(d) if d < 4 => t = t.union(QuaternionType::single(d as usize)),
                        _ => return Err(Error::Parse { pos: 0, msg: format!("bad quaternion type '{s}'") }),
                    }
                }
                Ok(t)
            }
        }
    }
}

impl Serialize for QuaternionType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Commutator of main types: `[k,k] -> 2`, `[k,2] -> k`, and the three
/// remaining pairs close on the fourth residue.
fn comm_main(k: usize, l: usize) -> usize {
    if k == l {
        2
    } else if l == 2 {
        k
    } else if k == 2 {
        l
    } else {
        // {0,1} -> 3, {0,3} -> 1, {1,3} -> 0
        6 - 2 - k - l
    }
}

/// Anticommutator of main types: `{k,k} -> 0`, `{k,0} -> k`, and the three
/// remaining pairs close on the fourth residue.
fn anti_main(k: usize, l: usize) -> usize {
    if k == l {
        0
    } else if l == 0 {
        k
    } else if k == 0 {
        l
    } else {
        6 - k - l
    }
}

fn lift(t1: TypeSymbol, t2: TypeSymbol, rule: impl Fn(usize, usize) -> usize) -> TypeSymbol {
    let mut out = QuaternionType::EMPTY;
    for k in t1.residues() {
        for l in t2.residues() {
            out = out.union(QuaternionType::single(rule(k, l)));
        }
    }
    out
}

pub fn comm_type(t1: TypeSymbol, t2: TypeSymbol) -> TypeSymbol {
    lift(t1, t2, comm_main)
}

pub fn anti_type(t1: TypeSymbol, t2: TypeSymbol) -> TypeSymbol {
    lift(t1, t2, anti_main)
}

/// `UV = ([U,V] + {U,V}) / 2`, so the product type is the union.
pub fn prod_type(t1: TypeSymbol, t2: TypeSymbol) -> TypeSymbol {
    comm_type(t1, t2).union(anti_type(t1, t2))
}

pub fn op_type(op: Operation, t1: TypeSymbol, t2: TypeSymbol) -> TypeSymbol {
    match op {
        Operation::Commutator => comm_type(t1, t2),
        Operation::Anticommutator => anti_type(t1, t2),
        Operation::Product => prod_type(t1, t2),
    }
}

/// Full 16x16 table of one operation, indexed by type bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTable {
    pub op: Operation,
    cells: [[TypeSymbol; 16]; 16],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeTableEntry {
    pub op: Operation,
    pub left: TypeSymbol,
    pub right: TypeSymbol,
    pub result: TypeSymbol,
}

impl TypeTable {
    pub fn new(op: Operation) -> Self {
        let mut cells = [[QuaternionType::EMPTY; 16]; 16];
        for (a, row) in cells.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = op_type(op, QuaternionType(a as u8), QuaternionType(b as u8));
            }
        }
        Self { op, cells }
    }

    pub fn get(&self, t1: TypeSymbol, t2: TypeSymbol) -> TypeSymbol {
        self.cells[t1.0 as usize][t2.0 as usize]
    }

    /// Entries in display order (rows and columns as in `all_symbols`).
    pub fn entries(&self) -> Vec<TypeTableEntry> {
        let symbols = QuaternionType::all_symbols();
        let mut out = Vec::with_capacity(256);
        for &left in &symbols {
            for &right in &symbols {
                out.push(TypeTableEntry { op: self.op, left, right, result: self.get(left, right) });
            }
        }
        out
    }

    /// Aligned text grid; `A` marks the whole algebra, `-` the zero type.
    pub fn to_grid(&self) -> String {
        let symbols = QuaternionType::all_symbols();
        let show = |t: TypeSymbol| if t == QuaternionType::ALL { "A".to_string() } else { t.to_string() };
        let mut out = String::new();
        let head = match self.op {
            Operation::Commutator => "[,]",
            Operation::Anticommutator => "{,}",
            Operation::Product => "UV",
        };
        out.push_str(&format!("{head:<5}"));
        for &c in &symbols {
            out.push_str(&format!("{:<5}", show(c)));
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        for &r in &symbols {
            out.push_str(&format!("{:<5}", show(r)));
            for &c in &symbols {
                out.push_str(&format!("{:<5}", show(self.get(r, c))));
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeViolation {
    pub op: Operation,
    pub left: Blade,
    pub right: Blade,
    pub left_type: TypeSymbol,
    pub right_type: TypeSymbol,
    pub result_type: TypeSymbol,
    pub allowed: TypeSymbol,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeTableReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub violations: Vec<TypeViolation>,
}

impl TypeTableReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Largest `n` accepted by the exhaustive blade-level verifiers.
pub const EXHAUSTIVE_MAX_N: usize = 8;

/// Checks every pair of basis blades against all three type tables.
pub fn verify_type_tables(sig: Signature) -> Result<TypeTableReport> {
    let n = sig.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::LimitExceeded(format!("blade-level table check needs n <= {EXHAUSTIVE_MAX_N}, got {n}")));
    }
    let tables: Vec<TypeTable> = Operation::ALL.iter().map(|&op| TypeTable::new(op)).collect();
    let basis: Vec<Multivector> = (0..1u32 << n)
        .map(|m| Multivector::blade(sig, Field::Real, Blade(m), 1.0))
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    let mut pairs = 0;
    for (a, ua) in basis.iter().enumerate() {
        for (b, ub) in basis.iter().enumerate() {
            pairs += 1;
            let (ta, tb) = (ua.quaternion_type(), ub.quaternion_type());
            for table in &tables {
                let result = table.op.apply(ua, ub)?.quaternion_type();
                let allowed = table.get(ta, tb);
                if !result.is_subset(allowed) {
                    violations.push(TypeViolation {
                        op: table.op,
                        left: Blade(a as u32),
                        right: Blade(b as u32),
                        left_type: ta,
                        right_type: tb,
                        result_type: result,
                        allowed,
                    });
                }
            }
        }
    }
    Ok(TypeTableReport { n, pairs_checked: pairs, violations })
}

/// One summand of a four-way split: the blades of residue class `residue`
/// with real (`imaginary = false`) or purely imaginary coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPart {
    pub residue: usize,
    pub imaginary: bool,
}

impl SplitPart {
    pub const fn real(residue: usize) -> Self {
        Self { residue, imaginary: false }
    }

    pub const fn imaginary(residue: usize) -> Self {
        Self { residue, imaginary: true }
    }

    fn unit(&self) -> Complex64 {
        if self.imaginary {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(1.0, 0.0)
        }
    }

    /// Whether `u` lies in this part.
    pub fn contains(&self, u: &Multivector) -> bool {
        u.terms().all(|(b, c)| {
            b.rank() % 4 == self.residue && if self.imaginary { c.re == 0.0 } else { c.im == 0.0 }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitViolation {
    pub left_part: usize,
    pub right_part: usize,
    pub left: Blade,
    pub right: Blade,
    pub expected_part: usize,
}

/// Checks that `parts = [E, I, J, K]` make the span an algebra of quaternion
/// type under `op`: `X∘Y` must land in the part whose index is the XOR of
/// the indices of `X` and `Y` (E∘E ∈ E, E∘I ∈ I, I∘J ∈ K, ...).
pub fn check_quaternion_split(
    sig: Signature,
    op: Operation,
    parts: [SplitPart; 4],
) -> Result<Vec<SplitViolation>> {
    let n = sig.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::LimitExceeded(format!("blade-level split check needs n <= {EXHAUSTIVE_MAX_N}, got {n}")));
    }
    let field = if parts.iter().any(|p| p.imaginary) { Field::Complex } else { Field::Real };
    let mut basis: Vec<(usize, Multivector)> = Vec::new();
    for m in 0..1u32 << n {
        let blade = Blade(m);
        for (idx, part) in parts.iter().enumerate() {
            if blade.rank() % 4 == part.residue {
                basis.push((idx, Multivector::from_terms(sig, field, [(blade, part.unit())])?));
            }
        }
    }
    let mut out = Vec::new();
    for (ia, ua) in &basis {
        for (ib, ub) in &basis {
            let r = op.apply(ua, ub)?;
            let expected = ia ^ ib;
            if !parts[expected].contains(&r) {
                let left = ua.terms().next().map(|t| t.0).unwrap_or_default();
                let right = ub.terms().next().map(|t| t.0).unwrap_or_default();
                out.push(SplitViolation { left_part: *ia, right_part: *ib, left, right, expected_part: expected });
            }
        }
    }
    Ok(out)
}

/// Quaternion type of `op(e^A, e^B)` computed from signs alone.
pub fn blade_op_type(op: Operation, a: Blade, b: Blade, sig: Signature) -> TypeSymbol {
    let c = op.combine(product_sign(a, b, sig), product_sign(b, a, sig));
    if c == 0.0 {
        QuaternionType::EMPTY
    } else {
        QuaternionType::single(Blade(a.0 ^ b.0).rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TypeSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(comm_type(t("0"), t("1")), t("3"));
        assert_eq!(comm_type(t("01"), t("01")), t("23"));
        for s in QuaternionType::all_symbols() {
            assert_eq!(comm_type(QuaternionType::EMPTY, s), QuaternionType::EMPTY);
        }
    }

    #[test]
    fn anticommutator_examples() {
        assert_eq!(anti_type(t("1"), t("1")), t("0"));
        assert_eq!(anti_type(t("1"), t("2")), t("3"));
        assert_eq!(anti_type(t("0"), t("0123")), t("0123"));
    }

    #[test]
    fn product_examples() {
        assert_eq!(prod_type(t("0"), t("0")), t("02"));
        assert_eq!(prod_type(t("2"), t("2")), t("02"));
        assert_eq!(prod_type(t("02"), t("02")), t("02"));
    }

    #[test]
    fn symbol_order_matches_customary_listing() {
        let names: Vec<String> = QuaternionType::all_symbols().iter().map(|s| s.to_string()).collect();
        assert_eq!(
            names,
            ["-", "0", "1", "2", "3", "01", "02", "03", "12", "13", "23", "012", "013", "023", "123", "0123"]
        );
    }

    #[test]
    fn tables_are_symmetric_monotone_and_product_is_union() {
        let comm = TypeTable::new(Operation::Commutator);
        let anti = TypeTable::new(Operation::Anticommutator);
        let prod = TypeTable::new(Operation::Product);
        let all = QuaternionType::all_symbols();
        for &a in &all {
            for &b in &all {
                assert_eq!(comm.get(a, b), comm.get(b, a));
                assert_eq!(anti.get(a, b), anti.get(b, a));
                assert_eq!(prod.get(a, b), comm.get(a, b).union(anti.get(a, b)));
                for &c in &all {
                    if a.is_subset(c) {
                        assert!(comm.get(a, b).is_subset(comm.get(c, b)));
                        assert!(anti.get(a, b).is_subset(anti.get(c, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn one_dimensional_algebra_has_no_violations() {
        for sig in Signature::all_for(1).unwrap() {
            let report = verify_type_tables(sig).unwrap();
            assert!(report.ok());
            assert_eq!(report.pairs_checked, 4);
        }
    }

    #[test]
    fn rejects_large_n() {
        assert!(matches!(
            verify_type_tables(Signature::euclidean(9).unwrap()),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn grid_marks_whole_algebra() {
        let grid = TypeTable::new(Operation::Commutator).to_grid();
        let first_row = grid.lines().nth(2).unwrap();
        assert!(first_row.starts_with("0    -    2    3    0    1    23"), "{first_row}");
        assert!(grid.lines().last().unwrap().starts_with("A    -    A"));
    }
}
