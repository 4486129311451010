use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::domain::{wc_domain, CoefficientDomain, GradedSubspaceSpec};
use crate::algebra::{Field, Operation};
use crate::error::{Error, Result};

use CoefficientDomain::{Absent, Full as C, Imaginary as I, Real as R};

/// Theorems whose subspace lists are machine-encoded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
    ];

    /// The operation the listed subspaces are closed under.
    pub fn op(self) -> Operation {
        use TheoremId::*;
        match self {
            T1 | T8 => Operation::Product,
            T2 | T9 | T10 | T13 => Operation::Commutator,
            T3 | T11 | T12 => Operation::Anticommutator,
        }
    }

    pub fn applies_to(self, field: Field) -> bool {
        use TheoremId::*;
        match self {
            T1 | T2 | T3 | T8 => true,
            T9 | T11 => field == Field::Real,
            T10 | T12 | T13 => field == Field::Complex,
        }
    }

    pub fn as_str(self) -> &'static str {
        use TheoremId::*;
        match self {
            T1 => "T1",
            T2 => "T2",
            T3 => "T3",
            T8 => "T8",
            T9 => "T9",
            T10 => "T10",
            T11 => "T11",
            T12 => "T12",
            T13 => "T13",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        let key = if upper.starts_with('T') { upper } else { format!("T{upper}") };
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == key)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown theorem '{s}'") })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// One catalog spec with the item it came from. `augmentation` names the
/// ranks 0 / n added to a base item, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub augmentation: Option<String>,
    pub spec: GradedSubspaceSpec,
}

/// An item before specialisation: ranks may fall outside `0..=n` for small
/// `n` and are dropped.
struct Item {
    label: String,
    min_n: usize,
    parts: Vec<(isize, CoefficientDomain)>,
}

fn item(label: impl Into<String>, min_n: usize, parts: Vec<(isize, CoefficientDomain)>) -> Item {
    Item { label: label.into(), min_n, parts }
}

/// Largest `k <= n` in the residue class with `n - k` among the offsets
/// allowed for its parity.
fn top_rank(n: usize, residues: &[usize], even_off: &[usize], odd_off: &[usize]) -> Option<usize> {
    (0..=n).rev().find(|&k| {
        let offsets = if k % 2 == 0 { even_off } else { odd_off };
        residues.contains(&(k % 4)) && offsets.contains(&(n - k))
    })
}

/// Ranks `lo..=top` whose residue mod 4 appears in `pattern`.
fn series(lo: usize, top: Option<usize>, pattern: &[(usize, CoefficientDomain)]) -> Vec<(isize, CoefficientDomain)> {
    let Some(top) = top else { return Vec::new() };
    (lo..=top)
        .filter_map(|k| pattern.iter().find(|(r, _)| *r == k % 4).map(|&(_, d)| (k as isize, d)))
        .collect()
}

/// Type pattern from the residues carried by the real and imaginary parts,
/// e.g. `("02", "13")` for `02 ⊕ i13`.
fn type_pattern(real: &str, imag: &str) -> [CoefficientDomain; 4] {
    let mut out = [Absent; 4];
    for (r, slot) in out.iter_mut().enumerate() {
        let digit = char::from(b'0' + r as u8);
        *slot = match (real.contains(digit), imag.contains(digit)) {
            (true, true) => C,
            (true, false) => R,
            (false, true) => I,
            (false, false) => Absent,
        };
    }
    out
}

fn type_items(field: Field, real_list: &[&str], complex_list: &[(&str, &str)]) -> Vec<(String, [CoefficientDomain; 4])> {
    let mut out: Vec<_> = real_list.iter().map(|r| (r.to_string(), type_pattern(r, ""))).collect();
    if field == Field::Complex {
        out = complex_list
            .iter()
            .map(|(r, i)| {
                let label = if i.is_empty() { r.to_string() } else { format!("{r}+i{i}") };
                (label, type_pattern(r, i))
            })
            .collect();
    }
    out
}

fn type_theorem(t: TheoremId, field: Field) -> Vec<(String, [CoefficientDomain; 4])> {
    match t {
        TheoremId::T1 => type_items(field, &["02"], &[("02", ""), ("02", "02"), ("02", "13"), ("0123", "")]),
        TheoremId::T2 => type_items(
            field,
            &["2", "02", "12", "23"],
            &[
                ("2", ""),
                ("02", ""),
                ("12", ""),
                ("23", ""),
                ("0123", ""),
                ("02", "02"),
                ("12", "12"),
                ("23", "23"),
                ("2", "0"),
                ("2", "1"),
                ("2", "2"),
                ("2", "3"),
                ("02", "13"),
                ("12", "03"),
                ("23", "01"),
            ],
        ),
        TheoremId::T3 => type_items(
            field,
            &["0", "01", "02", "03"],
            &[
                ("0", ""),
                ("01", ""),
                ("02", ""),
                ("03", ""),
                ("0123", ""),
                ("01", "01"),
                ("02", "02"),
                ("03", "03"),
                ("0", "0"),
                ("0", "1"),
                ("0", "2"),
                ("0", "3"),
                ("01", "23"),
                ("02", "13"),
                ("03", "12"),
            ],
        ),
        _ => unreachable!("not a type-level theorem"),
    }
}

fn t8_items(n: usize, field: Field) -> Vec<Item> {
    let n = n as isize;
    let evens = |d| (0..=n).step_by(2).map(|k| (k, d)).collect::<Vec<_>>();
    let mut out = vec![item("1", 1, vec![(0, R)]), item("2", 1, vec![(0, R), (n, R)]), item("3", 1, evens(R))];
    if field == Field::Complex {
        out.extend([
            item("4", 1, vec![(0, C)]),
            item("5", 1, vec![(0, C), (n, C)]),
            item("6", 1, evens(C)),
            item("7", 1, (0..=n).map(|k| (k, if k % 2 == 0 { R } else { I })).collect()),
            item("8", 1, (0..=n).map(|k| (k, R)).collect()),
        ]);
    }
    out
}

/// Items shared by the real commutator list and the wCl list, with the
/// coefficient domain of each rank supplied by `dom`.
fn rank_items(n: usize, dom: impl Fn(usize) -> CoefficientDomain) -> Vec<Item> {
    let ni = n as isize;
    let ranks = |rs: &[isize]| rs.iter().map(|&r| (r, if r >= 0 { dom(r as usize) } else { R })).collect::<Vec<_>>();
    let classes = |lo: usize, top: Option<usize>, res: &[usize]| {
        let pattern: Vec<_> = res.iter().map(|&r| (r, R)).collect();
        series(lo, top, &pattern).into_iter().map(|(k, _)| (k, dom(k as usize))).collect::<Vec<_>>()
    };
    let all_but_top: Vec<isize> = if n % 2 == 0 { (1..=ni).collect() } else { (1..ni).collect() };
    let edge: Vec<isize> = if n % 2 == 1 { vec![1, 2, ni - 2, ni - 1] } else { vec![1, 2, ni - 1, ni] };
    vec![
        item("1", 1, ranks(&[0])),
        item("2", 1, ranks(&[ni])),
        item("3", 2, ranks(&[1, 2])),
        item("4", 3, ranks(&[2])),
        item("5", 4, ranks(&all_but_top)),
        item("6", 4, ranks(&[2, ni - 1])),
        item("7", 5, ranks(&[2, ni - 2])),
        item("8", 6, ranks(&edge)),
        item("9", 6, classes(2, top_rank(n, &[2, 3], &[0, 1], &[1, 2]), &[2, 3])),
        item("10", 7, classes(2, top_rank(n, &[0, 2], &[1, 2], &[1, 2]), &[0, 2])),
        item("11", 8, classes(1, top_rank(n, &[1, 2], &[0, 1, 2, 3], &[]), &[1, 2])),
        item("12", 9, classes(2, top_rank(n, &[2], &[1, 2, 3, 4], &[1, 2, 3, 4]), &[2])),
    ]
}

fn t10_items(n: usize) -> Vec<Item> {
    let ni = n as isize;
    let mut out = Vec::new();
    for (j, d) in [R, I, C].into_iter().enumerate() {
        out.push(item(format!("1.{}", j + 1), 1, vec![(0, d)]));
    }
    for (j, d) in [R, I, C].into_iter().enumerate() {
        out.push(item(format!("2.{}", j + 1), 1, vec![(ni, d)]));
    }
    out.push(item("3.1", 2, vec![(1, R), (2, R)]));
    out.push(item("3.2", 2, vec![(1, I), (2, R)]));
    out.push(item("3.3", 2, vec![(1, C), (2, C)]));
    out.push(item("4.1", 3, vec![(2, R)]));
    out.push(item("4.2", 3, vec![(2, C)]));
    let top5 = if n % 2 == 0 { n } else { n - 1 };
    let patterns5: [[(usize, CoefficientDomain); 4]; 5] = [
        [(0, R), (1, R), (2, R), (3, R)],
        [(0, I), (1, I), (2, R), (3, R)],
        [(0, R), (1, I), (2, R), (3, I)],
        [(0, I), (1, R), (2, R), (3, I)],
        [(0, C), (1, C), (2, C), (3, C)],
    ];
    for (j, p) in patterns5.iter().enumerate() {
        out.push(item(format!("5.{}", j + 1), 4, series(1, Some(top5), p)));
    }
    for (label, min_n, other) in [("6", 4, ni - 1), ("7", 5, ni - 2)] {
        out.push(item(format!("{label}.1"), min_n, vec![(2, R), (other, R)]));
        out.push(item(format!("{label}.2"), min_n, vec![(2, C), (other, C)]));
        out.push(item(format!("{label}.3"), min_n, vec![(2, R), (other, I)]));
    }
    let (lo, hi) = if n % 2 == 1 { (ni - 2, ni - 1) } else { (ni - 1, ni) };
    // 8.4 needs an imaginary top rank: [i e1, e^{2..hi}] lands there
    for (j, (d1, dlo, dhi)) in [(R, R, R), (C, C, C), (R, I, I), (I, R, I), (I, I, R)].into_iter().enumerate() {
        let d2 = if d1 == C { C } else { R };
        out.push(item(format!("8.{}", j + 1), 6, vec![(1, d1), (2, d2), (lo, dlo), (hi, dhi)]));
    }
    let families: [(&str, usize, usize, Option<usize>, Vec<Vec<(usize, CoefficientDomain)>>); 4] = [
        (
            "9",
            6,
            2,
            top_rank(n, &[2, 3], &[0, 1], &[1, 2]),
            vec![vec![(2, R), (3, R)], vec![(2, R), (3, I)], vec![(2, C), (3, C)]],
        ),
        (
            "10",
            7,
            2,
            top_rank(n, &[0, 2], &[1, 2], &[1, 2]),
            vec![vec![(0, R), (2, R)], vec![(0, I), (2, R)], vec![(0, C), (2, C)]],
        ),
        (
            "11",
            8,
            1,
            top_rank(n, &[1, 2], &[0, 1, 2, 3], &[]),
            vec![vec![(1, R), (2, R)], vec![(1, I), (2, R)], vec![(1, C), (2, C)]],
        ),
        ("12", 9, 2, top_rank(n, &[2], &[1, 2, 3, 4], &[1, 2, 3, 4]), vec![vec![(2, R)], vec![(2, C)]]),
    ];
    for (label, min_n, lo, top, patterns) in families {
        for (j, p) in patterns.iter().enumerate() {
            out.push(item(format!("{label}.{}", j + 1), min_n, series(lo, top, p)));
        }
    }
    out
}

fn t11_items(n: usize) -> Vec<Item> {
    let ni = n as isize;
    let reals = |rs: Vec<isize>| rs.into_iter().map(|r| (r, R)).collect::<Vec<_>>();
    let mut out = vec![
        item("0", 1, reals((0..=ni).collect())),
        item("1", 1, reals(vec![0])),
        item("2", 2, reals(vec![0, 1])),
        item("3", 2, reals(vec![0, ni])),
        item("4", 3, reals(vec![0, ni - 1])),
    ];
    if n % 2 == 0 {
        out.push(item("5", 4, reals(vec![0, 1, ni])));
        out.push(item("6", 4, reals(vec![0, ni - 1, ni])));
    }
    out.push(item("7", 4, series(0, top_rank(n, &[0, 2], &[0, 1], &[0, 1]), &[(0, R), (2, R)])));
    if n % 2 == 1 {
        out.push(item("8", 5, reals(vec![0, 1, ni - 1, ni])));
    }
    out.push(item("9", 5, series(0, top_rank(n, &[0, 3], &[0, 1, 2], &[0]), &[(0, R), (3, R)])));
    out.push(item("10", 6, series(0, top_rank(n, &[0, 1], &[0], &[0, 1, 2]), &[(0, R), (1, R)])));
    out.push(item("11", 6, series(0, top_rank(n, &[0], &[0, 1, 2, 3], &[0, 1, 2, 3]), &[(0, R)])));
    out
}

fn t12_items(n: usize) -> Vec<Item> {
    let ni = n as isize;
    let lift = |d| if d == C { C } else { R };
    let mut out = vec![
        item("0", 1, (0..=ni).map(|k| (k, C)).collect()),
        item("1.1", 1, vec![(0, R)]),
        item("1.2", 1, vec![(0, C)]),
    ];
    for (label, min_n, other) in [("2", 1, 1), ("3", 2, ni), ("4", 3, ni - 1)] {
        out.push(item(format!("{label}.1"), min_n, vec![(0, R), (other, R)]));
        out.push(item(format!("{label}.2"), min_n, vec![(0, R), (other, I)]));
        out.push(item(format!("{label}.3"), min_n, vec![(0, C), (other, C)]));
    }
    let pairs = [(R, R), (I, I), (I, R), (R, I), (C, C)];
    if n % 2 == 0 {
        for (label, low) in [("5", 1), ("6", ni - 1)] {
            for (j, (a, an)) in pairs.into_iter().enumerate() {
                out.push(item(format!("{label}.{}", j + 1), 4, vec![(0, lift(a)), (low, a), (ni, an)]));
            }
        }
    }
    let families: [(&str, usize, Option<usize>, Vec<Vec<(usize, CoefficientDomain)>>); 4] = [
        (
            "7",
            4,
            top_rank(n, &[0, 2], &[0, 1], &[0, 1]),
            vec![vec![(0, R), (2, R)], vec![(0, R), (2, I)], vec![(0, C), (2, C)]],
        ),
        (
            "9",
            5,
            top_rank(n, &[0, 3], &[0, 1, 2], &[0]),
            vec![vec![(0, R), (3, R)], vec![(0, R), (3, I)], vec![(0, C), (3, C)]],
        ),
        (
            "10",
            6,
            top_rank(n, &[0, 1], &[0], &[0, 1, 2]),
            vec![vec![(0, R), (1, R)], vec![(0, R), (1, I)], vec![(0, C), (1, C)]],
        ),
        ("11", 6, top_rank(n, &[0], &[0, 1, 2, 3], &[0, 1, 2, 3]), vec![vec![(0, R)], vec![(0, C)]]),
    ];
    for (label, min_n, top, patterns) in families {
        for (j, p) in patterns.iter().enumerate() {
            out.push(item(format!("{label}.{}", j + 1), min_n, series(0, top, p)));
        }
    }
    if n % 2 == 1 {
        let triples = [(R, R, R), (R, I, I), (I, I, R), (I, R, I), (C, C, C)];
        for (j, (a1, a2, a3)) in triples.into_iter().enumerate() {
            out.push(item(format!("8.{}", j + 1), 5, vec![(0, lift(a1)), (1, a1), (ni - 1, a2), (ni, a3)]));
        }
    }
    let whole: [[(usize, CoefficientDomain); 4]; 4] = [
        [(0, R), (1, R), (2, R), (3, R)],
        [(0, R), (1, R), (2, I), (3, I)],
        [(0, R), (1, I), (2, R), (3, I)],
        [(0, R), (1, I), (2, I), (3, R)],
    ];
    for (j, p) in whole.iter().enumerate() {
        out.push(item(format!("12.{}", j + 1), 2, series(0, Some(n), p)));
    }
    out
}

/// Specialises an item to `n`; colliding ranks with different domains merge
/// to the full domain.
fn realize(n: usize, field: Field, it: &Item) -> Result<Option<GradedSubspaceSpec>> {
    if n < it.min_n {
        return Ok(None);
    }
    let mut domains = vec![Absent; n + 1];
    for &(r, d) in &it.parts {
        if r < 0 || r as usize > n {
            continue;
        }
        let slot = &mut domains[r as usize];
        *slot = if *slot == Absent || *slot == d { d } else { C };
    }
    let spec = GradedSubspaceSpec::new(field, domains)?;
    Ok((!spec.is_empty()).then_some(spec))
}

/// Rank-0 and rank-n domains that may be adjoined to every base item.
fn augmentation_domains(t: TheoremId, n: usize) -> Option<(Vec<CoefficientDomain>, Vec<CoefficientDomain>)> {
    match t {
        TheoremId::T9 => Some((vec![R], vec![R])),
        TheoremId::T10 => Some((vec![R, I, C], vec![R, I, C])),
        TheoremId::T13 => Some((vec![I], vec![wc_domain(n)])),
        _ => None,
    }
}

fn augment(base: &CatalogEntry, n: usize, zero: &[CoefficientDomain], top: &[CoefficientDomain]) -> Vec<CatalogEntry> {
    let spec = &base.spec;
    let mut out = Vec::new();
    let with = |adds: &[(usize, CoefficientDomain)]| {
        let mut s = spec.clone();
        for &(k, d) in adds {
            s.set(k, d);
        }
        let text = adds.iter().map(|(k, d)| format!("{k}:{}", d.symbol())).collect::<Vec<_>>().join(" ");
        CatalogEntry { label: base.label.clone(), augmentation: Some(text), spec: s }
    };
    let free0 = spec.domain(0) == Absent;
    // rank n commutes with everything for odd n, and with even ranks for even n
    let free_n = spec.domain(n) == Absent && (n % 2 == 1 || spec.only_even_ranks());
    if free0 {
        out.extend(zero.iter().map(|&d| with(&[(0, d)])));
    }
    if free_n {
        for &dn in top {
            out.push(with(&[(n, dn)]));
            if free0 {
                out.extend(zero.iter().map(|&d0| with(&[(0, d0), (n, dn)])));
            }
        }
    }
    out
}

/// Labelled catalog for theorem `t` at dimension `n`, base items first, each
/// spec listed once under its first label.
pub fn catalog_entries(t: TheoremId, n: usize, field: Field) -> Result<Vec<CatalogEntry>> {
    if !t.applies_to(field) {
        return Err(Error::Inapplicable(format!("{t} does not apply to the {field} field")));
    }
    if n == 0 || n > crate::algebra::MAX_DIM {
        return Err(Error::Inapplicable(format!("{t} needs 1 <= n <= {}, got {n}", crate::algebra::MAX_DIM)));
    }
    let mut base = Vec::new();
    match t {
        TheoremId::T1 | TheoremId::T2 | TheoremId::T3 => {
            for (label, pattern) in type_theorem(t, field) {
                let spec = GradedSubspaceSpec::from_type_pattern(n, field, pattern)?;
                if !spec.is_empty() {
                    base.push(CatalogEntry { label, augmentation: None, spec });
                }
            }
        }
        _ => {
            let items = match t {
                TheoremId::T8 => t8_items(n, field),
                TheoremId::T9 => rank_items(n, |_| R),
                TheoremId::T10 => t10_items(n),
                TheoremId::T11 => t11_items(n),
                TheoremId::T12 => t12_items(n),
                TheoremId::T13 => rank_items(n, wc_domain),
                _ => unreachable!(),
            };
            for it in &items {
                if let Some(spec) = realize(n, field, it)? {
                    base.push(CatalogEntry { label: it.label.clone(), augmentation: None, spec });
                }
            }
        }
    }
    let mut all = base.clone();
    if let Some((zero, top)) = augmentation_domains(t, n) {
        for b in &base {
            all.extend(augment(b, n, &zero, &top));
        }
    }
    let mut seen = BTreeSet::new();
    all.retain(|e| seen.insert(e.spec.clone()));
    Ok(all)
}

/// Sorted, deduplicated specs of theorem `t` at `n`, augmentations included.
pub fn catalog(t: TheoremId, n: usize, field: Field) -> Result<Vec<GradedSubspaceSpec>> {
    let mut specs: Vec<_> = catalog_entries(t, n, field)?.into_iter().map(|e| e.spec).collect();
    specs.sort();
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, field: Field, ranks: &[(usize, CoefficientDomain)]) -> GradedSubspaceSpec {
        GradedSubspaceSpec::from_ranks(n, field, ranks).unwrap()
    }

    #[test]
    fn top_rank_examples() {
        // 2 ⊕ 3 ⊕ 6 ⊕ 7 ... = 23: n = k, k+1 for even k, n = k+1, k+2 for odd k
        assert_eq!(top_rank(8, &[2, 3], &[0, 1], &[1, 2]), Some(7));
        assert_eq!(top_rank(7, &[2, 3], &[0, 1], &[1, 2]), Some(6));
        assert_eq!(top_rank(9, &[2, 3], &[0, 1], &[1, 2]), Some(7));
        assert_eq!(top_rank(10, &[2], &[1, 2, 3, 4], &[1, 2, 3, 4]), Some(6));
    }

    #[test]
    fn t9_at_four() {
        let got = catalog(TheoremId::T9, 4, Field::Real).unwrap();
        let r = |ks: &[usize]| spec(4, Field::Real, &ks.iter().map(|&k| (k, R)).collect::<Vec<_>>());
        for want in [r(&[0]), r(&[4]), r(&[1, 2]), r(&[2]), r(&[1, 2, 3, 4]), r(&[2, 3]), r(&[0, 2, 3])] {
            assert!(got.contains(&want), "missing {want}");
        }
        // 2 ⊕ 3 has an odd rank, so 4 cannot be adjoined at even n
        assert!(!got.contains(&r(&[2, 3, 4])));
        assert!(got.contains(&r(&[0, 2, 4])));
    }

    #[test]
    fn t11_item_four_at_three() {
        let got = catalog_entries(TheoremId::T11, 3, Field::Real).unwrap();
        let four = got.iter().find(|e| e.spec == spec(3, Field::Real, &[(0, R), (2, R)])).unwrap();
        assert_eq!(four.label, "4");
    }

    #[test]
    fn t13_at_one() {
        let got = catalog(TheoremId::T13, 1, Field::Complex).unwrap();
        assert!(got.contains(&spec(1, Field::Complex, &[(0, I)])));
        assert!(got.contains(&spec(1, Field::Complex, &[(1, I)])));
        assert!(got.iter().all(|s| s.is_wc_pattern()));
    }

    #[test]
    fn t12_whole_patterns_present() {
        let got = catalog_entries(TheoremId::T12, 4, Field::Complex).unwrap();
        for label in ["12.1", "12.2", "12.3", "12.4"] {
            assert!(got.iter().any(|e| e.label == label), "{label}");
        }
    }

    #[test]
    fn t10_item_8_4_has_imaginary_top_rank() {
        for (n, lo, hi) in [(6, 5, 6), (7, 5, 6)] {
            let got = catalog_entries(TheoremId::T10, n, Field::Complex).unwrap();
            let e = got.iter().find(|e| e.label == "8.4" && e.augmentation.is_none()).unwrap();
            assert_eq!(e.spec, spec(n, Field::Complex, &[(1, I), (2, R), (lo, R), (hi, I)]));
        }
    }

    #[test]
    fn field_applicability() {
        assert!(matches!(catalog(TheoremId::T9, 3, Field::Complex), Err(Error::Inapplicable(_))));
        assert!(matches!(catalog(TheoremId::T12, 3, Field::Real), Err(Error::Inapplicable(_))));
        assert!(catalog(TheoremId::T2, 3, Field::Real).is_ok());
    }

    #[test]
    fn type_theorem_sizes_at_generic_n() {
        assert_eq!(catalog(TheoremId::T2, 8, Field::Complex).unwrap().len(), 15);
        assert_eq!(catalog(TheoremId::T3, 8, Field::Real).unwrap().len(), 4);
        assert_eq!(catalog(TheoremId::T1, 8, Field::Complex).unwrap().len(), 4);
    }

    #[test]
    fn parses_ids() {
        assert_eq!("T13".parse::<TheoremId>().unwrap(), TheoremId::T13);
        assert_eq!("t9".parse::<TheoremId>().unwrap(), TheoremId::T9);
        assert_eq!("10".parse::<TheoremId>().unwrap(), TheoremId::T10);
        assert!("T4".parse::<TheoremId>().is_err());
    }
}
