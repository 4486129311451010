use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::algebra::{product_sign, Blade, GradeSet, Operation, Signature};
use crate::error::{Error, Result};
use crate::types::EXHAUSTIVE_MAX_N;

fn check_ranks(k: usize, l: usize, n: usize) -> Result<()> {
    for r in [k, l] {
        if r > n {
            return Err(Error::RankOutOfRange { rank: r, n });
        }
    }
    Ok(())
}

/// Ranks that can occur in the product of a rank-`k` and a rank-`l`
/// element: `|k-l|, |k-l|+2, ..., min(k+l, 2n-k-l)`.
pub fn rank_product_range(k: usize, l: usize, n: usize) -> Result<GradeSet> {
    check_ranks(k, l, n)?;
    let (hi, lo) = if k >= l { (k, l) } else { (l, k) };
    let top = if hi + lo <= n { hi + lo } else { 2 * n - hi - lo };
    Ok(GradeSet::from_ranks((hi - lo..=top).step_by(2)))
}

/// Ranks realised by `op(e^A, e^B)` over blades of ranks `k` and `l`.
///
/// Two blades sharing `j` generators multiply to rank `k + l - 2j` and
/// satisfy `e^A e^B = (-1)^{kl - j} e^B e^A`, so the commutator keeps the
/// overlaps with `kl - j` odd and the anticommutator those with `kl - j`
/// even. The overlap ranges over `max(0, k+l-n) ..= min(k, l)`.
pub fn grade_interaction(k: usize, l: usize, n: usize, op: Operation) -> Result<GradeSet> {
    check_ranks(k, l, n)?;
    let mut out = GradeSet::EMPTY;
    for j in (k + l).saturating_sub(n)..=k.min(l) {
        let odd = (k * l - j) % 2 == 1;
        let keep = match op {
            Operation::Product => true,
            Operation::Commutator => odd,
            Operation::Anticommutator => !odd,
        };
        if keep {
            out.insert(k + l - 2 * j);
        }
    }
    Ok(out)
}

/// A pair of basis blades exhibiting an interaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub left: Blade,
    pub right: Blade,
}

/// For one operation and dimension: which result ranks each pair of ranks
/// produces, with a witness blade pair per `(k, l, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteractionTable {
    n: usize,
    op: Operation,
    realizable: Vec<GradeSet>,
    witnesses: BTreeMap<(usize, usize, usize), Witness>,
}

impl InteractionTable {
    /// Exhaustive scan over all blade pairs. The witness kept for each
    /// `(k, l, m)` is the first pair in ascending `(A, B)` mask order.
    pub fn from_blades(sig: Signature, op: Operation) -> Result<Self> {
        let n = sig.n();
        if n > EXHAUSTIVE_MAX_N {
            return Err(Error::LimitExceeded(format!(
                "blade-level interaction scan needs n <= {EXHAUSTIVE_MAX_N}, got {n}"
            )));
        }
        let mut realizable = vec![GradeSet::EMPTY; (n + 1) * (n + 1)];
        let mut witnesses = BTreeMap::new();
        for a in 0..1u32 << n {
            for b in 0..1u32 << n {
                let (ba, bb) = (Blade(a), Blade(b));
                let c = op.combine(product_sign(ba, bb, sig), product_sign(bb, ba, sig));
                if c == 0.0 {
                    continue;
                }
                let (k, l, m) = (ba.rank(), bb.rank(), Blade(a ^ b).rank());
                realizable[k * (n + 1) + l].insert(m);
                witnesses.entry((k, l, m)).or_insert(Witness { left: ba, right: bb });
            }
        }
        Ok(Self { n, op, realizable, witnesses })
    }

    /// Table from [`grade_interaction`]; witnesses are `A = e^{1..k}` and a
    /// `B` that shares the last `j` generators of `A`.
    pub fn from_rule(n: usize, op: Operation) -> Result<Self> {
        let mut realizable = vec![GradeSet::EMPTY; (n + 1) * (n + 1)];
        let mut witnesses = BTreeMap::new();
        for k in 0..=n {
            for l in 0..=n {
                let set = grade_interaction(k, l, n, op)?;
                realizable[k * (n + 1) + l] = set;
                for m in set.iter() {
                    let j = (k + l - m) / 2;
                    let left = Blade::pseudoscalar(k);
                    let shared = Blade::pseudoscalar(k).0 & !Blade::pseudoscalar(k - j).0;
                    let fresh = Blade::pseudoscalar(k + l - j).0 & !Blade::pseudoscalar(k).0;
                    witnesses.insert((k, l, m), Witness { left, right: Blade(shared | fresh) });
                }
            }
        }
        Ok(Self { n, op, realizable, witnesses })
    }

    /// Blade scan for `n <= 8`, the parity rule above that. Tables are
    /// cached per signature and operation.
    pub fn for_signature(sig: Signature, op: Operation) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<(Signature, Operation), Arc<InteractionTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("cache poisoned").get(&(sig, op)) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(if sig.n() <= EXHAUSTIVE_MAX_N {
            Self::from_blades(sig, op)?
        } else {
            Self::from_rule(sig.n(), op)?
        });
        cache.lock().expect("cache poisoned").insert((sig, op), Arc::clone(&table));
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn op(&self) -> Operation {
        self.op
    }

    pub fn realizable(&self, k: usize, l: usize) -> GradeSet {
        self.realizable[k * (self.n + 1) + l]
    }

    pub fn witness(&self, k: usize, l: usize, m: usize) -> Option<Witness> {
        self.witnesses.get(&(k, l, m)).copied()
    }

    /// Same realizable sets (witnesses ignored).
    pub fn same_grades(&self, other: &Self) -> bool {
        self.n == other.n && self.realizable == other.realizable
    }
}
