use std::fmt;

use serde::Serialize;

use super::signature::Signature;
use crate::error::{Error, Result};

/// A basis blade `e^{a_1 ... a_k}` with `a_1 < ... < a_k`, stored as a mask
/// where bit `a - 1` marks generator `e^a`. The empty mask is the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u32);

impl Blade {
    pub const IDENTITY: Blade = Blade(0);

    /// Builds a blade from one-based generator indices. Indices must be
    /// strictly ascending.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        let mut last = 0usize;
        for &a in indices {
            if a == 0 || a > 32 || a <= last {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("generator indices must be strictly ascending and >= 1, got {indices:?}"),
                });
            }
            mask |= 1 << (a - 1);
            last = a;
        }
        Ok(Blade(mask))
    }

    /// Generator `e^a` (one-based).
    pub fn generator(a: usize) -> Self {
        Blade(1 << (a - 1))
    }

    /// Blade spanned by generators `1..=n`.
    pub fn pseudoscalar(n: usize) -> Self {
        Blade(((1u64 << n) - 1) as u32)
    }

    pub fn rank(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// One-based generator indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn check(self, sig: Signature) -> Result<()> {
        if sig.n() < 32 && self.0 >> sig.n() != 0 {
            return Err(Error::MaskOutOfRange { mask: self.0, n: sig.n() });
        }
        Ok(())
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self.indices();
        write!(f, "e")?;
        if idx.iter().any(|&a| a > 9) {
            let parts: Vec<String> = idx.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join("_"))
        } else {
            for a in idx {
                write!(f, "{a}")?;
            }
            Ok(())
        }
    }
}

impl Serialize for Blade {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sign `s` with `e^A e^B = s e^{A xor B}`, without range checks.
///
/// The reordering sign counts, for every generator `b` in `B`, the generators
/// of `A` with a larger index that `b` has to move past; repeated generators
/// then contract to their metric entries.
#[inline]
pub fn product_sign(a: Blade, b: Blade, sig: Signature) -> f64 {
    let mut swaps = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        swaps += (a.0 >> bit >> 1).count_ones();
        rest &= rest - 1;
    }
    let negative_squares = (a.0 & b.0 & sig.negative_mask()).count_ones();
    if (swaps + negative_squares) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Geometric product of two basis blades: `e^A e^B = sign * e^C`.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> Result<(f64, Blade)> {
    a.check(sig)?;
    b.check(sig)?;
    Ok((product_sign(a, b, sig), Blade(a.0 ^ b.0)))
}

/// Sign picked up by reversing the factor order of a rank-`k` blade,
/// `(-1)^{k(k-1)/2}`.
pub fn reversal_sign(k: usize) -> f64 {
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference product: concatenate the generator words, bubble-sort with a
    /// sign flip per adjacent swap, then contract equal neighbours.
    fn word_product(a: Blade, b: Blade, sig: Signature) -> (f64, Blade) {
        let mut word: Vec<usize> = a.indices();
        word.extend(b.indices());
        let mut sign = 1.0;
        for i in 0..word.len() {
            for j in 0..word.len() - 1 - i {
                if word[j] > word[j + 1] {
                    word.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < word.len() {
            if i + 1 < word.len() && word[i] == word[i + 1] {
                sign *= sig.eta(word[i] - 1);
                i += 2;
            } else {
                out.push(word[i]);
                i += 1;
            }
        }
        (sign, Blade::from_indices(&out).unwrap())
    }

    #[test]
    fn small_examples() {
        let e2 = Signature::new(2, 0).unwrap();
        let b = |i: &[usize]| Blade::from_indices(i).unwrap();
        assert_eq!(blade_product(b(&[1]), b(&[2]), e2).unwrap(), (1.0, b(&[1, 2])));
        assert_eq!(blade_product(b(&[2]), b(&[1]), e2).unwrap(), (-1.0, b(&[1, 2])));
        let m1 = Signature::new(0, 1).unwrap();
        assert_eq!(blade_product(b(&[1]), b(&[1]), m1).unwrap(), (-1.0, Blade::IDENTITY));
        let mixed = Signature::new(1, 1).unwrap();
        // e1 e2 e1 e2 = -e1 e1 e2 e2 = -(+1)(-1)
        assert_eq!(blade_product(b(&[1, 2]), b(&[1, 2]), mixed).unwrap(), (1.0, Blade::IDENTITY));
    }

    #[test]
    fn rejects_out_of_range_masks() {
        let sig = Signature::new(2, 0).unwrap();
        assert!(matches!(
            blade_product(Blade(0b100), Blade(1), sig),
            Err(Error::MaskOutOfRange { .. })
        ));
    }

    #[test]
    fn agrees_with_word_reduction_for_all_small_signatures() {
        for n in 1..=5 {
            for sig in Signature::all_for(n).unwrap() {
                for a in 0..1u32 << n {
                    for b in 0..1u32 << n {
                        let got = blade_product(Blade(a), Blade(b), sig).unwrap();
                        assert_eq!(got, word_product(Blade(a), Blade(b), sig), "{sig} {a:b} {b:b}");
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_signs() {
        let signs: Vec<f64> = (0..8).map(reversal_sign).collect();
        assert_eq!(signs, vec![1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, -1.0]);
    }

    #[test]
    fn display_uses_underscores_past_nine() {
        assert_eq!(Blade::IDENTITY.to_string(), "e");
        assert_eq!(Blade::from_indices(&[1, 3, 4]).unwrap().to_string(), "e134");
        assert_eq!(Blade::from_indices(&[1, 12]).unwrap().to_string(), "e1_12");
    }
}
