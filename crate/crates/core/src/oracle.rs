//! Exhaustive reference implementations for cross-checking at small `n`.
//!
//! Every labeling of `n` examples is visited and its AUC recomputed by direct
//! pair counting against ascending guesses. Nothing here touches the swap
//! calculus or the counting recursion.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::auc::ExactAuc;
use crate::error::{Error, Result};
use crate::labels::LabelVector;

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 20;

/// Brute-force oracle over all `2^n` labelings, refusing `n` above `limit`.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(DEFAULT_EXHAUSTIVE_LIMIT)
    }
}

impl Oracle {
    /// `limit` is clamped to 63 so masks fit a `u64`.
    pub fn new(limit: usize) -> Self {
        Self {
            limit: limit.min(63),
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.limit {
            return Err(Error::LimitExceeded {
                n,
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Number of labelings whose AUC against ascending guesses is exactly `auc`.
    pub fn brute_force_count(&self, n: usize, auc: ExactAuc) -> Result<BigUint> {
        self.check(n)?;
        let hits = (0u64..1 << n)
            .into_par_iter()
            .filter(|&mask| pair_auc(mask, n) == Some(auc))
            .count();
        Ok(BigUint::from(hits))
    }

    /// The labelings counted by [`Oracle::brute_force_count`], in sorted-guess order.
    pub fn brute_force_enumerate(&self, n: usize, auc: ExactAuc) -> Result<BTreeSet<LabelVector>> {
        self.check(n)?;
        Ok((0u64..1 << n)
            .filter(|&mask| pair_auc(mask, n) == Some(auc))
            .map(|mask| mask_to_labels(mask, n))
            .collect())
    }

    /// Every AUC value some labeling with both classes present attains.
    pub fn achievable_aucs(&self, n: usize) -> Result<BTreeSet<ExactAuc>> {
        self.check(n)?;
        Ok((0u64..1 << n)
            .filter_map(|mask| pair_auc(mask, n))
            .collect())
    }
}

/// Bit `i` of `mask` is the label of the example ranked `i + 1`.
fn mask_to_labels(mask: u64, n: usize) -> LabelVector {
    LabelVector::new((0..n).map(|i| mask >> i & 1 == 1).collect())
}

/// Fraction of (negative, positive) pairs with the positive ranked higher,
/// or `None` when one class is empty.
fn pair_auc(mask: u64, n: usize) -> Option<ExactAuc> {
    let n1 = mask.count_ones() as u64;
    let n0 = n as u64 - n1;
    if n1 == 0 || n0 == 0 {
        return None;
    }
    let mut correct = 0u64;
    for i in 0..n {
        if mask >> i & 1 == 1 {
            continue;
        }
        for j in 0..n {
            if mask >> j & 1 == 1 && i < j {
                correct += 1;
            }
        }
    }
    Some(ExactAuc::new(correct, n0 * n1).expect("correct pairs bounded by total"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn auc(p: u64, q: u64) -> ExactAuc {
        ExactAuc::new(p, q).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<LabelVector> {
        items.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn count_examples() {
        let o = Oracle::default();
        assert_eq!(
            o.brute_force_count(4, auc(3, 4)).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            o.brute_force_count(4, auc(1, 1)).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            o.brute_force_count(4, auc(1, 2)).unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn enumerate_examples() {
        let o = Oracle::default();
        assert_eq!(
            o.brute_force_enumerate(4, auc(3, 4)).unwrap(),
            set(&["0101"])
        );
        assert_eq!(
            o.brute_force_enumerate(3, auc(1, 1)).unwrap(),
            set(&["001", "011"])
        );
        assert_eq!(
            o.brute_force_enumerate(4, auc(1, 2)).unwrap(),
            set(&["1001", "0110"])
        );
    }

    #[test]
    fn achievable_examples() {
        let o = Oracle::default();
        let two: Vec<_> = o.achievable_aucs(2).unwrap().into_iter().collect();
        assert_eq!(two, vec![auc(0, 1), auc(1, 1)]);
        let three: Vec<_> = o.achievable_aucs(3).unwrap().into_iter().collect();
        assert_eq!(three, vec![auc(0, 1), auc(1, 2), auc(1, 1)]);

        for n in 2..=9 {
            for c in o.achievable_aucs(n).unwrap() {
                let q = c.denom() as usize;
                assert!((1..n).any(|n1| (n1 * (n - n1)) % q == 0), "n={n} c={c}");
            }
        }
    }

    #[test]
    fn self_consistency() {
        let o = Oracle::default();
        for n in 2..=8 {
            for c in o.achievable_aucs(n).unwrap() {
                let listed = o.brute_force_enumerate(n, c).unwrap();
                assert_eq!(
                    BigUint::from(listed.len()),
                    o.brute_force_count(n, c).unwrap()
                );
            }
        }
    }

    #[test]
    fn limit_guard() {
        let o = Oracle::new(10);
        assert_eq!(
            o.brute_force_count(11, auc(1, 2)),
            Err(Error::LimitExceeded { n: 11, limit: 10 })
        );
        assert!(o.achievable_aucs(11).is_err());
        assert!(o.brute_force_enumerate(64, auc(1, 2)).is_err());
    }
}
