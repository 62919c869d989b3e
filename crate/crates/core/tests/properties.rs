use std::collections::BTreeSet;

use aucleak::oracle::Oracle;
use aucleak::{
    compute_auc, enumerate_all, enumerate_fixed, labels_to_swaps, left_swap, mispair_count,
    mispair_count_sorted, multi_left_swap, sort_permutation, swaps_to_labels, BigCount, ExactAuc,
    GuessVector, LabelVector, SwapVector, U64Counter,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn labels_strategy(max_len: usize) -> impl Strategy<Value = LabelVector> {
    prop::collection::vec(any::<bool>(), 1..=max_len).prop_map(LabelVector::new)
}

/// Labels paired with distinct guesses of the same length.
fn labeled_guesses(max_len: usize) -> impl Strategy<Value = (LabelVector, Vec<i64>)> {
    (2..=max_len).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n).prop_map(LabelVector::new),
            prop::collection::btree_set(-1000i64..1000, n)
                .prop_map(|s| s.into_iter().collect::<Vec<_>>())
                .prop_shuffle(),
        )
    })
}

/// Pairs (i in L0, j in L1) with guess[i] > guess[j], straight from the definition.
fn pair_mispairs(labels: &LabelVector, guesses: &[i64]) -> u64 {
    let bits = labels.bits();
    let mut h = 0;
    for i in 0..bits.len() {
        for j in 0..bits.len() {
            if !bits[i] && bits[j] && guesses[i] > guesses[j] {
                h += 1;
            }
        }
    }
    h
}

proptest! {
    #[test]
    fn round_trip_through_swaps(y in labels_strategy(16)) {
        prop_assume!(y.n1() > 0);
        let s = labels_to_swaps(&y).unwrap();
        prop_assert!(s.as_slice().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(s.as_slice()[0] <= y.n0());
        prop_assert_eq!(s.sum(), mispair_count_sorted(&y).get());
        prop_assert_eq!(swaps_to_labels(&s, y.len()).unwrap(), y);
    }

    #[test]
    fn swap_vectors_round_trip(mut raw in prop::collection::vec(0usize..8, 1..10), n0 in 0usize..8) {
        raw.iter_mut().for_each(|x| *x = (*x).min(n0));
        raw.sort_unstable_by(|a, b| b.cmp(a));
        let s = SwapVector::new(raw, n0).unwrap();
        let y = swaps_to_labels(&s, n0 + s.n1()).unwrap();
        prop_assert_eq!(labels_to_swaps(&y).unwrap(), s);
    }

    #[test]
    fn every_left_swap_adds_one_mispair(y in labels_strategy(20), pick in any::<prop::sample::Index>()) {
        let bits = y.bits();
        let sites: Vec<usize> = (2..=bits.len()).filter(|&i| bits[i - 1] && !bits[i - 2]).collect();
        prop_assume!(!sites.is_empty());
        let i = sites[pick.index(sites.len())];
        let z = left_swap(&y, i).unwrap();
        prop_assert_eq!(mispair_count_sorted(&z).get(), mispair_count_sorted(&y).get() + 1);
    }

    #[test]
    fn consecutive_left_swaps_add_k(y in labels_strategy(20), pick in any::<prop::sample::Index>()) {
        let bits = y.bits();
        let ones: Vec<usize> = (2..=bits.len()).filter(|&i| bits[i - 1]).collect();
        prop_assume!(!ones.is_empty());
        let i = ones[pick.index(ones.len())];
        let gap = bits[..i - 1].iter().rev().take_while(|&&b| !b).count();
        for k in 0..=gap {
            let z = multi_left_swap(&y, i, k).unwrap();
            prop_assert_eq!(mispair_count_sorted(&z).get(), mispair_count_sorted(&y).get() + k as u64);
        }
    }

    #[test]
    fn mispairs_agree_with_definition((y, g) in labeled_guesses(14)) {
        let guesses = GuessVector::new(g.clone()).unwrap();
        let h = mispair_count(&y, &guesses).unwrap().get();
        prop_assert_eq!(h, pair_mispairs(&y, &g));
        let perm = sort_permutation(&guesses);
        prop_assert_eq!(h, mispair_count_sorted(&perm.sort_labels(&y)).get());
        prop_assert_eq!(perm.unsort_labels(&perm.sort_labels(&y)), y.clone());
        let sorted = perm.apply(&g);
        prop_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn auc_and_mispairs_are_complementary((y, g) in labeled_guesses(14)) {
        let guesses = GuessVector::new(g).unwrap();
        let (n0, n1) = (y.n0() as u64, y.n1() as u64);
        let h = mispair_count(&y, &guesses).unwrap().get();
        prop_assert!(h <= n0 * n1);
        match compute_auc(&y, &guesses) {
            Ok(c) => {
                // c + h / (n0 n1) == 1, cross-multiplied
                let pairs = n0 * n1;
                prop_assert_eq!(c.numer() * pairs + h * c.denom(), pairs * c.denom());
            }
            Err(_) => prop_assert!(n0 == 0 || n1 == 0),
        }
    }

    #[test]
    fn auc_depends_only_on_ranking((y, g) in labeled_guesses(12)) {
        prop_assume!(y.n1() > 0 && y.n0() > 0);
        let base = compute_auc(&y, &GuessVector::new(g.clone()).unwrap()).unwrap();
        let affine: Vec<f64> = g.iter().map(|&x| 0.001 * x as f64 - 4.5).collect();
        let cubed: Vec<BigRational> = g
            .iter()
            .map(|&x| BigRational::new(BigInt::from(x).pow(3) + 7, BigInt::from(9)))
            .collect();
        prop_assert_eq!(compute_auc(&y, &GuessVector::new(affine).unwrap()).unwrap(), base);
        prop_assert_eq!(compute_auc(&y, &GuessVector::new(cubed).unwrap()).unwrap(), base);
    }
}

#[test]
fn counts_partition_binomials() {
    let counter = U64Counter::new();
    for n in 0..=14usize {
        let mut binom = 1u64;
        for n1 in 0..=n {
            let n0 = n - n1;
            let sum: u64 = (0..=(n0 * n1) as u64)
                .map(|d| counter.count_fixed(n0, n1, d).unwrap())
                .sum();
            assert_eq!(sum, binom, "n0={n0} n1={n1}");
            binom = binom * (n - n1) as u64 / (n1 as u64 + 1);
        }
    }
}

#[test]
fn box_symmetry_and_boundaries() {
    let counter = U64Counter::new();
    for n0 in 0..=9usize {
        for n1 in 0..=9usize {
            let top = (n0 * n1) as u64;
            assert_eq!(counter.count_fixed(n0, n1, top).unwrap(), 1);
            assert_eq!(counter.count_fixed(n0, n1, top + 1).unwrap(), 0);
            for d in 0..=top {
                let v = counter.count_fixed(n0, n1, d).unwrap();
                assert_eq!(v, counter.count_fixed(n1, n0, d).unwrap());
                assert_eq!(v, counter.count_fixed(n0, n1, top - d).unwrap());
            }
        }
    }
}

#[test]
fn enumeration_matches_counts_and_is_sound() {
    let counter = U64Counter::new();
    for n in 0..=10usize {
        for n1 in 0..=n {
            let n0 = n - n1;
            for d in 0..=(n0 * n1) as u64 {
                let items: Vec<LabelVector> = enumerate_fixed(n0, n1, d).collect();
                assert_eq!(items.len() as u64, counter.count_fixed(n0, n1, d).unwrap());
                let unique: BTreeSet<_> = items.iter().collect();
                assert_eq!(unique.len(), items.len());
                for y in &items {
                    assert_eq!(y.n1(), n1);
                    assert_eq!(mispair_count_sorted(y).get(), d);
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_oracle_sets() {
    let oracle = Oracle::default();
    let counter = aucleak::BigCounter::new();
    for n in 2..=10 {
        for c in oracle.achievable_aucs(n).unwrap() {
            let first: Vec<LabelVector> = enumerate_all::<f64>(n, c, None).unwrap().collect();
            let second: Vec<LabelVector> = enumerate_all::<f64>(n, c, None).unwrap().collect();
            assert_eq!(first, second, "non-deterministic order at n={n} c={c}");
            let set: BTreeSet<LabelVector> = first.iter().cloned().collect();
            assert_eq!(set.len(), first.len());
            assert_eq!(
                set,
                oracle.brute_force_enumerate(n, c).unwrap(),
                "n={n} c={c}"
            );
            assert_eq!(
                counter.count_total(n, c).unwrap().total,
                BigCount::from(first.len())
            );
        }
    }
}

#[test]
fn unachievable_auc_counts_zero() {
    let counter = aucleak::BigCounter::new();
    let oracle = Oracle::default();
    for n in 2..=9usize {
        let achievable = oracle.achievable_aucs(n).unwrap();
        for q in 1..=20u64 {
            for p in 0..=q {
                let c = ExactAuc::new(p, q).unwrap();
                let total = counter.count_total(n, c).unwrap().total;
                assert_eq!(
                    total == BigCount::from(0u32),
                    !achievable.contains(&c),
                    "n={n} c={c}"
                );
            }
        }
    }
}
