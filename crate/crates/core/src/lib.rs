//! Exact counting and enumeration of the binary labelings that are compatible
//! with a reported AUC.
//!
//! Given `n` test examples with distinct classifier scores and an AUC reported
//! as a reduced fraction `p/q`, the library determines how many ground-truth
//! labelings produce exactly that AUC and streams them. A labeling with `n1`
//! positives is encoded as a nonincreasing vector of left-swap counts applied
//! to the configuration where every positive outranks every negative; the
//! number of misclassified pairs is the sum of that vector, so counting reduces
//! to a memoized recursion over `(n0, n1, d)`.
//!
//! ```
//! use aucleak::{BigCounter, ExactAuc};
//!
//! let counter = BigCounter::new();
//! let auc: ExactAuc = "1387/1440".parse().unwrap();
//! let w = counter.count_total(76, auc).unwrap();
//! assert_eq!(w.total.to_string(), "657488");
//! ```

pub mod auc;
pub mod counting;
pub mod decimal;
pub mod enumerate;
pub mod error;
pub mod labels;
pub mod oracle;
pub mod report;
pub mod scalar;

use num_rational::BigRational;

pub use auc::{
    compute_auc, mispair_count, mispair_count_sorted, parse_guesses, sort_permutation, ExactAuc,
    GuessVector, MispairCount, SortPermutation,
};
pub use counting::{
    candidate_n1, Addend, Breakdown, Candidate, CandidateSet, CountTable, Counter, DEFAULT_MEM_CAP,
};
pub use enumerate::{enumerate_all, enumerate_fixed, FixedStream, LabelingStream};
pub use error::{Error, Result};
pub use labels::{
    labels_to_swaps, left_swap, multi_left_swap, parse_labels, rightmost, swaps_to_labels,
    LabelVector, PositionVector, SwapVector,
};
pub use scalar::{Count, Score};

/// Arbitrary-precision count.
pub type BigCount = num_bigint::BigUint;
/// Memo table over arbitrary-precision counts.
pub type BigCountTable = CountTable<BigCount>;
/// Counter over arbitrary-precision counts; the default for all front ends.
pub type BigCounter = Counter<BigCount>;
/// Counter over `u64`, reporting [`Error::CountOverflow`] past `u64::MAX`.
pub type U64Counter = Counter<u64>;
/// Guesses parsed exactly from decimal text.
pub type ExactGuesses = GuessVector<BigRational>;
/// Guesses held as `f64`; NaN is rejected on construction.
pub type FloatGuesses = GuessVector<f64>;
