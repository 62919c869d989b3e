//! Guess vectors, exact AUC values, and misclassified-pair counting.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::decimal::parse_decimal;
use crate::error::{Error, Result};
use crate::labels::LabelVector;
use crate::scalar::Score;

/// Reduced fraction `p/q` with `0 <= p <= q`, as reported by a scoring oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ExactAuc {
    p: u64,
    q: u64,
}

impl ExactAuc {
    /// Reduces `p/q`. Fails unless `q > 0` and `p <= q`.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 || p > q {
            return Err(Error::InvalidAuc { p, q });
        }
        let g = p.gcd(&q);
        Ok(Self { p: p / g, q: q / g })
    }

    pub fn numer(&self) -> u64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    fn from_rational(value: &BigRational, input: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "AUC",
            input: input.to_string(),
        };
        if value.is_negative() {
            return Err(err());
        }
        let p = value.numer().to_u64().ok_or_else(err)?;
        let q = value.denom().to_u64().ok_or_else(err)?;
        Self::new(p, q).map_err(|_| err())
    }
}

impl Ord for ExactAuc {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.p as u128 * other.q as u128;
        let rhs = other.p as u128 * self.q as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for ExactAuc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactAuc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Accepts `p/q` with integer parts, or a terminating decimal such as `0.75`.
impl FromStr for ExactAuc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let err = || Error::Parse {
                    what: "AUC",
                    input: s.to_string(),
                };
                let p: u64 = p.trim().parse().map_err(|_| err())?;
                let q: u64 = q.trim().parse().map_err(|_| err())?;
                Self::new(p, q).map_err(|_| err())
            }
            None => Self::from_rational(&parse_decimal(s)?, s),
        }
    }
}

impl TryFrom<String> for ExactAuc {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ExactAuc> for String {
    fn from(auc: ExactAuc) -> String {
        auc.to_string()
    }
}

/// Number of (negative, positive) pairs where the negative example outranks the positive one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MispairCount(pub u64);

impl MispairCount {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for MispairCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Maps each original example to its 0-based rank in ascending-score order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortPermutation {
    rank: Vec<usize>,
}

impl SortPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            rank: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// 0-based rank of each original example.
    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// 1-based rank of 1-based original index `i`.
    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i - 1] + 1
    }

    pub fn inverse(&self) -> SortPermutation {
        let mut inv = vec![0; self.rank.len()];
        for (i, &r) in self.rank.iter().enumerate() {
            inv[r] = i;
        }
        SortPermutation { rank: inv }
    }

    pub fn compose(&self, other: &SortPermutation) -> SortPermutation {
        SortPermutation {
            rank: self.rank.iter().map(|&r| other.rank[r]).collect(),
        }
    }

    /// Rearranges `items` (in original order) into sorted order.
    pub fn apply<T: Clone>(&self, items: &[T]) -> Vec<T> {
        let mut out: Vec<Option<T>> = vec![None; items.len()];
        for (item, &r) in items.iter().zip(&self.rank) {
            out[r] = Some(item.clone());
        }
        out.into_iter().map(|x| x.expect("bijective")).collect()
    }

    /// Labels in original order to sorted-guess order.
    pub fn sort_labels(&self, labels: &LabelVector) -> LabelVector {
        LabelVector::new(self.apply(labels.bits()))
    }

    /// Labels in sorted-guess order back to original order.
    pub fn unsort_labels(&self, sorted: &LabelVector) -> LabelVector {
        sorted.unsort(&self.rank)
    }
}

/// Pairwise distinct classifier outputs, `n >= 2`.
#[derive(Debug, Clone)]
pub struct GuessVector<S> {
    scores: Vec<S>,
    order: SortPermutation,
}

impl<S: Score> GuessVector<S> {
    pub fn new(scores: Vec<S>) -> Result<Self> {
        if scores.len() < 2 {
            return Err(Error::TooFewGuesses(scores.len()));
        }
        if let Some(i) = scores.iter().position(|s| s.partial_cmp(s).is_none()) {
            return Err(Error::IncomparableGuess { index: i + 1 });
        }
        let mut by_score: Vec<usize> = (0..scores.len()).collect();
        let mut incomparable = None;
        by_score.sort_by(|&a, &b| {
            scores[a].partial_cmp(&scores[b]).unwrap_or_else(|| {
                incomparable.get_or_insert(a.max(b));
                Ordering::Equal
            })
        });
        if let Some(i) = incomparable {
            return Err(Error::IncomparableGuess { index: i + 1 });
        }
        if let Some(w) = by_score
            .windows(2)
            .find(|w| scores[w[0]].partial_cmp(&scores[w[1]]) != Some(Ordering::Less))
        {
            return Err(Error::DuplicateGuess {
                first: w[0].min(w[1]) + 1,
                second: w[0].max(w[1]) + 1,
            });
        }
        let mut rank = vec![0; scores.len()];
        for (r, &i) in by_score.iter().enumerate() {
            rank[i] = r;
        }
        Ok(Self {
            scores,
            order: SortPermutation { rank },
        })
    }
}

impl<S> GuessVector<S> {
    pub fn scores(&self) -> &[S] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// Permutation that rearranges examples into strictly ascending guess order.
pub fn sort_permutation<S>(guesses: &GuessVector<S>) -> SortPermutation {
    guesses.order.clone()
}

/// `h` for labels already laid out in ascending-guess order: pairs of a `0`
/// at a higher index than a `1`.
pub fn mispair_count_sorted(labels: &LabelVector) -> MispairCount {
    let mut zeros_after = 0u64;
    let mut h = 0u64;
    for &bit in labels.bits().iter().rev() {
        if bit {
            h += zeros_after;
        } else {
            zeros_after += 1;
        }
    }
    MispairCount(h)
}

/// Number of pairs `(i in L0, j in L1)` with `guess[i] > guess[j]`.
pub fn mispair_count<S>(labels: &LabelVector, guesses: &GuessVector<S>) -> Result<MispairCount> {
    if labels.len() != guesses.scores.len() {
        return Err(Error::LengthMismatch {
            labels: labels.len(),
            guesses: guesses.scores.len(),
        });
    }
    Ok(mispair_count_sorted(&guesses.order.sort_labels(labels)))
}

/// Exact AUC as the reduced fraction `1 - h / (n0 n1)`.
pub fn compute_auc<S>(labels: &LabelVector, guesses: &GuessVector<S>) -> Result<ExactAuc> {
    let h = mispair_count(labels, guesses)?.get();
    let (n, n1) = (labels.len(), labels.n1());
    if n1 == 0 || n1 == n {
        return Err(Error::UndefinedAuc { n, n1 });
    }
    let pairs = (n1 * (n - n1)) as u64;
    ExactAuc::new(pairs - h, pairs)
}

/// Parses a guess file: one decimal literal per line, example index = line number.
pub fn parse_guesses(text: &str) -> Result<GuessVector<BigRational>> {
    let body = text.trim_end();
    let scores = body
        .lines()
        .enumerate()
        .map(|(j, line)| {
            parse_decimal(line).map_err(|_| Error::ParseLine {
                line: j + 1,
                message: format!("not a decimal literal: {:?}", line.trim()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GuessVector::new(scores).map_err(|e| match e {
        Error::DuplicateGuess { first, second } => Error::ParseLine {
            line: second,
            message: format!("duplicate guess (same value as line {first})"),
        },
        other => other,
    })
}
