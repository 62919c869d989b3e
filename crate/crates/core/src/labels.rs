//! Binary labelings and the left-swap calculus.
//!
//! Positions in the public API are 1-based, matching the textbook formulas
//! `s_i = n - n1 + i - p_i` and `p_i = n - n1 + i - s_i`. Internally the bits
//! are a plain `Vec<bool>`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A ground-truth hypothesis `y` in `{0,1}^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelVector {
    bits: Vec<bool>,
}

impl LabelVector {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Builds from `0`/`1` integers; anything else is rejected.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        bits.iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::Parse {
                    what: "label bit",
                    input: b.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn n1(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn n0(&self) -> usize {
        self.len() - self.n1()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    /// Value at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<bool> {
        i.checked_sub(1).and_then(|j| self.bits.get(j).copied())
    }

    /// 1-based indices of the positive examples, ascending.
    pub fn ones(&self) -> Vec<usize> {
        self.indices_where(true)
    }

    /// 1-based indices of the negative examples, ascending.
    pub fn zeros(&self) -> Vec<usize> {
        self.indices_where(false)
    }

    fn indices_where(&self, value: bool) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == value)
            .map(|(j, _)| j + 1)
            .collect()
    }

    pub fn positions(&self) -> PositionVector {
        PositionVector {
            n: self.len(),
            positions: self.ones(),
        }
    }

    /// Reorders bits from sorted-guess order back to original example order,
    /// where `rank[i]` is the 0-based sorted rank of original example `i`.
    pub(crate) fn unsort(&self, rank: &[usize]) -> LabelVector {
        LabelVector::new(rank.iter().map(|&r| self.bits[r]).collect())
    }
}

impl fmt::Display for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for LabelVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    what: "label string",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// Strictly increasing 1-based positions of the ones in a length-`n` vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionVector {
    n: usize,
    positions: Vec<usize>,
}

impl PositionVector {
    pub fn new(n: usize, positions: Vec<usize>) -> Result<Self> {
        let increasing = positions.windows(2).all(|w| w[0] < w[1]);
        let in_range = positions.iter().all(|&p| (1..=n).contains(&p));
        if !increasing || !in_range {
            return Err(Error::Parse {
                what: "position vector",
                input: format!("{positions:?} (n = {n})"),
            });
        }
        Ok(Self { n, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.positions
    }

    pub fn to_labels(&self) -> LabelVector {
        let mut bits = vec![false; self.n];
        for &p in &self.positions {
            bits[p - 1] = true;
        }
        LabelVector::new(bits)
    }
}

/// Left-swap counts `n0 >= s_1 >= ... >= s_n1 >= 0` applied to the ones of the
/// right-most configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwapVector {
    swaps: Vec<usize>,
    n0: usize,
}

impl SwapVector {
    pub fn new(swaps: Vec<usize>, n0: usize) -> Result<Self> {
        if let Some(&first) = swaps.first() {
            if first > n0 {
                return Err(Error::InvalidSwapVector(format!(
                    "s_1 = {first} exceeds n0 = {n0}"
                )));
            }
        }
        if let Some(i) = swaps.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidSwapVector(format!(
                "s_{} = {} < s_{} = {}",
                i + 1,
                swaps[i],
                i + 2,
                swaps[i + 1]
            )));
        }
        Ok(Self { swaps, n0 })
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.swaps.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.swaps
    }

    /// Total number of left-swaps, which equals the mispair count of the labeling.
    pub fn sum(&self) -> u64 {
        self.swaps.iter().map(|&s| s as u64).sum()
    }
}

/// Exchanges the `0` at `i - 1` with the `1` at `i` (1-based).
pub fn left_swap(labels: &LabelVector, i: usize) -> Result<LabelVector> {
    multi_left_swap(labels, i, 1)
}

/// `k` consecutive left-swaps from index `i`: the `1` at `i` moves to `i - k`,
/// the `k` zeros before it shift right by one. `k = 0` is the identity.
pub fn multi_left_swap(labels: &LabelVector, i: usize, k: usize) -> Result<LabelVector> {
    let invalid = |reason| Error::InvalidSwap { index: i, reason };
    if i < 2 || i > labels.len() {
        return Err(invalid("index out of range 2..=n"));
    }
    if k >= i {
        return Err(invalid("swap count must be below the index"));
    }
    if !labels.bits[i - 1] {
        return Err(invalid("entry at the index is not 1"));
    }
    if k == 0 {
        return Ok(labels.clone());
    }
    if labels.bits[i - 1 - k..i - 1].iter().any(|&b| b) {
        return Err(invalid("entries to the left are not all 0"));
    }
    let mut bits = labels.bits.clone();
    bits[i - 1 - k..i].rotate_right(1);
    Ok(LabelVector::new(bits))
}

/// The length-`n` labeling whose `n1` ones occupy the last positions.
pub fn rightmost(n: usize, n1: usize) -> Result<LabelVector> {
    if n1 > n {
        return Err(Error::InvalidShape { n, n1 });
    }
    let mut bits = vec![false; n];
    bits[n - n1..].fill(true);
    Ok(LabelVector::new(bits))
}

/// `s_i = n - n1 + i - p_i`.
pub fn labels_to_swaps(labels: &LabelVector) -> Result<SwapVector> {
    let n = labels.len();
    let ones = labels.ones();
    if ones.is_empty() {
        return Err(Error::EmptyClass);
    }
    let n1 = ones.len();
    let swaps = ones
        .iter()
        .enumerate()
        .map(|(j, &p)| n - n1 + (j + 1) - p)
        .collect();
    Ok(SwapVector { swaps, n0: n - n1 })
}

/// `p_i = n - n1 + i - s_i`; inverse of [`labels_to_swaps`].
pub fn swaps_to_labels(swaps: &SwapVector, n: usize) -> Result<LabelVector> {
    // Re-validate: fields are private but the caller may have mixed up `n`.
    let swaps = SwapVector::new(swaps.swaps.clone(), swaps.n0)?;
    let n1 = swaps.n1();
    if swaps.n0 + n1 != n {
        return Err(Error::InvalidSwapVector(format!(
            "n0 + n1 = {} + {} does not equal n = {n}",
            swaps.n0, n1
        )));
    }
    let mut bits = vec![false; n];
    for (j, &s) in swaps.swaps.iter().enumerate() {
        bits[n - n1 + j - s] = true;
    }
    Ok(LabelVector::new(bits))
}

/// Parses a label file: either one line of `0`/`1` characters or one bit per line.
/// Blank lines are skipped.
pub fn parse_labels(text: &str) -> Result<LabelVector> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(j, l)| (j + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut bits = Vec::new();
    for (line, content) in lines {
        for c in content.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::ParseLine {
                        line,
                        message: format!("expected 0 or 1, found {c:?}"),
                    })
                }
            }
        }
    }
    Ok(LabelVector::new(bits))
}
