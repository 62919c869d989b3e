//! Streaming enumeration of compatible labelings.
//!
//! Labelings are generated from their swap vectors in descending lexicographic
//! order. Each position `i` (0-based, `m = n1 - i` slots left, `r` swaps still
//! to place, previous coordinate `b`) may take any value in
//! `[ceil(r / m), min(r, b)]`, and every value in that range extends to at
//! least one full vector, so the stream never backtracks into dead branches.
//! State is the current swap vector alone.

use crate::auc::{sort_permutation, ExactAuc, GuessVector, MispairCount};
use crate::counting::{candidate_n1, Candidate};
use crate::error::{Error, Result};
use crate::labels::LabelVector;

/// All labelings with `n0` zeros, `n1` ones and exactly `d` misclassified
/// pairs, in sorted-guess order.
#[derive(Debug, Clone)]
pub struct FixedStream {
    n0: usize,
    n1: usize,
    d: u64,
    swaps: Vec<usize>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Emitted,
    Done,
}

impl FixedStream {
    pub fn new(n0: usize, n1: usize, d: u64) -> Self {
        let feasible = (d as u128) <= (n0 as u128) * (n1 as u128);
        let mut stream = Self {
            n0,
            n1,
            d,
            swaps: vec![0; if feasible { n1 } else { 0 }],
            state: if feasible { State::Fresh } else { State::Done },
        };
        if feasible {
            stream.fill_greedy(0, d as usize);
        }
        stream
    }

    pub fn params(&self) -> (usize, usize, MispairCount) {
        (self.n0, self.n1, MispairCount(self.d))
    }

    /// Largest-first fill of `swaps[from..]` with `rem` swaps.
    fn fill_greedy(&mut self, from: usize, mut rem: usize) {
        for j in from..self.n1 {
            let bound = if j == 0 { self.n0 } else { self.swaps[j - 1] };
            let s = rem.min(bound);
            self.swaps[j] = s;
            rem -= s;
        }
        debug_assert_eq!(rem, 0);
    }

    /// Steps to the lexicographically next smaller swap vector.
    fn advance(&mut self) -> bool {
        if self.n1 < 2 {
            return false;
        }
        let mut tail = self.swaps[self.n1 - 1];
        for i in (0..self.n1 - 1).rev() {
            tail += self.swaps[i];
            let slots = self.n1 - i;
            let lower = tail.div_ceil(slots);
            if self.swaps[i] > lower {
                self.swaps[i] -= 1;
                let rest = tail - self.swaps[i];
                self.fill_greedy(i + 1, rest);
                return true;
            }
        }
        false
    }

    /// Next swap vector without allocating.
    pub fn next_swaps(&mut self) -> Option<&[usize]> {
        match self.state {
            State::Done => return None,
            State::Fresh => self.state = State::Emitted,
            State::Emitted => {
                if !self.advance() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        Some(&self.swaps)
    }

    fn current_labels(&self) -> LabelVector {
        let n = self.n0 + self.n1;
        let mut bits = vec![false; n];
        for (j, &s) in self.swaps.iter().enumerate() {
            bits[self.n0 + j - s] = true;
        }
        LabelVector::new(bits)
    }
}

impl Iterator for FixedStream {
    type Item = LabelVector;

    fn next(&mut self) -> Option<LabelVector> {
        self.next_swaps()?;
        Some(self.current_labels())
    }
}

/// Streams every labeling with `n0` zeros, `n1` ones and `d` mispairs.
pub fn enumerate_fixed(n0: usize, n1: usize, d: u64) -> FixedStream {
    FixedStream::new(n0, n1, d)
}

/// Every length-`n` labeling with AUC exactly `auc`, grouped by ascending `n1`.
#[derive(Debug, Clone)]
pub struct LabelingStream {
    n: usize,
    auc: ExactAuc,
    candidates: std::vec::IntoIter<Candidate>,
    current: Option<(Candidate, FixedStream)>,
    rank: Option<Vec<usize>>,
}

impl LabelingStream {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn auc(&self) -> ExactAuc {
        self.auc
    }

    /// Class size and mispair count of the most recently emitted labeling.
    pub fn last_candidate(&self) -> Option<Candidate> {
        self.current.as_ref().map(|(c, _)| *c)
    }
}

impl Iterator for LabelingStream {
    type Item = LabelVector;

    fn next(&mut self) -> Option<LabelVector> {
        loop {
            if let Some((_, stream)) = &mut self.current {
                if let Some(sorted) = stream.next() {
                    return Some(match &self.rank {
                        Some(rank) => sorted.unsort(rank),
                        None => sorted,
                    });
                }
            }
            let c = self.candidates.next()?;
            self.current = Some((c, FixedStream::new(self.n - c.n1, c.n1, c.d.get())));
        }
    }
}

/// Streams all labelings of `n` examples with AUC `auc`. With `guesses`, bits
/// follow the original example order; without, they are in ascending-guess order.
pub fn enumerate_all<S>(
    n: usize,
    auc: ExactAuc,
    guesses: Option<&GuessVector<S>>,
) -> Result<LabelingStream> {
    let rank = match guesses {
        Some(g) if g.len() != n => {
            return Err(Error::LengthMismatch {
                labels: n,
                guesses: g.len(),
            })
        }
        Some(g) => Some(sort_permutation(g).ranks().to_vec()),
        None => None,
    };
    Ok(LabelingStream {
        n,
        auc,
        candidates: candidate_n1(n, auc).entries.into_iter(),
        current: None,
        rank,
    })
}
