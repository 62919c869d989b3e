//! Exact counting of labelings with a prescribed number of misclassified pairs.
//!
//! `v(n0, n1, d)` is the number of swap vectors `n0 >= s_1 >= ... >= s_n1 >= 0`
//! summing to `d`, computed by the recursion over the swap count of the
//! left-most one:
//!
//! ```text
//! v(n0, n1, d) = sum_{k=0}^{min(d, n0)} v(k, n1 - 1, d - k)
//! v(n0, n1, 0) = 1,  v(0, n1, d > 0) = 0,  v(n0, 0, d > 0) = 0
//! ```
//!
//! Since no coordinate can exceed `d` and at most `d` coordinates can be
//! nonzero, `v(n0, n1, d) = v(min(n0, d), min(n1, d), d)`; the memo table is
//! keyed on the clamped indices.

use std::sync::RwLock;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::auc::{ExactAuc, MispairCount};
use crate::error::{Error, Result};
use crate::scalar::Count;

/// Default memo-table budget in bytes.
pub const DEFAULT_MEM_CAP: usize = 1 << 30;

/// Dense `(n0, n1, d)` memo table, fully populated within its dimensions.
#[derive(Debug, Clone)]
pub struct CountTable<C> {
    n0_max: usize,
    n1_max: usize,
    d_max: usize,
    entries: Vec<C>,
}

impl<C: Count> Default for CountTable<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Count> CountTable<C> {
    /// The 1x1x1 table holding `v(0, 0, 0) = 1`.
    pub fn new() -> Self {
        Self {
            n0_max: 0,
            n1_max: 0,
            d_max: 0,
            entries: vec![C::one()],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.n0_max, self.n1_max, self.d_max)
    }

    /// Approximate footprint: entry count times the inline size of `C`.
    pub fn bytes(&self) -> usize {
        self.entries.len() * std::mem::size_of::<C>()
    }

    fn covers(&self, n0: usize, n1: usize, d: usize) -> bool {
        n0 <= self.n0_max && n1 <= self.n1_max && d <= self.d_max
    }

    #[inline]
    fn index(&self, n0: usize, n1: usize, d: usize) -> usize {
        (n1 * (self.n0_max + 1) + n0) * (self.d_max + 1) + d
    }

    /// Entry lookup; `None` outside the populated dimensions.
    pub fn get(&self, n0: usize, n1: usize, d: usize) -> Option<&C> {
        self.covers(n0, n1, d)
            .then(|| &self.entries[self.index(n0, n1, d)])
    }

    /// Grows to at least the given dimensions, keeping existing entries.
    pub fn grow(&mut self, n0: usize, n1: usize, d: usize, mem_cap: usize) -> Result<()> {
        if self.covers(n0, n1, d) {
            return Ok(());
        }
        let (a, b, c) = (n0.max(self.n0_max), n1.max(self.n1_max), d.max(self.d_max));
        let len = (a + 1)
            .checked_mul(b + 1)
            .and_then(|x| x.checked_mul(c + 1))
            .ok_or(Error::CapacityExceeded {
                requested: usize::MAX,
                cap: mem_cap,
            })?;
        let requested = len.saturating_mul(std::mem::size_of::<C>());
        if requested > mem_cap {
            return Err(Error::CapacityExceeded {
                requested,
                cap: mem_cap,
            });
        }

        let mut next = CountTable {
            n0_max: a,
            n1_max: b,
            d_max: c,
            entries: Vec::with_capacity(len),
        };
        // Row-major fill in (n1, n0, d) order: every term of the sum lives in
        // layer n1 - 1, which is complete by the time layer n1 starts.
        for j in 0..=b {
            for i in 0..=a {
                for e in 0..=c {
                    let value = if let Some(old) = self.get(i, j, e) {
                        old.clone()
                    } else if e == 0 {
                        C::one()
                    } else if i == 0 || j == 0 {
                        C::zero()
                    } else {
                        let mut acc = C::zero();
                        for k in 0..=e.min(i) {
                            let term = &next.entries[next.index(k, j - 1, e - k)];
                            if !acc.checked_add_assign(term) {
                                return Err(Error::CountOverflow);
                            }
                        }
                        acc
                    };
                    next.entries.push(value);
                }
            }
        }
        *self = next;
        Ok(())
    }
}

/// One admissible positive-class size with its implied mispair count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub n1: usize,
    pub d: MispairCount,
}

/// Class sizes `n1` compatible with a reported AUC, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub n: usize,
    pub auc: ExactAuc,
    pub entries: Vec<Candidate>,
}

impl CandidateSet {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn n1_values(&self) -> Vec<usize> {
        self.entries.iter().map(|c| c.n1).collect()
    }
}

/// All `0 < n1 < n` with `q | (n - n1) n1`, each paired with
/// `d = (q - p)(n - n1) n1 / q`.
pub fn candidate_n1(n: usize, auc: ExactAuc) -> CandidateSet {
    let (p, q) = (auc.numer() as u128, auc.denom() as u128);
    let entries = (1..n)
        .filter_map(|n1| {
            let pairs = (n1 as u128) * ((n - n1) as u128);
            if !pairs.is_multiple_of(q) {
                return None;
            }
            let scaled = (q - p) * pairs;
            assert!(
                scaled.is_multiple_of(q),
                "non-integral mispair count for n1 = {n1}"
            );
            let d = u64::try_from(scaled / q).expect("mispair count fits u64");
            Some(Candidate {
                n1,
                d: MispairCount(d),
            })
        })
        .collect();
    CandidateSet { n, auc, entries }
}

/// Count for one candidate class size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Addend<C> {
    pub n1: usize,
    pub d: MispairCount,
    pub count: C,
}

/// `w(n, c)` and its per-`n1` addends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Breakdown<C> {
    pub n: usize,
    pub auc: ExactAuc,
    pub total: C,
    pub by_n1: Vec<Addend<C>>,
}

impl<C> Breakdown<C> {
    pub fn candidates(&self) -> CandidateSet {
        CandidateSet {
            n: self.n,
            auc: self.auc,
            entries: self
                .by_n1
                .iter()
                .map(|a| Candidate { n1: a.n1, d: a.d })
                .collect(),
        }
    }
}

/// Memoized counter. The table sits behind a read-write lock: lookups share it,
/// growth takes it exclusively, so one `Counter` can serve several threads.
#[derive(Debug)]
pub struct Counter<C = BigUint> {
    table: RwLock<CountTable<C>>,
    mem_cap: usize,
}

impl<C: Count> Default for Counter<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Count> Counter<C> {
    pub fn new() -> Self {
        Self::with_mem_cap(DEFAULT_MEM_CAP)
    }

    pub fn with_mem_cap(mem_cap: usize) -> Self {
        Self {
            table: RwLock::new(CountTable::new()),
            mem_cap,
        }
    }

    pub fn mem_cap(&self) -> usize {
        self.mem_cap
    }

    /// Current populated table dimensions.
    pub fn table_dims(&self) -> (usize, usize, usize) {
        self.table.read().expect("count table lock").dims()
    }

    fn clamp(n0: usize, n1: usize, d: u64) -> Option<(usize, usize, usize)> {
        let max_d = (n0 as u128) * (n1 as u128);
        if d as u128 > max_d {
            return None;
        }
        let d = usize::try_from(d).ok()?;
        Some((n0.min(d), n1.min(d), d))
    }

    /// Makes sure the table covers the clamped key of `(n0, n1, d)`.
    pub fn reserve(&self, n0: usize, n1: usize, d: u64) -> Result<()> {
        match Self::clamp(n0, n1, d) {
            None => Ok(()),
            Some((a, b, c)) => {
                if self.table.read().expect("count table lock").covers(a, b, c) {
                    return Ok(());
                }
                self.table
                    .write()
                    .expect("count table lock")
                    .grow(a, b, c, self.mem_cap)
            }
        }
    }

    /// `v(n0, n1, d)`: labelings with `n0` zeros and `n1` ones misclassifying
    /// exactly `d` pairs. Zero when `d > n0 n1`.
    pub fn count_fixed(&self, n0: usize, n1: usize, d: u64) -> Result<C> {
        let Some((a, b, c)) = Self::clamp(n0, n1, d) else {
            return Ok(C::zero());
        };
        {
            let table = self.table.read().expect("count table lock");
            if let Some(v) = table.get(a, b, c) {
                return Ok(v.clone());
            }
        }
        let mut table = self.table.write().expect("count table lock");
        table.grow(a, b, c, self.mem_cap)?;
        Ok(table.get(a, b, c).expect("grown table covers key").clone())
    }

    /// `w(n, c)`: total number of length-`n` labelings with AUC exactly `c`
    /// against any fixed distinct guesses.
    pub fn count_total(&self, n: usize, auc: ExactAuc) -> Result<Breakdown<C>> {
        self.count_total_with(n, auc, false)
    }

    /// As [`Counter::count_total`], optionally evaluating the addends on the
    /// rayon pool. The result is identical either way.
    pub fn count_total_with(
        &self,
        n: usize,
        auc: ExactAuc,
        parallel: bool,
    ) -> Result<Breakdown<C>> {
        let candidates = candidate_n1(n, auc);
        let addend = |c: &Candidate| -> Result<Addend<C>> {
            Ok(Addend {
                n1: c.n1,
                d: c.d,
                count: self.count_fixed(n - c.n1, c.n1, c.d.get())?,
            })
        };
        let by_n1: Vec<Addend<C>> = if parallel {
            for c in &candidates.entries {
                self.reserve(n - c.n1, c.n1, c.d.get())?;
            }
            candidates
                .entries
                .par_iter()
                .map(addend)
                .collect::<Result<_>>()?
        } else {
            candidates
                .entries
                .iter()
                .map(addend)
                .collect::<Result<_>>()?
        };
        let mut total = C::zero();
        for a in &by_n1 {
            if !total.checked_add_assign(&a.count) {
                return Err(Error::CountOverflow);
            }
        }
        Ok(Breakdown {
            n,
            auc,
            total,
            by_n1,
        })
    }

    /// One row per `n` in `n_min..=n_max` whose candidate set is nonempty.
    pub fn scan(&self, auc: ExactAuc, n_min: usize, n_max: usize) -> Result<Vec<Breakdown<C>>> {
        self.scan_with(auc, n_min, n_max, false)
    }

    pub fn scan_with(
        &self,
        auc: ExactAuc,
        n_min: usize,
        n_max: usize,
        parallel: bool,
    ) -> Result<Vec<Breakdown<C>>> {
        let mut rows = Vec::new();
        for n in n_min.max(2)..=n_max {
            if candidate_n1(n, auc).is_empty() {
                continue;
            }
            rows.push(self.count_total_with(n, auc, parallel)?);
        }
        Ok(rows)
    }
}
