//! Machine-readable encodings of counting and enumeration results.
//! Counts are always written as decimal strings.

use std::fmt::{Display, Write};

use serde::{Deserialize, Serialize};

use crate::counting::Breakdown;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddendRecord {
    pub n1: usize,
    pub d: u64,
    pub count: String,
}

/// JSON shape: `{"n", "auc": "p/q", "total", "by_n1": [{"n1", "d", "count"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakdownRecord {
    pub n: usize,
    pub auc: String,
    pub total: String,
    pub by_n1: Vec<AddendRecord>,
}

impl<C: Display> From<&Breakdown<C>> for BreakdownRecord {
    fn from(b: &Breakdown<C>) -> Self {
        Self {
            n: b.n,
            auc: b.auc.to_string(),
            total: b.total.to_string(),
            by_n1: b
                .by_n1
                .iter()
                .map(|a| AddendRecord {
                    n1: a.n1,
                    d: a.d.get(),
                    count: a.count.to_string(),
                })
                .collect(),
        }
    }
}

pub const CSV_HEADER: &str = "n,auc,total,n1,d,count";

impl BreakdownRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// CSV rows (no header), one per addend; an empty breakdown gives a single
    /// row with blank addend columns.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        if self.by_n1.is_empty() {
            writeln!(out, "{},{},{},,,", self.n, self.auc, self.total).unwrap();
        }
        for a in &self.by_n1 {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                self.n, self.auc, self.total, a.n1, a.d, a.count
            )
            .unwrap();
        }
        out
    }

    /// `{36, 40}`
    pub fn n1_set(&self) -> String {
        let parts: Vec<String> = self.by_n1.iter().map(|a| a.n1.to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// One enumerated labeling in JSON-lines mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub bits: String,
    pub n1: usize,
    pub d: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auc::ExactAuc;
    use crate::counting::Counter;

    #[test]
    fn json_shape() {
        let c: Counter = Counter::new();
        let b = c.count_total(4, ExactAuc::new(1, 2).unwrap()).unwrap();
        let rec = BreakdownRecord::from(&b);
        assert_eq!(
            rec.to_json(),
            r#"{"n":4,"auc":"1/2","total":"2","by_n1":[{"n1":2,"d":2,"count":"2"}]}"#
        );
        let back: BreakdownRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        assert_eq!(rec.csv_rows(), "4,1/2,2,2,2,2\n");
        assert_eq!(rec.n1_set(), "{2}");
    }

    #[test]
    fn empty_breakdown_csv() {
        let c: Counter = Counter::new();
        let b = c.count_total(5, ExactAuc::new(3, 7).unwrap()).unwrap();
        assert_eq!(BreakdownRecord::from(&b).csv_rows(), "5,3/7,0,,,\n");
    }
}
