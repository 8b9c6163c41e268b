//! Integer matrices with textual row and column labels, exported as CSV or JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl LabeledMatrix {
    pub fn new(rows: Vec<String>, cols: Vec<String>, entries: Vec<Vec<i64>>) -> Self {
        assert_eq!(entries.len(), rows.len(), "one entry row per row label");
        assert!(entries.iter().all(|e| e.len() == cols.len()), "one entry per column label");
        LabeledMatrix { rows, cols, entries }
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.len() == self.cols.len()
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
    }

    /// Plain product of the entry arrays; labels come from the outer factors.
    pub fn multiply(&self, other: &LabeledMatrix) -> Result<LabeledMatrix> {
        if self.cols.len() != other.rows.len() {
            return Err(Error::InvalidLabel(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows.len(),
                self.cols.len(),
                other.rows.len(),
                other.cols.len()
            )));
        }
        let mut entries = vec![vec![0i64; other.cols.len()]; self.rows.len()];
        for (i, row) in self.entries.iter().enumerate() {
            for (k, &a) in row.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.entries[k].iter().enumerate() {
                    entries[i][j] += a * b;
                }
            }
        }
        Ok(LabeledMatrix::new(self.rows.clone(), other.cols.clone(), entries))
    }

    /// First row holds the column labels (after an empty corner cell), first
    /// column the row labels.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let header: Vec<&str> = std::iter::once("").chain(self.cols.iter().map(|s| s.as_str())).collect();
        w.write_record(&header).expect("in-memory write");
        for (label, row) in self.rows.iter().zip(&self.entries) {
            let mut record = vec![label.clone()];
            record.extend(row.iter().map(|v| v.to_string()));
            w.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 labels")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrices always serialize")
    }
}
