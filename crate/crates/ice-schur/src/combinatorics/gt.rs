use std::fmt;

use crate::error::{Error, Result};

/// A strict Gelfand-Tsetlin pattern: a triangular array whose rows
/// interleave and are strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtPattern {
    rows: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let p = GtPattern { rows };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let n = self.rows.len();
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != n - i {
                return Err(Error::TopRowMismatch);
            }
            if row.iter().any(|&e| e == 0) || row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::NotStrict);
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                for (k, &e) in row.iter().enumerate() {
                    if e > above[k] || e < above[k + 1] {
                        return Err(Error::NotStrict);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn top_row(&self) -> &[u32] {
        &self.rows[0]
    }

    /// Row `i`, 1-based; rows past the triangle are empty.
    pub fn row(&self, i: usize) -> &[u32] {
        self.rows.get(i - 1).map_or(&[], |r| r.as_slice())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.rows)
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            writeln!(
                f,
                "{}{}",
                " ".repeat(i),
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )?;
        }
        Ok(())
    }
}

/// All strict patterns with the given top row, ascending in the
/// lexicographic order of concatenated rows.
pub fn enumerate_strict_gt(top: &[u32]) -> Result<Vec<GtPattern>> {
    if top.is_empty() || top.iter().any(|&e| e == 0) || top.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::NotStrict);
    }
    let mut rows = vec![top.to_vec()];
    let mut out = Vec::new();
    descend(&mut rows, &mut out);
    Ok(out)
}

fn descend(rows: &mut Vec<Vec<u32>>, out: &mut Vec<GtPattern>) {
    let above = rows.last().expect("at least the top row").clone();
    if above.len() == 1 {
        out.push(GtPattern { rows: rows.clone() });
        return;
    }
    let mut row = vec![0u32; above.len() - 1];
    fill_row(&above, &mut row, 0, rows, out);
}

fn fill_row(
    above: &[u32],
    row: &mut Vec<u32>,
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<GtPattern>,
) {
    if k == row.len() {
        rows.push(row.clone());
        descend(rows, out);
        rows.pop();
        return;
    }
    let lo = above[k + 1];
    let mut hi = above[k];
    if k > 0 {
        hi = hi.min(row[k - 1].saturating_sub(1));
    }
    for e in lo..=hi {
        row[k] = e;
        fill_row(above, row, k + 1, rows, out);
    }
    row[k] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_patterns_over_a_staircase_top() {
        let pats = enumerate_strict_gt(&[2, 1]).unwrap();
        assert_eq!(pats.len(), 2);
        assert_eq!(pats[0].rows(), &[vec![2, 1], vec![1]]);
        assert_eq!(pats[1].rows(), &[vec![2, 1], vec![2]]);
    }

    #[test]
    fn single_entry_top() {
        assert_eq!(enumerate_strict_gt(&[1]).unwrap().len(), 1);
    }

    #[test]
    fn contains_the_worked_pattern() {
        let pats = enumerate_strict_gt(&[8, 6, 2]).unwrap();
        let target = GtPattern::new(vec![vec![8, 6, 2], vec![7, 4], vec![4]]).unwrap();
        assert!(pats.contains(&target));
        let mut sorted = pats.clone();
        sorted.sort();
        assert_eq!(pats, sorted, "enumeration is lexicographically sorted");
    }

    #[test]
    fn staircase_tops_count_alternating_sign_matrices() {
        // Patterns over (n, …, 1) are counted by 1, 2, 7, 42, …
        let counts: Vec<usize> = (1..=4)
            .map(|n| {
                let top: Vec<u32> = (1..=n as u32).rev().collect();
                enumerate_strict_gt(&top).unwrap().len()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 7, 42]);
    }

    #[test]
    fn rejects_weak_or_zero_tops() {
        assert_eq!(enumerate_strict_gt(&[2, 2]), Err(Error::NotStrict));
        assert_eq!(enumerate_strict_gt(&[1, 0]), Err(Error::NotStrict));
        assert!(GtPattern::new(vec![vec![3, 1], vec![3]]).is_ok());
        assert_eq!(
            GtPattern::new(vec![vec![3, 1], vec![4]]),
            Err(Error::NotStrict)
        );
        assert_eq!(
            GtPattern::new(vec![vec![3, 1]]),
            Err(Error::TopRowMismatch)
        );
    }
}
