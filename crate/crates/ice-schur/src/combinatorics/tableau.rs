use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        if !t.is_semistandard() {
            return Err(Error::NotAPartition);
        }
        Ok(t)
    }

    fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if i + 1 < self.rows.len() && self.rows[i + 1].len() > row.len() {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) || row.iter().any(|&e| e == 0) {
                return false;
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.iter().zip(above).any(|(&b, &a)| b <= a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(
            self.rows
                .iter()
                .map(|r| r.len() as u32)
                .collect::<Vec<_>>(),
        )
        .expect("row lengths weakly decrease")
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// The content-shifted array `T*(i, j) = T(i, j) + j - i`.
    ///
    /// Semistandardness keeps every value within `1..=n+λ₁-1`, so each one
    /// is a valid shift index.
    pub fn t_star(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &e)| {
                        let v = e as i64 + j as i64 - i as i64;
                        u32::try_from(v).expect("column strictness keeps T* positive")
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(
                f,
                "{}",
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )?;
        }
        Ok(())
    }
}

/// All semistandard tableaux of shape `lambda` with entries in `1..=n`,
/// in ascending lexicographic order of the row-reading word.
pub fn enumerate_ssyt(lambda: &Partition, n: usize) -> Result<Vec<Tableau>> {
    if lambda.length() > n {
        return Err(Error::ShapeTooLong);
    }
    let shape: Vec<usize> = lambda.trimmed().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill(&mut rows, &shape, n as u32, 0, 0, &mut out);
    Ok(out)
}

fn fill(
    rows: &mut Vec<Vec<u32>>,
    shape: &[usize],
    n: u32,
    mut r: usize,
    mut c: usize,
    out: &mut Vec<Tableau>,
) {
    // Advance to the next unfilled cell in reading order.
    while r < shape.len() && c >= shape[r] {
        r += 1;
        c = 0;
    }
    if r == shape.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for e in left.max(above)..=n {
        rows[r][c] = e;
        fill(rows, shape, n, r, c + 1, out);
    }
    rows[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_box_has_n_fillings() {
        let ts = enumerate_ssyt(&shape(&[1]), 2).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1]]);
        assert_eq!(ts[1].rows(), &[vec![2]]);
    }

    #[test]
    fn forced_column() {
        let ts = enumerate_ssyt(&shape(&[1, 1]), 2).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn contains_the_worked_tableau() {
        let ts = enumerate_ssyt(&shape(&[4, 2]), 3).unwrap();
        let target = Tableau::new(vec![vec![1, 1, 1, 3], vec![2, 2]]).unwrap();
        assert!(ts.contains(&target));
        // Reading words are strictly increasing in enumeration order.
        let words: Vec<Vec<u32>> = ts
            .iter()
            .map(|t| t.rows().iter().flatten().copied().collect())
            .collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn shape_longer_than_alphabet_errors() {
        assert_eq!(enumerate_ssyt(&shape(&[1, 1]), 1), Err(Error::ShapeTooLong));
    }

    #[test]
    fn t_star_examples() {
        let t = Tableau::new(vec![vec![1, 1, 1, 3], vec![2, 2]]).unwrap();
        assert_eq!(t.t_star(), vec![vec![1, 2, 3, 6], vec![1, 2]]);
        let single = Tableau::new(vec![vec![1]]).unwrap();
        assert_eq!(single.t_star(), vec![vec![1]]);
        let column = Tableau::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(column.t_star(), vec![vec![1], vec![1]]);
    }

    #[test]
    fn t_star_stays_in_shift_range() {
        let lam = shape(&[3, 2, 1]);
        for t in enumerate_ssyt(&lam, 3).unwrap() {
            for row in t.t_star() {
                for v in row {
                    assert!(v >= 1 && v <= 3 + lam.first() - 1);
                }
            }
        }
    }

    #[test]
    fn rejects_non_semistandard() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 1], vec![1]]).is_err());
    }
}
