use std::fmt;

use super::gt::GtPattern;
use super::partition::Partition;
use crate::error::{Error, Result};

/// A staircase tableau, stored column-wise.
///
/// Column `c` (1-based, left to right) holds `λ₁ + n - c + 1` distinct
/// integers from `{1, …, λ₁+n}` in ascending order; it is the complement of
/// row `n + 2 - c` of the associated Gelfand-Tsetlin pattern (rows past the
/// triangle are empty). Read as a tableau, rows weakly increase, columns
/// strictly increase and north-east steps weakly decrease.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    columns: Vec<Vec<u32>>,
}

impl Staircase {
    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Rightmost column: the complement of `λ + ρ` in `{1, …, λ₁+n}`.
    pub fn rightmost_column(&self) -> &[u32] {
        self.columns.last().map_or(&[], |c| c.as_slice())
    }

    /// Structural validity for shape `λ` with `n` rows of ice.
    pub fn is_valid(&self, lambda: &Partition, n: usize) -> bool {
        let top = lambda.first() as usize + n;
        if self.columns.len() != n + 1 {
            return false;
        }
        for (c, col) in self.columns.iter().enumerate() {
            if col.len() != top - c {
                return false;
            }
            if col.iter().any(|&v| v < 1 || v as usize > top) {
                return false;
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for c in 0..self.columns.len() - 1 {
            let (left, right) = (&self.columns[c], &self.columns[c + 1]);
            for r in 0..right.len() {
                // Rows weakly increase eastwards.
                if left[r] > right[r] {
                    return false;
                }
                // Diagonal condition: south-west neighbour dominates.
                if r + 1 < left.len() && left[r + 1] < right[r] {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.columns)
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for col in &self.columns {
            writeln!(
                f,
                "{}",
                col.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )?;
        }
        Ok(())
    }
}

/// Build the staircase for a strict pattern with top row `λ + ρ`:
/// column `c` is the sorted complement of pattern row `n + 2 - c`.
pub fn gt_to_staircase(gt: &GtPattern, lambda: &Partition, n: usize) -> Result<Staircase> {
    let expected = lambda.add_rho(n)?;
    if gt.top_row() != expected.as_slice() {
        return Err(Error::TopRowMismatch);
    }
    let top = lambda.first() as usize + n;
    let columns = (1..=n + 1)
        .map(|c| complement(gt.row(n + 2 - c), top))
        .collect();
    Ok(Staircase { columns })
}

/// Invert [`gt_to_staircase`]: recover pattern row `i` as the complement of
/// staircase column `n + 2 - i`.
pub fn staircase_to_gt(stair: &Staircase, lambda: &Partition, n: usize) -> Result<GtPattern> {
    if stair.columns.len() != n + 1 {
        return Err(Error::TopRowMismatch);
    }
    let top = lambda.first() as usize + n;
    let rows: Vec<Vec<u32>> = (1..=n)
        .map(|i| {
            let mut row = complement(&stair.columns[n + 1 - i], top);
            row.reverse(); // complements are ascending; pattern rows decrease
            row
        })
        .collect();
    let gt = GtPattern::new(rows)?;
    if gt.top_row() != lambda.add_rho(n)?.as_slice() {
        return Err(Error::TopRowMismatch);
    }
    Ok(gt)
}

fn complement(taken: &[u32], top: usize) -> Vec<u32> {
    (1..=top as u32).filter(|v| !taken.contains(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_strict_gt;

    fn shape(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_staircase_columns() {
        let lam = shape(&[5, 4, 1]);
        let gt = GtPattern::new(vec![vec![8, 6, 2], vec![7, 4], vec![4]]).unwrap();
        let stair = gt_to_staircase(&gt, &lam, 3).unwrap();
        assert_eq!(
            stair.columns(),
            &[
                vec![1, 2, 3, 4, 5, 6, 7, 8],
                vec![1, 2, 3, 5, 6, 7, 8],
                vec![1, 2, 3, 5, 6, 8],
                vec![1, 3, 4, 5, 7],
            ]
        );
        assert_eq!(stair.rightmost_column(), &[1, 3, 4, 5, 7]);
        assert!(stair.is_valid(&lam, 3));
        assert_eq!(staircase_to_gt(&stair, &lam, 3).unwrap(), gt);
    }

    #[test]
    fn degenerate_empty_shape() {
        let gt = GtPattern::new(vec![vec![1]]).unwrap();
        let stair = gt_to_staircase(&gt, &Partition::empty(), 1).unwrap();
        assert_eq!(stair.columns(), &[vec![1], vec![]]);
        assert!(stair.is_valid(&Partition::empty(), 1));
    }

    #[test]
    fn round_trip_over_all_patterns() {
        for (lam, top) in [
            (shape(&[1]), vec![4, 2, 1]),
            (shape(&[3, 1, 1]), vec![6, 3, 2]),
        ] {
            assert_eq!(lam.add_rho(3).unwrap(), top);
            for gt in enumerate_strict_gt(&top).unwrap() {
                let stair = gt_to_staircase(&gt, &lam, 3).unwrap();
                assert!(stair.is_valid(&lam, 3), "invalid staircase for {gt}");
                assert_eq!(staircase_to_gt(&stair, &lam, 3).unwrap(), gt);
            }
        }
    }

    #[test]
    fn top_row_mismatch_is_rejected() {
        let gt = GtPattern::new(vec![vec![2, 1], vec![1]]).unwrap();
        assert_eq!(
            gt_to_staircase(&gt, &shape(&[3]), 2),
            Err(Error::TopRowMismatch)
        );
    }
}
