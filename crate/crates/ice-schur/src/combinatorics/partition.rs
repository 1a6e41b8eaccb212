use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing nonnegative parts.
///
/// Trailing zeros are preserved structurally but ignored by equality,
/// ordering and hashing, so `(1)` and `(1,0)` are the same partition.
#[derive(Debug, Clone)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(n-1, n-2, …, 1, 0)`.
    pub fn delta(n: usize) -> Self {
        Partition {
            parts: (0..n as u32).rev().collect(),
        }
    }

    /// The shifted staircase `(n, n-1, …, 2, 1)`.
    pub fn rho(n: usize) -> Self {
        Partition {
            parts: (1..=n as u32).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts without trailing zeros.
    pub fn trimmed(&self) -> &[u32] {
        let len = self
            .parts
            .iter()
            .rposition(|&p| p != 0)
            .map_or(0, |i| i + 1);
        &self.parts[..len]
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.trimmed().len()
    }

    /// The largest part (0 for the empty partition).
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `k`-th part, 1-based, zero-padded.
    pub fn part(&self, k: usize) -> u32 {
        if k >= 1 {
            self.parts.get(k - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let trimmed = self.trimmed();
        let cols = self.first() as usize;
        let parts = (1..=cols)
            .map(|c| trimmed.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .trimmed()
            .iter()
            .enumerate()
            .all(|(k, &p)| self.part(k + 1) >= p)
    }

    /// Cells `(i, j)` of the diagram, 1-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.trimmed().iter().enumerate() {
            for j in 1..=p as usize {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Entrywise sum with `rho(n)`, padded to length `n`.
    pub fn add_rho(&self, n: usize) -> Result<Vec<u32>> {
        if self.length() > n {
            return Err(Error::ShapeTooLong);
        }
        Ok((1..=n).map(|j| self.part(j) + (n - j + 1) as u32).collect())
    }

    /// Entrywise sum with `delta(n)`, padded to length `n`.
    pub fn add_delta(&self, n: usize) -> Result<Vec<u32>> {
        if self.length() > n {
            return Err(Error::ShapeTooLong);
        }
        Ok((1..=n).map(|j| self.part(j) + (n - j) as u32).collect())
    }

    /// Box complement used by the dual Cauchy identity:
    /// `hat(λ)_i = #{j ≤ n : λ_j ≤ m - i}` for `λ` inside the `n × m` box.
    pub fn hat(&self, n: usize, m: usize) -> Result<Partition> {
        if self.length() > n || self.first() as usize > m {
            return Err(Error::ShapeOutOfBox);
        }
        let parts = (1..=m)
            .map(|i| (1..=n).filter(|&j| self.part(j) as usize <= m - i).count() as u32)
            .collect();
        Ok(Partition { parts })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.trimmed()
                .iter()
                .map(|&p| serde_json::json!(p))
                .collect(),
        )
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.trimmed()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions with at most `rows` parts, each at most `max_part`,
/// in ascending lexicographic order.
pub fn partitions_in_box(rows: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(out: &mut Vec<Partition>, current: &mut Vec<u32>, rows: usize, bound: u32) {
        out.push(Partition::new(current.clone()).expect("built weakly decreasing"));
        if current.len() == rows {
            return;
        }
        for p in 1..=bound {
            current.push(p);
            rec(out, current, rows, p);
            current.pop();
        }
    }
    rec(&mut out, &mut current, rows, max_part);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_is_involutive_on_box() {
        for lam in partitions_in_box(4, 4) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn trailing_zeros_do_not_matter() {
        let a = Partition::new(vec![1]).unwrap();
        let b = Partition::new(vec![1, 0, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.length(), 1);
        assert_eq!(b.parts().len(), 3);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::NotAPartition));
    }

    #[test]
    fn hat_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(Partition::empty().hat(1, 1).unwrap(), p(&[1]));
        assert_eq!(p(&[1]).hat(1, 1).unwrap(), Partition::empty());
        let lam = p(&[2, 1]);
        let hat = lam.hat(2, 3).unwrap();
        assert_eq!(hat, p(&[2, 1]));
        assert_eq!(lam.size() + hat.size(), 2 * 3 - 3 + 3); // |λ| + |λ̂| = n·m
        assert_eq!(p(&[4]).hat(1, 3), Err(Error::ShapeOutOfBox));
    }

    #[test]
    fn hat_is_an_involution_between_boxes() {
        for (n, m) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            for lam in partitions_in_box(n, m as u32) {
                let hat = lam.hat(n, m).unwrap();
                assert!(hat.length() <= m && hat.first() <= n as u32);
                assert_eq!(lam.size() + hat.size(), (n * m) as u32);
                assert_eq!(hat.hat(m, n).unwrap(), lam);
            }
        }
    }

    #[test]
    fn add_rho_is_strictly_decreasing() {
        let lam = Partition::new(vec![5, 4, 1]).unwrap();
        assert_eq!(lam.add_rho(3).unwrap(), vec![8, 6, 2]);
        assert_eq!(lam.add_delta(3).unwrap(), vec![7, 5, 1]);
        assert_eq!(Partition::empty().add_rho(2).unwrap(), vec![2, 1]);
        assert_eq!(lam.add_rho(2), Err(Error::ShapeTooLong));
    }

    #[test]
    fn box_enumeration_counts() {
        assert_eq!(partitions_in_box(1, 3).len(), 4);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
    }
}
