use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// A permutation of `{1, …, N}`, stored by its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::IndexOutOfRange);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The longest element `i ↦ n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// Adjacent transposition `s_i` in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(Error::IndexOutOfRange);
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.images.len())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    /// Canonical reduced word by inversion elimination (bubble sort):
    /// the returned letters satisfy `w = s_{i₁} · s_{i₂} ⋯ s_{i_k}` with
    /// length equal to the inversion count.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        let mut swaps = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..v.len().saturating_sub(1) {
                if v[i] > v[i + 1] {
                    v.swap(i, i + 1);
                    swaps.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        swaps.reverse();
        swaps
    }

    /// Multiply out a word of adjacent transpositions in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation> {
        let mut acc = Permutation::identity(n);
        for &i in word {
            acc = acc.compose(&Permutation::transposition(n, i)?);
        }
        Ok(acc)
    }

    /// All permutations of `1..=n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: images.clone(),
            });
            if !next_permutation(&mut images) {
                break;
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.images)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// The Grassmannian permutation `w_λ ∈ S_{n+m}` attached to `λ` in the
/// `n × m` box: `w(i) = λ_{n+1-i} + i` for `i ≤ n` and
/// `w(i) = i - λ'_{i-n}` for `i > n`. Its only possible descent is at `n`.
pub fn grassmannian_perm(lambda: &Partition, n: usize, m: usize) -> Result<Permutation> {
    if lambda.length() > n || lambda.first() as usize > m {
        return Err(Error::ShapeOutOfBox);
    }
    let conj = lambda.conjugate();
    let images = (1..=n + m)
        .map(|i| {
            if i <= n {
                lambda.part(n + 1 - i) as usize + i
            } else {
                i - conj.part(i - n) as usize
            }
        })
        .collect();
    Permutation::from_images(images)
}
