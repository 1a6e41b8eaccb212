use super::vertex::Spin;
use super::weights::{TParam, WeightPreset, WeightTable};
use crate::algebra::Polynomial;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A rectangular six-vertex system: grid size, boundary spins and weights.
///
/// `top`/`bottom` are indexed by column number (1 = rightmost physical
/// column); `left`/`right` by row (1 = top row).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSystem {
    pub n_rows: usize,
    pub n_cols: usize,
    pub weights: WeightTable,
    pub top: Vec<Spin>,
    pub bottom: Vec<Spin>,
    pub left: Vec<Spin>,
    pub right: Vec<Spin>,
}

/// Top-boundary minus columns for shape `λ`: the entries `λ_j + n - j + 1`.
pub fn boundary_columns(lambda: &Partition, n: usize) -> Result<Vec<u32>> {
    lambda.add_rho(n)
}

impl LatticeSystem {
    /// Grid with the standard shape boundary: left and bottom all plus,
    /// right all minus, top minus exactly in the `λ + ρ` columns.
    pub fn with_shape_boundary(
        lambda: &Partition,
        n: usize,
        n_cols: usize,
        weights: WeightTable,
    ) -> Result<Self> {
        let minus_cols = boundary_columns(lambda, n)?;
        assert_eq!(weights.n_rows(), n, "weight table must cover every row");
        assert!(n_cols >= lambda.first() as usize + n);
        let mut top = vec![Spin::Plus; n_cols];
        for &c in &minus_cols {
            top[c as usize - 1] = Spin::Minus;
        }
        Ok(LatticeSystem {
            n_rows: n,
            n_cols,
            weights,
            top,
            bottom: vec![Spin::Plus; n_cols],
            left: vec![Spin::Plus; n],
            right: vec![Spin::Minus; n],
        })
    }

    /// The system whose partition function factors through the shape `λ`:
    /// `n` rows, `n + λ₁` columns, row weights with deformation `t`.
    pub fn gamma(lambda: &Partition, n: usize, t: TParam) -> Result<Self> {
        let n_cols = lambda.first() as usize + n;
        let weights = WeightTable::standard(WeightPreset::Gamma(t), n);
        Self::with_shape_boundary(lambda, n, n_cols, weights)
    }

    /// Same boundary with the leading-degree weights.
    pub fn gamma_inf(lambda: &Partition, n: usize) -> Result<Self> {
        let n_cols = lambda.first() as usize + n;
        let weights = WeightTable::standard(WeightPreset::GammaInf, n);
        Self::with_shape_boundary(lambda, n, n_cols, weights)
    }

    /// The `(m+n) × (m+n)` square with all-minus top boundary and spectral
    /// order `(y_m, …, y_1, x_1, …, x_n)` realized as `z_1, …, z_{m+n}`.
    pub fn dual_cauchy_square(n: usize, m: usize) -> Self {
        let size = n + m;
        let weights = WeightTable::standard(WeightPreset::Gamma(TParam::value(1)), size);
        Self::with_shape_boundary(&Partition::empty(), size, size, weights)
            .expect("empty shape always fits")
    }

    /// Top block of the split square: `m` rows carrying `z_1, …, z_m`, all
    /// columns minus on top, the `λ` boundary on the cut line below.
    pub fn dual_cauchy_top(lambda: &Partition, n: usize, m: usize) -> Result<Self> {
        if lambda.length() > n || lambda.first() as usize > m {
            return Err(Error::ShapeOutOfBox);
        }
        let n_cols = n + m;
        let weights = WeightTable::standard(WeightPreset::Gamma(TParam::value(1)), m);
        let mut bottom = vec![Spin::Plus; n_cols];
        for &c in &boundary_columns(lambda, n)? {
            bottom[c as usize - 1] = Spin::Minus;
        }
        Ok(LatticeSystem {
            n_rows: m,
            n_cols,
            weights,
            top: vec![Spin::Minus; n_cols],
            bottom,
            left: vec![Spin::Plus; m],
            right: vec![Spin::Minus; m],
        })
    }

    /// Bottom block of the split square: `n` rows carrying `z_{m+1}, …,
    /// z_{m+n}`, with the standard `λ` boundary over `m + n` columns.
    pub fn dual_cauchy_bottom(lambda: &Partition, n: usize, m: usize) -> Result<Self> {
        if lambda.length() > n || lambda.first() as usize > m {
            return Err(Error::ShapeOutOfBox);
        }
        let spectral = (1..=n as u32).map(|i| Polynomial::z(m as u32 + i)).collect();
        let weights = WeightTable::new(WeightPreset::Gamma(TParam::value(1)), spectral);
        Self::with_shape_boundary(lambda, n, n + m, weights)
    }

    /// The flip-reflect image of the top block: `m` rows carrying
    /// `y_i = z_{m+1-i}` with reflected weights and the `hat(λ)` boundary.
    pub fn dual_cauchy_top_reflected(lambda: &Partition, n: usize, m: usize) -> Result<Self> {
        let hat = lambda.hat(n, m)?;
        let spectral = (1..=m as u32).map(|i| Polynomial::z(m as u32 + 1 - i)).collect();
        let weights = WeightTable::new(WeightPreset::DualTop, spectral);
        Self::with_shape_boundary(&hat, m, n + m, weights)
    }

    /// Minus columns of the top boundary, in decreasing order.
    pub fn top_minus_columns(&self) -> Vec<u32> {
        (1..=self.n_cols as u32)
            .rev()
            .filter(|&c| self.top[c as usize - 1].is_minus())
            .collect()
    }

    /// True for the standard shape boundary (left/bottom plus, right minus,
    /// one top minus per row).
    pub fn has_shape_boundary(&self) -> bool {
        self.left.iter().all(|s| !s.is_minus())
            && self.bottom.iter().all(|s| !s.is_minus())
            && self.right.iter().all(|s| s.is_minus())
            && self.top_minus_columns().len() == self.n_rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn top_boundary_marks_shifted_shape() {
        let sys = LatticeSystem::gamma(&shape(&[5, 4, 1]), 3, TParam::Symbolic).unwrap();
        assert_eq!(sys.n_cols, 8);
        assert_eq!(sys.top_minus_columns(), vec![8, 6, 2]);
        assert!(sys.has_shape_boundary());
    }

    #[test]
    fn degenerate_grids() {
        let sys = LatticeSystem::gamma(&Partition::empty(), 1, TParam::Symbolic).unwrap();
        assert_eq!((sys.n_rows, sys.n_cols), (1, 1));
        assert_eq!(sys.top_minus_columns(), vec![1]);

        let sys = LatticeSystem::gamma(&shape(&[1]), 1, TParam::Symbolic).unwrap();
        assert_eq!((sys.n_rows, sys.n_cols), (1, 2));
        assert_eq!(sys.top_minus_columns(), vec![2]);
    }

    #[test]
    fn too_long_shape_is_rejected() {
        assert_eq!(
            LatticeSystem::gamma(&shape(&[1, 1]), 1, TParam::Symbolic),
            Err(Error::ShapeTooLong)
        );
    }

    #[test]
    fn split_blocks_share_the_cut_line() {
        let lam = shape(&[2, 1]);
        let top = LatticeSystem::dual_cauchy_top(&lam, 2, 2).unwrap();
        let bottom = LatticeSystem::dual_cauchy_bottom(&lam, 2, 2).unwrap();
        assert_eq!(top.bottom, bottom.top);
        assert!(!top.has_shape_boundary());
        assert!(bottom.has_shape_boundary());
    }

    #[test]
    fn reflected_top_boundary_is_the_complement() {
        for (n, m) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
            for lam in crate::combinatorics::partitions_in_box(n, m as u32) {
                let top = LatticeSystem::dual_cauchy_top(&lam, n, m).unwrap();
                let reflected = LatticeSystem::dual_cauchy_top_reflected(&lam, n, m).unwrap();
                // Flipping the cut line yields exactly the hat boundary.
                let flipped: Vec<u32> = (1..=top.n_cols as u32)
                    .rev()
                    .filter(|&c| !top.bottom[c as usize - 1].is_minus())
                    .collect();
                assert_eq!(flipped, reflected.top_minus_columns());
            }
        }
    }
}
