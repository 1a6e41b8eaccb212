use num_rational::BigRational;

use super::vertex::VertexClass;
use crate::algebra::Polynomial;

/// The deformation parameter: left symbolic or pinned to a rational value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TParam {
    Symbolic,
    Value(BigRational),
}

impl TParam {
    pub fn value(n: i64) -> Self {
        TParam::Value(BigRational::from_integer(n.into()))
    }

    pub fn poly(&self) -> Polynomial {
        match self {
            TParam::Symbolic => Polynomial::t(),
            TParam::Value(v) => Polynomial::constant(v.clone()),
        }
    }
}

/// Boltzmann weights of a single vertex, one polynomial per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeights {
    pub a1: Polynomial,
    pub a2: Polynomial,
    pub b1: Polynomial,
    pub b2: Polynomial,
    pub c1: Polynomial,
    pub c2: Polynomial,
}

impl VertexWeights {
    /// Row weights `(1, z - t·a_j, t, z + a_j, z(t+1), 1)`.
    pub fn gamma(z: &Polynomial, col: u32, t: &TParam) -> Self {
        let t = t.poly();
        let alpha = Polynomial::alpha(col);
        VertexWeights {
            a1: Polynomial::one(),
            a2: z - &t * &alpha,
            b1: t.clone(),
            b2: z + &alpha,
            c1: z * (t + Polynomial::one()),
            c2: Polynomial::one(),
        }
    }

    /// Leading-degree row weights `(1, -a_j, 1, z + a_j, z, 1)`.
    pub fn gamma_inf(z: &Polynomial, col: u32) -> Self {
        let alpha = Polynomial::alpha(col);
        VertexWeights {
            a1: Polynomial::one(),
            a2: -&alpha,
            b1: Polynomial::one(),
            b2: z + &alpha,
            c1: z.clone(),
            c2: Polynomial::one(),
        }
    }

    /// Weights of the reflected top block in the dual Cauchy split:
    /// `(1, y + a_j, 1, y - a_j, 2y, 1)`.
    pub fn dual_top(y: &Polynomial, col: u32) -> Self {
        let alpha = Polynomial::alpha(col);
        VertexWeights {
            a1: Polynomial::one(),
            a2: y + &alpha,
            b1: Polynomial::one(),
            b2: y - &alpha,
            c1: y.scale(&BigRational::from_integer(2.into())),
            c2: Polynomial::one(),
        }
    }

    /// Crossing weights for two spectral strands:
    /// `(t·zi + zk, t·zk + zi, t(zk - zi), zi - zk, (t+1)zi, (t+1)zk)`.
    pub fn gamma_gamma(zi: &Polynomial, zk: &Polynomial, t: &TParam) -> Self {
        let t = t.poly();
        let t1 = &t + &Polynomial::one();
        VertexWeights {
            a1: &t * zi + zk,
            a2: &t * zk + zi,
            b1: &t * &(zk - zi),
            b2: zi - zk,
            c1: &t1 * zi,
            c2: &t1 * zk,
        }
    }

    /// Crossing weights for two shift strands: `(1, 1, β - α, 0, 1, 1)`.
    pub fn u_column(alpha: &Polynomial, beta: &Polynomial) -> Self {
        VertexWeights {
            a1: Polynomial::one(),
            a2: Polynomial::one(),
            b1: beta - alpha,
            b2: Polynomial::zero(),
            c1: Polynomial::one(),
            c2: Polynomial::one(),
        }
    }

    /// Crossing weights induced by two free-fermionic vertices:
    /// the unique (up to scale) weights solving the train relation.
    pub fn from_ybe(v: &VertexWeights, w: &VertexWeights) -> Self {
        VertexWeights {
            a1: &v.a1 * &w.a2 + &v.b2 * &w.b1,
            a2: &v.b1 * &w.b2 + &v.a2 * &w.a1,
            b1: &v.b1 * &w.a2 - &v.a2 * &w.b1,
            b2: &v.b2 * &w.a1 - &v.a1 * &w.b2,
            c1: &v.c1 * &w.c2,
            c2: &v.c2 * &w.c1,
        }
    }

    pub fn weight(&self, class: VertexClass) -> &Polynomial {
        match class {
            VertexClass::A1 => &self.a1,
            VertexClass::A2 => &self.a2,
            VertexClass::B1 => &self.b1,
            VertexClass::B2 => &self.b2,
            VertexClass::C1 => &self.c1,
            VertexClass::C2 => &self.c2,
        }
    }

    /// `a1·a2 + b1·b2 - c1·c2`; zero iff the vertex is free-fermionic.
    pub fn free_fermion_defect(&self) -> Polynomial {
        &self.a1 * &self.a2 + &self.b1 * &self.b2 - &self.c1 * &self.c2
    }

    /// Copy with one class weight shifted by an integer constant.
    pub fn perturbed(&self, class: VertexClass, delta: i64) -> Self {
        let mut out = self.clone();
        let shifted = self.weight(class) + &Polynomial::int(delta);
        match class {
            VertexClass::A1 => out.a1 = shifted,
            VertexClass::A2 => out.a2 = shifted,
            VertexClass::B1 => out.b1 = shifted,
            VertexClass::B2 => out.b2 = shifted,
            VertexClass::C1 => out.c1 = shifted,
            VertexClass::C2 => out.c2 = shifted,
        }
        out
    }
}

/// Which per-cell weight family a grid uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightPreset {
    Gamma(TParam),
    GammaInf,
    DualTop,
}

impl WeightPreset {
    pub fn name(&self) -> &'static str {
        match self {
            WeightPreset::Gamma(_) => "gamma",
            WeightPreset::GammaInf => "gamma-inf",
            WeightPreset::DualTop => "dual-top",
        }
    }
}

/// Grid weight assignment: a preset plus the spectral parameter of each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    pub preset: WeightPreset,
    spectral: Vec<Polynomial>,
    perturb: Option<(VertexClass, i64)>,
}

impl WeightTable {
    pub fn new(preset: WeightPreset, spectral: Vec<Polynomial>) -> Self {
        WeightTable {
            preset,
            spectral,
            perturb: None,
        }
    }

    /// Standard spectral assignment `row i ↦ z_i`.
    pub fn standard(preset: WeightPreset, n_rows: usize) -> Self {
        let spectral = (1..=n_rows as u32).map(Polynomial::z).collect();
        WeightTable::new(preset, spectral)
    }

    pub fn n_rows(&self) -> usize {
        self.spectral.len()
    }

    pub fn spectral(&self, row: usize) -> &Polynomial {
        &self.spectral[row - 1]
    }

    /// Copy with the spectral parameters of two rows exchanged.
    pub fn with_rows_swapped(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        out.spectral.swap(i - 1, j - 1);
        out
    }

    /// Copy with one class weight shifted by `delta` at every cell.
    pub fn with_perturbation(&self, class: VertexClass, delta: i64) -> Self {
        let mut out = self.clone();
        out.perturb = Some((class, delta));
        out
    }

    pub fn vertex_weights(&self, row: usize, col: u32) -> VertexWeights {
        let z = self.spectral(row);
        let w = match &self.preset {
            WeightPreset::Gamma(t) => VertexWeights::gamma(z, col, t),
            WeightPreset::GammaInf => VertexWeights::gamma_inf(z, col),
            WeightPreset::DualTop => VertexWeights::dual_top(z, col),
        };
        match self.perturb {
            Some((class, delta)) => w.perturbed(class, delta),
            None => w,
        }
    }

    pub fn weight(&self, row: usize, col: u32, class: VertexClass) -> Polynomial {
        self.vertex_weights(row, col).weight(class).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    fn z(i: u32) -> Polynomial {
        Polynomial::z(i)
    }
    fn a(j: u32) -> Polynomial {
        Polynomial::alpha(j)
    }

    #[test]
    fn gamma_weight_entries() {
        let table = WeightTable::standard(WeightPreset::Gamma(TParam::Symbolic), 2);
        assert_eq!(table.weight(1, 1, VertexClass::B2), z(1) + a(1));
        assert_eq!(table.weight(1, 2, VertexClass::A2), z(1) - Polynomial::t() * a(2));
        assert_eq!(table.weight(2, 1, VertexClass::A1), Polynomial::one());

        let at_minus_one = WeightTable::standard(WeightPreset::Gamma(TParam::value(-1)), 2);
        assert!(at_minus_one.weight(2, 3, VertexClass::C1).is_zero());

        let at_zero = WeightTable::standard(WeightPreset::Gamma(TParam::value(0)), 2);
        assert!(at_zero.weight(1, 2, VertexClass::B1).is_zero());
        assert_eq!(at_zero.weight(1, 2, VertexClass::C1), z(1));
    }

    #[test]
    fn free_fermion_presets() {
        let t = TParam::Symbolic;
        for w in [
            VertexWeights::gamma(&z(1), 1, &t),
            VertexWeights::gamma_inf(&z(2), 3),
            VertexWeights::dual_top(&z(1), 2),
            VertexWeights::gamma_gamma(&z(1), &z(2), &t),
            VertexWeights::u_column(&a(1), &a(2)),
        ] {
            assert!(w.free_fermion_defect().is_zero());
        }
    }

    #[test]
    fn constant_weights_are_not_free_fermionic() {
        let ones = VertexWeights {
            a1: Polynomial::one(),
            a2: Polynomial::one(),
            b1: Polynomial::one(),
            b2: Polynomial::one(),
            c1: Polynomial::one(),
            c2: Polynomial::one(),
        };
        assert_eq!(ones.free_fermion_defect(), Polynomial::one());
    }

    #[test]
    fn perturbation_breaks_free_fermion() {
        let t = TParam::Symbolic;
        for class in VertexClass::ALL {
            let w = VertexWeights::gamma(&z(1), 1, &t).perturbed(class, 1);
            assert!(
                !w.free_fermion_defect().is_zero(),
                "perturbing {class} kept the relation"
            );
        }
    }
}
