//! The three constructions of factorial Schur functions — alternant ratio,
//! tableau sum, lattice partition function — plus double Schubert
//! polynomials via divided differences.
//!
//! The `x`/`y` alphabets of the Schubert construction are realized as the
//! `z`/`a` variables of the common ring; callers rebind them with
//! substitutions where needed.

use std::collections::BTreeMap;

use crate::algebra::{Monomial, Polynomial, Variable, MAX_SHIFT};
use crate::combinatorics::{enumerate_ssyt, Partition, Permutation};
use crate::error::{Error, Result};
use crate::exec;
use crate::lattice::{partition_function, LatticeSystem, TParam};

/// Which construction produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Determinant,
    Tableau,
    Lattice,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Determinant => "determinant",
            Method::Tableau => "tableau",
            Method::Lattice => "lattice",
        }
    }
}

/// A factorial Schur value with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurResult {
    pub lambda: Partition,
    pub n: usize,
    pub method: Method,
    pub value: Polynomial,
    /// Number of tableaux or lattice states summed (None for determinant).
    pub support_count: Option<usize>,
}

impl SchurResult {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("lambda".into(), self.lambda.to_json());
        obj.insert("n".into(), serde_json::json!(self.n));
        obj.insert("method".into(), serde_json::json!(self.method.name()));
        obj.insert("value".into(), self.value.to_json());
        serde_json::Value::Object(obj)
    }
}

/// The shifted power `(z_i | a)^r = (z_i + a_1) ⋯ (z_i + a_r)`.
pub fn shifted_power(i: u32, r: u32) -> Result<Polynomial> {
    if r > MAX_SHIFT {
        return Err(Error::ShiftBudgetExceeded);
    }
    let z = Polynomial::z(i);
    let mut acc = Polynomial::one();
    for k in 1..=r {
        acc = acc.checked_mul(&(&z + &Polynomial::alpha(k)))?;
    }
    Ok(acc)
}

/// The alternant `det((z_i | a)^{μ_j})`, expanded exactly over all
/// permutations.
pub fn alternant(mu: &[u32], n: usize) -> Result<Polynomial> {
    assert_eq!(mu.len(), n, "exponent tuple must have length n");
    let powers: Vec<Vec<Polynomial>> = (1..=n as u32)
        .map(|i| mu.iter().map(|&e| shifted_power(i, e)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let perms = Permutation::all(n);
    exec::try_map_reduce(
        &perms,
        Polynomial::zero(),
        |sigma| {
            let mut prod = Polynomial::one();
            for i in 1..=n {
                prod = prod.checked_mul(&powers[i - 1][sigma.apply(i) - 1])?;
            }
            if sigma.sign() < 0 {
                prod = -prod;
            }
            Ok(prod)
        },
        |a, b| a.checked_add(&b),
    )
}

/// Weyl denominator `∏_{i<j} (z_i - z_j)`.
pub fn weyl_denominator(n: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            acc = acc * (Polynomial::z(i) - Polynomial::z(j));
        }
    }
    acc
}

/// Deformed denominator `∏_{i<j} (t z_j + z_i)`.
pub fn deformed_denominator(n: usize, t: &TParam) -> Polynomial {
    let t = t.poly();
    let mut acc = Polynomial::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            acc = acc * (&t * &Polynomial::z(j) + Polynomial::z(i));
        }
    }
    acc
}

/// Factorial Schur function as the alternant ratio.
pub fn schur_det(lambda: &Partition, n: usize) -> Result<SchurResult> {
    let num = alternant(&lambda.add_delta(n)?, n)?;
    let den = alternant(&Partition::delta(n).parts().to_vec(), n)?;
    let value = num.exact_divide(&den)?;
    Ok(SchurResult {
        lambda: lambda.clone(),
        n,
        method: Method::Determinant,
        value,
        support_count: None,
    })
}

/// Factorial Schur function as the sum over semistandard tableaux of the
/// shifted products `∏ (z_{T(i,j)} + a_{T*(i,j)})`.
pub fn schur_tableau(lambda: &Partition, n: usize) -> Result<SchurResult> {
    let tableaux = enumerate_ssyt(lambda, n)?;
    let value = exec::try_map_reduce(
        &tableaux,
        Polynomial::zero(),
        |t| {
            let star = t.t_star();
            let mut prod = Polynomial::one();
            for (i, row) in t.rows().iter().enumerate() {
                for (j, &entry) in row.iter().enumerate() {
                    let factor = Polynomial::z(entry) + Polynomial::alpha(star[i][j]);
                    prod = prod.checked_mul(&factor)?;
                }
            }
            Ok(prod)
        },
        |a, b| a.checked_add(&b),
    )?;
    Ok(SchurResult {
        lambda: lambda.clone(),
        n,
        method: Method::Tableau,
        value,
        support_count: Some(tableaux.len()),
    })
}

/// Factorial Schur function extracted from the lattice partition function.
///
/// With symbolic `t` the quotient must be `t`-free; a nonzero `t`-degree
/// would mean the factorization itself failed, so it is a hard error.
pub fn schur_lattice(lambda: &Partition, n: usize, t: TParam) -> Result<SchurResult> {
    let system = LatticeSystem::gamma(lambda, n, t.clone())?;
    let z = partition_function(&system)?;
    let states = crate::lattice::enumerate_states(&system)?.len();
    let value = z.exact_divide(&deformed_denominator(n, &t))?;
    if t == TParam::Symbolic {
        assert_eq!(
            value.degree_in(Variable::T),
            0,
            "internal: lattice quotient must not depend on t"
        );
    }
    Ok(SchurResult {
        lambda: lambda.clone(),
        n,
        method: Method::Lattice,
        value,
        support_count: Some(states),
    })
}

/// Double Schubert polynomial `∂_{w⁻¹ w₀} ∏_{i+j ≤ N} (x_i - y_j)`, with
/// `x_i = z_i` and `y_j = a_j`.
pub fn double_schubert(w: &Permutation, n_vars: usize) -> Result<Polynomial> {
    let alphabet: Vec<Variable> = (1..=n_vars as u32).map(Variable::z).collect();
    let mut top = Polynomial::one();
    for i in 1..=n_vars as u32 {
        for j in 1..=(n_vars as u32 - i) {
            top = top.checked_mul(&(Polynomial::z(i) - Polynomial::alpha(j)))?;
        }
    }
    let chain = w.inverse().compose(&Permutation::longest(n_vars));
    apply_divided_differences(top, &chain.reduced_word(), &alphabet)
}

/// Apply `∂_{i₁} ∂_{i₂} ⋯ ∂_{i_k}` (rightmost letter first).
pub fn apply_divided_differences(
    f: Polynomial,
    word: &[usize],
    alphabet: &[Variable],
) -> Result<Polynomial> {
    let mut acc = f;
    for &i in word.iter().rev() {
        acc = acc.divided_difference(i, alphabet)?;
    }
    Ok(acc)
}

/// The substitution sending `z_i ↦ -a_{μ_i + n + 1 - i}`, the evaluation
/// point at which Schur values vanish outside `μ`.
pub fn alpha_mu_bindings(mu: &Partition, n: usize) -> Result<BTreeMap<Variable, Polynomial>> {
    if mu.length() > n {
        return Err(Error::ShapeTooLong);
    }
    let mut bindings = BTreeMap::new();
    for i in 1..=n {
        let index = mu.part(i) + (n - i) as u32 + 1;
        if index > MAX_SHIFT {
            return Err(Error::ShiftBudgetExceeded);
        }
        bindings.insert(Variable::z(i as u32), -Polynomial::alpha(index));
    }
    Ok(bindings)
}

/// Monomial `∏ z_i^{e_i}` for an exponent tuple.
pub fn z_monomial(exps: &[u32]) -> Polynomial {
    let pairs = exps
        .iter()
        .enumerate()
        .map(|(i, &e)| (Variable::z(i as u32 + 1), e));
    Polynomial::term(Monomial::from_pairs(pairs), num_rational::BigRational::from_integer(1.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn z(i: u32) -> Polynomial {
        Polynomial::z(i)
    }
    fn a(j: u32) -> Polynomial {
        Polynomial::alpha(j)
    }

    #[test]
    fn shifted_power_examples() {
        assert!(shifted_power(1, 0).unwrap().is_one());
        assert_eq!(
            shifted_power(1, 2).unwrap(),
            (z(1) + a(1)) * (z(1) + a(2))
        );
        assert_eq!(shifted_power(2, 1).unwrap(), z(2) + a(1));
        assert_eq!(shifted_power(1, MAX_SHIFT + 1), Err(Error::ShiftBudgetExceeded));
    }

    #[test]
    fn alternant_examples() {
        assert_eq!(alternant(&[1, 0], 2).unwrap(), z(1) - z(2));
        assert_eq!(
            alternant(&[2, 0], 2).unwrap(),
            (z(1) - z(2)) * (z(1) + z(2) + a(1) + a(2))
        );
        assert!(alternant(&[3, 3], 2).unwrap().is_zero());
    }

    #[test]
    fn weyl_denominator_matches_the_alternant() {
        for n in 1..=4 {
            let delta = Partition::delta(n).parts().to_vec();
            assert_eq!(alternant(&delta, n).unwrap(), weyl_denominator(n));
        }
    }

    #[test]
    fn determinant_construction_examples() {
        assert!(schur_det(&Partition::empty(), 2).unwrap().value.is_one());
        assert_eq!(
            schur_det(&shape(&[1]), 2).unwrap().value,
            z(1) + z(2) + a(1) + a(2)
        );
        assert_eq!(schur_det(&shape(&[1]), 1).unwrap().value, z(1) + a(1));
    }

    #[test]
    fn tableau_construction_examples() {
        assert!(schur_tableau(&Partition::empty(), 2).unwrap().value.is_one());
        assert_eq!(
            schur_tableau(&shape(&[1]), 2).unwrap().value,
            (z(1) + a(1)) + (z(2) + a(2))
        );
        let r = schur_tableau(&shape(&[4, 2]), 3).unwrap();
        assert_eq!(r.support_count, Some(enumerate_ssyt(&shape(&[4, 2]), 3).unwrap().len()));
    }

    #[test]
    fn worked_tableau_term() {
        // The single-tableau product for rows [1,1,1,3],[2,2].
        let t = crate::combinatorics::Tableau::new(vec![vec![1, 1, 1, 3], vec![2, 2]]).unwrap();
        let star = t.t_star();
        let mut prod = Polynomial::one();
        for (i, row) in t.rows().iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                prod = prod * (z(entry) + a(star[i][j]));
            }
        }
        let expected = (z(1) + a(1))
            * (z(1) + a(2))
            * (z(1) + a(3))
            * (z(3) + a(6))
            * (z(2) + a(1))
            * (z(2) + a(2));
        assert_eq!(prod, expected);
    }

    #[test]
    fn lattice_construction_examples() {
        assert!(schur_lattice(&Partition::empty(), 2, TParam::Symbolic)
            .unwrap()
            .value
            .is_one());
        assert_eq!(
            schur_lattice(&shape(&[1]), 1, TParam::Symbolic).unwrap().value,
            z(1) + a(1)
        );
        assert_eq!(
            schur_lattice(&shape(&[1]), 2, TParam::Symbolic).unwrap().value,
            z(1) + z(2) + a(1) + a(2)
        );
    }

    #[test]
    fn schubert_small_cases() {
        // w = w0 leaves the top product untouched.
        let w0 = Permutation::longest(2);
        assert_eq!(double_schubert(&w0, 2).unwrap(), z(1) - a(1));
        // w = id applies one divided difference.
        let id = Permutation::identity(2);
        assert!(double_schubert(&id, 2).unwrap().is_one());
    }

    #[test]
    fn schubert_is_word_independent() {
        let alphabet: Vec<Variable> = (1..=4).map(Variable::z).collect();
        let f = Polynomial::z(1).checked_pow(3).unwrap()
            * Polynomial::z(2).checked_pow(2).unwrap()
            + Polynomial::alpha(1) * Polynomial::z(3);
        // Two reduced words for the same element: braid-related.
        let lhs = apply_divided_differences(f.clone(), &[1, 2, 1], &alphabet).unwrap();
        let rhs = apply_divided_differences(f, &[2, 1, 2], &alphabet).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_bindings() {
        let b = alpha_mu_bindings(&Partition::empty(), 1).unwrap();
        assert_eq!(b[&Variable::z(1)], -a(1));
        let b = alpha_mu_bindings(&shape(&[1]), 1).unwrap();
        assert_eq!(b[&Variable::z(1)], -a(2));
        let b = alpha_mu_bindings(&shape(&[1]), 2).unwrap();
        assert_eq!(b[&Variable::z(1)], -a(3));
        assert_eq!(b[&Variable::z(2)], -a(1));
    }

    #[test]
    fn z_monomial_builds_exponent_tuples() {
        assert_eq!(z_monomial(&[2, 1, 0]), z(1) * z(1) * z(2));
        assert!(z_monomial(&[0, 0]).is_one());
    }
}
