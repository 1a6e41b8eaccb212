use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use super::verdict::{Params, Verdict};
use crate::algebra::{Polynomial, Variable};
use crate::combinatorics::{
    grassmannian_perm, partitions_in_box, GtPattern, Partition,
};
use crate::error::{Error, Result};
use crate::exec;
use crate::lattice::{
    column_ybe_cases, enumerate_states, enumerate_states_generic, frozen_column_wiring,
    frozen_row_wiring, partition_function, row_ybe_cases, LatticeState, LatticeSystem, TParam,
    VertexClass, VertexWeights, YbeCase,
};
use crate::schur::{
    alternant, deformed_denominator, double_schubert, schur_det, schur_tableau, z_monomial,
    alpha_mu_bindings,
};

/// Which families of identities to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    FreeFermion,
    Ybe,
    Tokuyama,
    TSpecializations,
    Vanishing,
    LascouxMcnamara,
    Schubert,
    SigmaSymmetry,
    DualCauchy,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::FreeFermion => "free-fermion",
            Suite::Ybe => "ybe",
            Suite::Tokuyama => "tokuyama",
            Suite::TSpecializations => "t-specializations",
            Suite::Vanishing => "vanishing",
            Suite::LascouxMcnamara => "lascoux-mcnamara",
            Suite::Schubert => "schubert",
            Suite::SigmaSymmetry => "sigma-symmetry",
            Suite::DualCauchy => "dual-cauchy",
        }
    }

    fn wants(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "free-fermion" => Ok(Suite::FreeFermion),
            "ybe" => Ok(Suite::Ybe),
            "tokuyama" => Ok(Suite::Tokuyama),
            "t-specializations" => Ok(Suite::TSpecializations),
            "vanishing" => Ok(Suite::Vanishing),
            "lascoux-mcnamara" => Ok(Suite::LascouxMcnamara),
            "schubert" => Ok(Suite::Schubert),
            "sigma-symmetry" => Ok(Suite::SigmaSymmetry),
            "dual-cauchy" => Ok(Suite::DualCauchy),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

/// Sweep bounds and options for a suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Largest number of spectral parameters in the shape sweeps.
    pub max_n: usize,
    /// Largest part in the shape sweeps.
    pub max_part: u32,
    /// Negative control: add the given constant to one class weight of the
    /// row preset everywhere.
    pub perturb: Option<(VertexClass, i64)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            max_n: 3,
            max_part: 3,
            perturb: None,
        }
    }
}

impl SuiteConfig {
    fn gamma_system(&self, lambda: &Partition, n: usize, t: TParam) -> Result<LatticeSystem> {
        let mut system = LatticeSystem::gamma(lambda, n, t)?;
        if let Some((class, delta)) = self.perturb {
            system.weights = system.weights.with_perturbation(class, delta);
        }
        Ok(system)
    }

    fn shape_sweep(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for n in 1..=self.max_n {
            for lam in partitions_in_box(n, self.max_part) {
                out.push((lam, n));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

/// `a1·a2 + b1·b2 - c1·c2 = 0` for a weight preset.
pub fn check_free_fermion(name: &str, weights: &VertexWeights) -> Verdict {
    Verdict::from_difference(
        "free-fermion",
        Params::default().preset(name),
        weights.free_fermion_defect(),
    )
}

/// The row crossing: induced weights match the closed form, and all 64
/// boundary cases agree under the frozen wiring.
pub fn check_ybe_lemma() -> Vec<Verdict> {
    let t = TParam::Symbolic;
    let v = VertexWeights::gamma(&Polynomial::z(1), 1, &t);
    let w = VertexWeights::gamma(&Polynomial::z(2), 1, &t);
    let u = VertexWeights::gamma_gamma(&Polynomial::z(1), &Polynomial::z(2), &t);
    let induced = VertexWeights::from_ybe(&v, &w);

    let mut out = Vec::new();
    let weight_defect = [
        (&u.a1, &induced.a1),
        (&u.a2, &induced.a2),
        (&u.b1, &induced.b1),
        (&u.b2, &induced.b2),
        (&u.c1, &induced.c1),
        (&u.c2, &induced.c2),
    ]
    .into_iter()
    .map(|(a, b)| a - b)
    .find(|d| !d.is_zero());
    out.push(match weight_defect {
        None => Verdict::pass("ybe-weights", Params::default()),
        Some(d) => Verdict::fail("ybe-weights", Params::default(), d),
    });

    out.push(cases_verdict(
        "ybe-row",
        Params::default(),
        &row_ybe_cases(&u, &v, &w, frozen_row_wiring()),
    ));
    out
}

/// The column crossing for two adjacent shift strands, all 64 cases.
pub fn check_vert_ybe() -> Verdict {
    let t = TParam::Symbolic;
    let v = VertexWeights::gamma(&Polynomial::z(1), 1, &t);
    let w = VertexWeights::gamma(&Polynomial::z(1), 2, &t);
    let u = VertexWeights::u_column(&Polynomial::alpha(1), &Polynomial::alpha(2));
    cases_verdict(
        "ybe-column",
        Params::default(),
        &column_ybe_cases(&u, &v, &w, frozen_column_wiring()),
    )
}

fn cases_verdict(identity: &str, params: Params, cases: &[YbeCase]) -> Verdict {
    match cases.iter().find(|c| !c.passes()) {
        None => Verdict::pass(identity, params),
        Some(bad) => {
            let boundary: String = bad.boundary.iter().map(|s| s.symbol()).collect();
            Verdict::fail(identity, params.case(&boundary), bad.defect())
        }
    }
}

/// Factorization of the partition function through the deformed
/// denominator and the alternant-ratio Schur value, fully symbolically.
pub fn check_tokuyama(config: &SuiteConfig, lambda: &Partition, n: usize) -> Result<Verdict> {
    let params = Params::default().lambda(lambda).n(n);
    let system = config.gamma_system(lambda, n, TParam::Symbolic)?;
    let z = partition_function(&system)?;
    let rhs = deformed_denominator(n, &TParam::Symbolic)
        .checked_mul(&schur_det(lambda, n)?.value)?;
    Ok(Verdict::from_difference(
        "tokuyama",
        params,
        z.checked_sub(&rhs)?,
    ))
}

/// `t = -1` collapses the partition function to the shifted alternant with
/// positive sign; `t = 0` (spectral order reversed) yields the tableau sum
/// times a staircase monomial, testing both exponent readings.
pub fn check_t_specializations(
    config: &SuiteConfig,
    lambda: &Partition,
    n: usize,
) -> Result<Vec<Verdict>> {
    let params = Params::default().lambda(lambda).n(n);
    let mut out = Vec::new();

    let z_minus = partition_function(&config.gamma_system(lambda, n, TParam::value(-1))?)?;
    let alt = alternant(&lambda.add_delta(n)?, n)?;
    out.push(Verdict::from_difference(
        "t-minus-one",
        params.clone(),
        z_minus.checked_sub(&alt)?,
    ));

    let z_zero = partition_function(&config.gamma_system(lambda, n, TParam::value(0))?)?;
    let reversed = reverse_z(&z_zero, n)?;
    let tableau = schur_tableau(lambda, n)?.value;
    let staircase_low: Vec<u32> = (0..n as u32).collect(); // (0, 1, …, n-1)
    let staircase_high: Vec<u32> = (1..=n as u32).collect(); // (1, 2, …, n)
    let corrected = z_monomial(&staircase_low).checked_mul(&tableau)?;
    let printed = z_monomial(&staircase_high).checked_mul(&tableau)?;
    out.push(resolve_two_readings(
        "t-zero",
        params,
        &reversed,
        &printed,
        "rho",
        &corrected,
        "delta",
        "rho-vs-delta",
    ));
    Ok(out)
}

/// The pinned three-row state whose deformation-free weight is written out
/// as a worked product.
pub fn check_t_zero_worked_state() -> Result<Verdict> {
    let lambda = Partition::new(vec![4, 2]).unwrap();
    let system = LatticeSystem::gamma(&lambda, 3, TParam::value(0))?;
    let gt = GtPattern::new(vec![vec![7, 4, 1], vec![5, 3], vec![4]]).unwrap();
    let state = LatticeState::from_gt(&system, &gt);
    let z = |i: u32| Polynomial::z(i);
    let a = |j: u32| Polynomial::alpha(j);
    let expected = z(1).checked_pow(2)?
        * z(2)
        * (z(1) + a(6))
        * (z(2) + a(2))
        * (z(2) + a(1))
        * (z(3) + a(3))
        * (z(3) + a(2))
        * (z(3) + a(1));
    let weight = state.weight(&system)?;
    Ok(Verdict::from_difference(
        "t-zero-state-weight",
        Params::default().lambda(&lambda).n(3),
        weight.checked_sub(&expected)?,
    ))
}

/// Vanishing at the shifted evaluation point: zero when `λ ⊄ μ`, and the
/// closed product (in exactly one orientation) when `λ = μ`. Pairs with
/// `λ ⊊ μ` carry no claim and yield no verdict.
pub fn check_vanishing(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<Option<Verdict>> {
    let params = Params::default().lambda(lambda).mu(mu).n(n);
    let value = schur_det(lambda, n)?
        .value
        .substitute(&alpha_mu_bindings(mu, n)?)?;
    if lambda == mu {
        let printed = vanishing_product(lambda, n, false)?;
        let negated = vanishing_product(lambda, n, true)?;
        return Ok(Some(resolve_two_readings(
            "vanishing",
            params,
            &value,
            &printed,
            "printed",
            &negated,
            "factors-negated",
            "vanishing-sign",
        )));
    }
    if !mu.contains(lambda) {
        return Ok(Some(Verdict::from_difference("vanishing", params, value)));
    }
    Ok(None)
}

/// `∏_{(i,j) ∈ λ} (a_{n-i+λ_i+1} - a_{n-λ'_j+j})`, optionally with every
/// factor negated.
fn vanishing_product(lambda: &Partition, n: usize, negate: bool) -> Result<Polynomial> {
    let conj = lambda.conjugate();
    let mut acc = Polynomial::one();
    for (i, j) in lambda.cells() {
        let row_index = n as u32 - i as u32 + lambda.part(i) + 1;
        let col_index = n as u32 - conj.part(j) + j as u32;
        let factor = Polynomial::alpha(row_index) - Polynomial::alpha(col_index);
        acc = acc.checked_mul(&if negate { -factor } else { factor })?;
    }
    Ok(acc)
}

/// The leading-degree weights: the partition function equals a staircase
/// monomial times the Schur value (both exponent readings tested, under
/// the same reversed spectral convention as the `t = 0` check), and the
/// per-state type counts match the documented values.
pub fn check_lascoux_mcnamara(lambda: &Partition, n: usize) -> Result<Vec<Verdict>> {
    let params = Params::default().lambda(lambda).n(n);
    let mut out = Vec::new();

    let system = LatticeSystem::gamma_inf(lambda, n)?;
    let z_inf = partition_function(&system)?;
    let reversed = reverse_z(&z_inf, n)?;
    let s = schur_det(lambda, n)?.value;
    let delta: Vec<u32> = (0..n as u32).rev().collect(); // (n-1, …, 0)
    let rho: Vec<u32> = (1..=n as u32).rev().collect(); // (n, …, 1)
    let corrected = z_monomial(&delta).checked_mul(&s)?;
    let printed = z_monomial(&rho).checked_mul(&s)?;
    out.push(resolve_two_readings(
        "lascoux-mcnamara",
        params.clone(),
        &reversed,
        &printed,
        "rho",
        &corrected,
        "delta",
        "rho-vs-delta",
    ));

    // Type counts per state: a2/b1/c1 total and a2/b2/c1 per column.
    let states = enumerate_states(&system)?;
    let expected_total = n * (n - 1) / 2;
    let total_verdict = match states.iter().find(|s| s.profile().a2_b1_c1 != expected_total) {
        None => Verdict::pass("state-type-count", params.clone()),
        Some(bad) => Verdict::fail(
            "state-type-count",
            params.clone(),
            Polynomial::int(bad.profile().a2_b1_c1 as i64 - expected_total as i64),
        ),
    };
    out.push(total_verdict);

    let delta_conj = conjugate_counts(&lambda.add_delta(n)?, system.n_cols);
    let rho_conj = conjugate_counts(&lambda.add_rho(n)?, system.n_cols);
    let matches = |expected: &[usize]| {
        states
            .iter()
            .all(|s| s.profile().per_column_a2_b2_c1 == expected)
    };
    out.push(if matches(&rho_conj) {
        Verdict::pass(
            "column-type-count",
            params.clone().resolution("rho"),
        )
    } else if matches(&delta_conj) {
        Verdict::pass_with_erratum(
            "column-type-count",
            params.resolution("delta"),
            "rho-vs-delta",
        )
    } else {
        let bad = states
            .iter()
            .map(|s| s.profile().per_column_a2_b2_c1)
            .find(|p| p != &delta_conj)
            .expect("some state mismatched");
        let first_off = bad
            .iter()
            .zip(&delta_conj)
            .map(|(&a, &b)| a as i64 - b as i64)
            .find(|&d| d != 0)
            .unwrap_or(1);
        Verdict::fail("column-type-count", params, Polynomial::int(first_off))
    });
    Ok(out)
}

/// Conjugate column counts of a strictly decreasing exponent tuple, padded
/// to the grid width.
fn conjugate_counts(tuple: &[u32], n_cols: usize) -> Vec<usize> {
    (1..=n_cols as u32)
        .map(|c| tuple.iter().filter(|&&e| e >= c).count())
        .collect()
}

/// Divided-difference construction against the alternant ratio under the
/// sign flip of the shift alphabet.
pub fn check_schubert(lambda: &Partition, n: usize, m: usize) -> Result<Verdict> {
    let params = Params::default().lambda(lambda).n(n).m(m);
    let w = grassmannian_perm(lambda, n, m)?;
    let schubert = double_schubert(&w, n + m)?;
    let flipped = schubert.substitute_with(|v| match v {
        Variable::Alpha(j) => Some(-Polynomial::alpha(j)),
        _ => None,
    })?;
    let s = schur_det(lambda, n)?.value;
    Ok(Verdict::from_difference(
        "schubert",
        params,
        flipped.checked_sub(&s)?,
    ))
}

/// How a shift swap acts on a Schur value: plain invariance, or a
/// two-term decomposition through a smaller shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaCase {
    Invariant,
    Decomposition { mu: Partition },
}

/// Classify the effect of swapping `a_i` and `a_{i+1}` on `s_λ` with `n`
/// spectral parameters: a decomposition appears exactly when `i+1` lies in
/// `λ + ρ` but `i` does not, with the smaller shape obtained by lowering
/// that entry.
pub fn sigma_case(lambda: &Partition, n: usize, i: usize) -> Result<SigmaCase> {
    if i < 1 {
        return Err(Error::IndexOutOfRange);
    }
    let entries = lambda.add_rho(n)?;
    let has = |v: u32| entries.contains(&v);
    if has(i as u32 + 1) && !has(i as u32) {
        let replaced: Vec<u32> = entries
            .iter()
            .map(|&e| if e == i as u32 + 1 { i as u32 } else { e })
            .collect();
        // Strip ρ back off: μ_k = replaced_k - (n - k + 1) with k 1-based.
        let mu_parts: Vec<u32> = replaced
            .iter()
            .enumerate()
            .map(|(k, &e)| e - (n - k) as u32)
            .collect();
        let mu = Partition::new(mu_parts)?;
        Ok(SigmaCase::Decomposition { mu })
    } else {
        Ok(SigmaCase::Invariant)
    }
}

/// Check the swap behaviour itself. In the decomposition case the printed
/// sign of the correction term is tested against its negation and the
/// resolution recorded.
pub fn check_sigma_symmetry(lambda: &Partition, n: usize, i: usize) -> Result<Verdict> {
    let base = Params::default().lambda(lambda).n(n).i(i);
    let s = schur_det(lambda, n)?.value;
    let swapped = s.swap_vars(Variable::alpha(i as u32), Variable::alpha(i as u32 + 1))?;
    match sigma_case(lambda, n, i)? {
        SigmaCase::Invariant => Ok(Verdict::from_difference(
            "sigma-symmetry",
            base.case("invariant"),
            s.checked_sub(&swapped)?,
        )),
        SigmaCase::Decomposition { mu } => {
            let params = base.case("decomposition").mu(&mu);
            let s_mu_swapped = schur_det(&mu, n)?
                .value
                .swap_vars(Variable::alpha(i as u32), Variable::alpha(i as u32 + 1))?;
            let gap = Polynomial::alpha(i as u32 + 1) - Polynomial::alpha(i as u32);
            let printed = s
                .checked_sub(&swapped)?
                .checked_sub(&gap.checked_mul(&s_mu_swapped)?)?;
            let negated = s
                .checked_sub(&swapped)?
                .checked_add(&gap.checked_mul(&s_mu_swapped)?)?;
            Ok(if printed.is_zero() {
                Verdict::pass("sigma-symmetry", params.resolution("printed"))
            } else if negated.is_zero() {
                Verdict::pass_with_erratum(
                    "sigma-symmetry",
                    params.resolution("sign-negated"),
                    "sigma-decomposition-sign",
                )
            } else {
                Verdict::fail("sigma-symmetry", params, negated)
            })
        }
    }
}

/// For `n ≥ length(λ) + i` the swap must be a plain invariance.
pub fn check_sigma_corollary(lambda: &Partition, n: usize, i: usize) -> Result<Verdict> {
    debug_assert!(n >= lambda.length() + i);
    let params = Params::default().lambda(lambda).n(n).i(i);
    match sigma_case(lambda, n, i)? {
        SigmaCase::Decomposition { .. } => Ok(Verdict::fail(
            "sigma-corollary",
            params.case("misclassified"),
            Polynomial::int(1),
        )),
        SigmaCase::Invariant => {
            let s = schur_det(lambda, n)?.value;
            let swapped =
                s.swap_vars(Variable::alpha(i as u32), Variable::alpha(i as u32 + 1))?;
            Ok(Verdict::from_difference(
                "sigma-corollary",
                params,
                s.checked_sub(&swapped)?,
            ))
        }
    }
}

/// The dual Cauchy identity and the split-square mechanics behind it.
pub fn check_dual_cauchy(n: usize, m: usize) -> Result<Vec<Verdict>> {
    let params = Params::default().n(n).m(m);
    let mut out = Vec::new();
    let shapes = partitions_in_box(n, m as u32);

    // x_i = z_{m+i}, y_j = z_{m+1-j}: the spectral order of the square.
    let x = |i: u32| Polynomial::z(m as u32 + i);
    let y = |j: u32| Polynomial::z(m as u32 + 1 - j);

    let mut lhs = Polynomial::one();
    for i in 1..=n as u32 {
        for j in 1..=m as u32 {
            lhs = lhs.checked_mul(&(x(i) + y(j)))?;
        }
    }
    let mut rhs = Polynomial::zero();
    for lam in &shapes {
        let hat = lam.hat(n, m)?;
        let s_x = schur_det(lam, n)?.value.substitute_with(|v| match v {
            Variable::Z(i) => Some(x(i)),
            _ => None,
        })?;
        let s_y = schur_det(&hat, m)?.value.substitute_with(|v| match v {
            Variable::Z(i) => Some(y(i)),
            Variable::Alpha(j) => Some(-Polynomial::alpha(j)),
            Variable::T => None,
        })?;
        rhs = rhs.checked_add(&s_x.checked_mul(&s_y)?)?;
    }
    out.push(Verdict::from_difference(
        "dual-cauchy",
        params.clone(),
        lhs.checked_sub(&rhs)?,
    ));

    // Split the all-minus square along the cut line between the two
    // alphabets and compare against the product of block partition
    // functions, shape by shape.
    let square = LatticeSystem::dual_cauchy_square(n, m);
    let z_square = partition_function(&square)?;
    let mut split = Polynomial::zero();
    for lam in &shapes {
        let top = partition_function(&LatticeSystem::dual_cauchy_top(lam, n, m)?)?;
        let bottom = partition_function(&LatticeSystem::dual_cauchy_bottom(lam, n, m)?)?;
        split = split.checked_add(&top.checked_mul(&bottom)?)?;
    }
    out.push(Verdict::from_difference(
        "dual-cauchy-split",
        params.clone(),
        z_square.checked_sub(&split)?,
    ));

    // Flip-reflect each top block onto the complementary-shape system and
    // compare states and weights one by one.
    let mut flip_defect: Option<Polynomial> = None;
    'shapes: for lam in &shapes {
        let top = LatticeSystem::dual_cauchy_top(lam, n, m)?;
        let reflected = LatticeSystem::dual_cauchy_top_reflected(lam, n, m)?;
        let top_states = enumerate_states_generic(&top);
        let reflected_states: BTreeSet<Vec<Vec<VertexClass>>> = enumerate_states(&reflected)?
            .into_iter()
            .map(|s| s.classes)
            .collect();
        let images: BTreeSet<Vec<Vec<VertexClass>>> = top_states
            .iter()
            .map(|s| flip_reflect(s).classes)
            .collect();
        if images != reflected_states || images.len() != top_states.len() {
            flip_defect = Some(Polynomial::int(
                images.len() as i64 - reflected_states.len() as i64,
            ));
            break;
        }
        for state in &top_states {
            let original = state.weight(&top)?;
            let mapped = flip_reflect(state).weight(&reflected)?;
            let diff = original.checked_sub(&mapped)?;
            if !diff.is_zero() {
                flip_defect = Some(diff);
                break 'shapes;
            }
        }
    }
    out.push(match flip_defect {
        None => Verdict::pass("dual-cauchy-flip", params),
        Some(d) => Verdict::fail(
            "dual-cauchy-flip",
            params,
            if d.is_zero() { Polynomial::int(1) } else { d },
        ),
    });
    Ok(out)
}

/// Flip every vertical spin and reflect about a horizontal axis: rows
/// reverse and classes exchange `a1 ↔ b1`, `a2 ↔ b2`.
fn flip_reflect(state: &LatticeState) -> LatticeState {
    use VertexClass::*;
    let classes = state
        .classes
        .iter()
        .rev()
        .map(|row| {
            row.iter()
                .map(|c| match c {
                    A1 => B1,
                    B1 => A1,
                    A2 => B2,
                    B2 => A2,
                    C1 => C1,
                    C2 => C2,
                })
                .collect()
        })
        .collect();
    LatticeState { classes }
}

/// Substitute `z_i ↦ z_{n+1-i}`.
fn reverse_z(p: &Polynomial, n: usize) -> Result<Polynomial> {
    p.substitute_with(|v| match v {
        Variable::Z(i) if i as usize <= n => Some(Polynomial::z(n as u32 + 1 - i)),
        _ => None,
    })
}

/// Compare a value against the printed reading and a corrected reading;
/// the printed one passing is a plain PASS, the corrected one passing is a
/// PASS_WITH_ERRATUM, neither is a FAIL witnessed by the corrected defect.
#[allow(clippy::too_many_arguments)]
fn resolve_two_readings(
    identity: &str,
    params: Params,
    value: &Polynomial,
    printed: &Polynomial,
    printed_name: &str,
    corrected: &Polynomial,
    corrected_name: &str,
    tag: &str,
) -> Verdict {
    if value == printed {
        Verdict::pass(identity, params.resolution(printed_name))
    } else if value == corrected {
        Verdict::pass_with_erratum(identity, params.resolution(corrected_name), tag)
    } else {
        Verdict::fail(identity, params, value - corrected)
    }
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

type Job = Box<dyn Fn() -> Result<Vec<Verdict>> + Send + Sync>;

/// Run the configured checks; verdicts come back sorted by identity and
/// parameters, with per-identity erratum-uniformity verdicts appended.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<Verdict>> {
    let mut jobs: Vec<Job> = Vec::new();
    let suite = config.suite;

    if suite.wants(Suite::FreeFermion) {
        let perturb = config.perturb;
        jobs.push(Box::new(move || {
            let t = TParam::Symbolic;
            let mut gamma = VertexWeights::gamma(&Polynomial::z(1), 1, &t);
            if let Some((class, delta)) = perturb {
                gamma = gamma.perturbed(class, delta);
            }
            Ok(vec![
                check_free_fermion("gamma", &gamma),
                check_free_fermion(
                    "gamma-gamma",
                    &VertexWeights::gamma_gamma(&Polynomial::z(1), &Polynomial::z(2), &t),
                ),
                check_free_fermion("gamma-inf", &VertexWeights::gamma_inf(&Polynomial::z(1), 1)),
                check_free_fermion("dual-top", &VertexWeights::dual_top(&Polynomial::z(1), 1)),
                check_free_fermion(
                    "u-column",
                    &VertexWeights::u_column(&Polynomial::alpha(1), &Polynomial::alpha(2)),
                ),
            ])
        }));
    }

    if suite.wants(Suite::Ybe) {
        jobs.push(Box::new(|| Ok(check_ybe_lemma())));
        jobs.push(Box::new(|| Ok(vec![check_vert_ybe()])));
    }

    if suite.wants(Suite::Tokuyama) {
        for (lam, n) in config.shape_sweep() {
            let config = config.clone();
            jobs.push(Box::new(move || {
                Ok(vec![check_tokuyama(&config, &lam, n)?])
            }));
        }
    }

    if suite.wants(Suite::TSpecializations) {
        for (lam, n) in config.shape_sweep() {
            let config = config.clone();
            jobs.push(Box::new(move || check_t_specializations(&config, &lam, n)));
        }
        if config.max_n >= 3 {
            jobs.push(Box::new(|| Ok(vec![check_t_zero_worked_state()?])));
        }
    }

    if suite.wants(Suite::Vanishing) {
        let n = config.max_n;
        let shapes = partitions_in_box(n, config.max_part);
        for lam in &shapes {
            for mu in &shapes {
                let (lam, mu) = (lam.clone(), mu.clone());
                jobs.push(Box::new(move || {
                    Ok(check_vanishing(&lam, &mu, n)?.into_iter().collect())
                }));
            }
        }
    }

    if suite.wants(Suite::LascouxMcnamara) {
        for (lam, n) in config.shape_sweep() {
            jobs.push(Box::new(move || check_lascoux_mcnamara(&lam, n)));
        }
    }

    if suite.wants(Suite::Schubert) {
        for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
            if n.max(m) > config.max_n {
                continue;
            }
            jobs.push(Box::new(move || {
                partitions_in_box(n, m as u32)
                    .iter()
                    .map(|lam| check_schubert(lam, n, m))
                    .collect()
            }));
        }
    }

    if suite.wants(Suite::SigmaSymmetry) {
        for lam in partitions_in_box(2, config.max_part.min(2)) {
            for i in 1..=2usize {
                let len = lam.length();
                let hi = if config.max_n >= 3 {
                    len + i + 1
                } else {
                    (len + i + 1).min(config.max_n)
                };
                for n in len.max(1)..=hi {
                    let lam = lam.clone();
                    jobs.push(Box::new(move || {
                        let mut verdicts = vec![check_sigma_symmetry(&lam, n, i)?];
                        if n >= lam.length() + i {
                            verdicts.push(check_sigma_corollary(&lam, n, i)?);
                        }
                        Ok(verdicts)
                    }));
                }
            }
        }
        if config.max_n >= 3 {
            jobs.push(Box::new(|| {
                let lam = Partition::new(vec![3, 1]).unwrap();
                Ok(vec![check_sigma_symmetry(&lam, 5, 4)?])
            }));
        }
    }

    if suite.wants(Suite::DualCauchy) {
        for (n, m) in [(1, 1), (1, 2), (2, 2)] {
            if n.max(m) > config.max_n {
                continue;
            }
            jobs.push(Box::new(move || check_dual_cauchy(n, m)));
        }
    }

    let nested = exec::try_map(&jobs, |job| job())?;
    let mut verdicts: Vec<Verdict> = nested.into_iter().flatten().collect();
    verdicts.extend(uniformity_verdicts(&verdicts));
    verdicts.sort_by_key(Verdict::sort_key);
    Ok(verdicts)
}

/// One verdict per identity that records resolutions: FAIL when a sweep
/// resolved the same printed formula two different ways.
fn uniformity_verdicts(verdicts: &[Verdict]) -> Vec<Verdict> {
    let mut by_identity: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for v in verdicts {
        if let Some(res) = &v.parameters.resolution {
            by_identity
                .entry(v.identity.as_str())
                .or_default()
                .insert(res.as_str());
        }
    }
    by_identity
        .into_iter()
        .map(|(identity, resolutions)| {
            let params = Params::default().case(identity);
            if resolutions.len() == 1 {
                let common = resolutions.into_iter().next().expect("nonempty");
                Verdict::pass("erratum-uniformity", params.resolution(common))
            } else {
                Verdict::fail("erratum-uniformity", params, Polynomial::int(1))
            }
        })
        .collect()
}

/// Exit status for a verdict list: 0 all green, 1 any FAIL.
pub fn exit_status(verdicts: &[Verdict]) -> i32 {
    if verdicts.iter().all(Verdict::passed) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_case_examples() {
        let lam = Partition::new(vec![3, 1]).unwrap();
        match sigma_case(&lam, 5, 4).unwrap() {
            SigmaCase::Decomposition { mu } => {
                assert_eq!(mu, Partition::new(vec![3]).unwrap())
            }
            other => panic!("expected a decomposition, got {other:?}"),
        }
        // λ + ρ = (3, 1): position 1 is occupied, so the swap is neutral.
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(sigma_case(&one, 2, 1).unwrap(), SigmaCase::Invariant);
        // λ + ρ = (2): entry 2 present, 1 absent.
        assert_eq!(
            sigma_case(&one, 1, 1).unwrap(),
            SigmaCase::Decomposition {
                mu: Partition::empty()
            }
        );
    }

    #[test]
    fn conjugate_counts_pad_to_width() {
        assert_eq!(conjugate_counts(&[1, 0], 2), vec![1, 0]);
        assert_eq!(conjugate_counts(&[2, 1], 3), vec![2, 1, 0]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::All,
            Suite::FreeFermion,
            Suite::Ybe,
            Suite::Tokuyama,
            Suite::TSpecializations,
            Suite::Vanishing,
            Suite::LascouxMcnamara,
            Suite::Schubert,
            Suite::SigmaSymmetry,
            Suite::DualCauchy,
        ] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
