use super::system::LatticeSystem;
use super::vertex::{class_from_nse, Spin, VertexClass};
use crate::algebra::Polynomial;
use crate::combinatorics::{enumerate_strict_gt, GtPattern};
use crate::error::Result;
use crate::exec;

/// An admissible spin assignment, recorded by the class of every vertex.
/// `classes[r][c]` is row `r+1`, column `c+1` (column 1 rightmost).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeState {
    pub classes: Vec<Vec<VertexClass>>,
}

/// The two occupation counts attached to a state: the total number of
/// `a2/b1/c1` sites and the per-column number of `a2/b2/c1` sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateProfile {
    pub a2_b1_c1: usize,
    pub per_column_a2_b2_c1: Vec<usize>,
}

impl LatticeState {
    /// Reconstruct the state whose vertical minus positions are the rows of
    /// `gt`: row `i` of the pattern lists the columns carrying a minus on
    /// the north edge of grid row `i`.
    ///
    /// Panics if the propagation meets an inadmissible triple; the
    /// bijection with strict patterns guarantees this never happens for a
    /// shape boundary.
    pub fn from_gt(system: &LatticeSystem, gt: &GtPattern) -> LatticeState {
        let n = system.n_rows;
        let mut classes = Vec::with_capacity(n);
        for row in 1..=n {
            let north = minus_vector(gt.row(row), system.n_cols);
            let south = minus_vector(gt.row(row + 1), system.n_cols);
            let cells = propagate_row(
                &north,
                &south,
                system.right[row - 1],
                system.left[row - 1],
            )
            .unwrap_or_else(|| {
                panic!("internal: inadmissible propagation in row {row} of {gt}")
            });
            classes.push(cells);
        }
        LatticeState { classes }
    }

    pub fn class_at(&self, row: usize, col: u32) -> VertexClass {
        self.classes[row - 1][col as usize - 1]
    }

    /// The pattern of vertical minus positions, row by row.
    pub fn gt(&self) -> GtPattern {
        let rows: Vec<Vec<u32>> = self
            .classes
            .iter()
            .map(|row| {
                (1..=row.len() as u32)
                    .rev()
                    .filter(|&c| row[c as usize - 1].north().is_minus())
                    .collect()
            })
            .collect();
        GtPattern::new(rows).expect("admissible states carry strict interleaving patterns")
    }

    /// Product of the Boltzmann weights over all vertices.
    pub fn weight(&self, system: &LatticeSystem) -> Result<Polynomial> {
        let mut acc = Polynomial::one();
        for (r, row) in self.classes.iter().enumerate() {
            for (c, &class) in row.iter().enumerate() {
                let w = system.weights.weight(r + 1, c as u32 + 1, class);
                acc = acc.checked_mul(&w)?;
            }
        }
        Ok(acc)
    }

    pub fn profile(&self) -> StateProfile {
        use VertexClass::*;
        let n_cols = self.classes.first().map_or(0, |r| r.len());
        let mut per_column = vec![0usize; n_cols];
        let mut total = 0usize;
        for row in &self.classes {
            for (c, &class) in row.iter().enumerate() {
                if matches!(class, A2 | B1 | C1) {
                    total += 1;
                }
                if matches!(class, A2 | B2 | C1) {
                    per_column[c] += 1;
                }
            }
        }
        StateProfile {
            a2_b1_c1: total,
            per_column_a2_b2_c1: per_column,
        }
    }

    pub fn to_json(&self, system: &LatticeSystem) -> Result<serde_json::Value> {
        let classes: Vec<Vec<&str>> = self
            .classes
            .iter()
            .map(|row| row.iter().map(|c| c.label()).collect())
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("gt".into(), self.gt().to_json());
        obj.insert("classes".into(), serde_json::json!(classes));
        obj.insert("weight".into(), self.weight(system)?.to_json());
        Ok(serde_json::Value::Object(obj))
    }
}

fn minus_vector(cols: &[u32], n_cols: usize) -> Vec<Spin> {
    let mut v = vec![Spin::Plus; n_cols];
    for &c in cols {
        v[c as usize - 1] = Spin::Minus;
    }
    v
}

/// Resolve one row right-to-left from its vertical spins; `None` when some
/// triple is inadmissible or the left boundary does not close up.
fn propagate_row(
    north: &[Spin],
    south: &[Spin],
    right: Spin,
    left: Spin,
) -> Option<Vec<VertexClass>> {
    let n_cols = north.len();
    let mut cells = Vec::with_capacity(n_cols);
    let mut east = right;
    for c in 0..n_cols {
        let (class, west) = class_from_nse(north[c], south[c], east)?;
        cells.push(class);
        east = west;
    }
    (east == left).then_some(cells)
}

/// Enumerate the states of a shape-boundary system through the bijection
/// with strict patterns topped by the minus columns. The order is the
/// lexicographic pattern order, shared by every aligned representation.
pub fn enumerate_states(system: &LatticeSystem) -> Result<Vec<LatticeState>> {
    assert!(
        system.has_shape_boundary(),
        "pattern enumeration needs the standard shape boundary"
    );
    let top = system.top_minus_columns();
    let patterns = enumerate_strict_gt(&top)?;
    Ok(patterns
        .iter()
        .map(|gt| LatticeState::from_gt(system, gt))
        .collect())
}

/// Enumerate admissible states of an arbitrary-boundary system by searching
/// row by row over vertical spin vectors.
pub fn enumerate_states_generic(system: &LatticeSystem) -> Vec<LatticeState> {
    let mut out = Vec::new();
    let mut acc: Vec<Vec<VertexClass>> = Vec::new();
    search_rows(system, 1, system.top.clone(), &mut acc, &mut out);
    out
}

fn search_rows(
    system: &LatticeSystem,
    row: usize,
    north: Vec<Spin>,
    acc: &mut Vec<Vec<VertexClass>>,
    out: &mut Vec<LatticeState>,
) {
    let last = row == system.n_rows;
    let candidates: Vec<Vec<Spin>> = if last {
        vec![system.bottom.clone()]
    } else {
        // All 2^n_cols vertical spin vectors, in deterministic order.
        (0u64..(1 << system.n_cols))
            .map(|mask| {
                (0..system.n_cols)
                    .map(|c| {
                        if mask & (1 << c) != 0 {
                            Spin::Minus
                        } else {
                            Spin::Plus
                        }
                    })
                    .collect()
            })
            .collect()
    };
    for south in candidates {
        if let Some(cells) = propagate_row(
            &north,
            &south,
            system.right[row - 1],
            system.left[row - 1],
        ) {
            acc.push(cells);
            if last {
                out.push(LatticeState {
                    classes: acc.clone(),
                });
            } else {
                search_rows(system, row + 1, south.clone(), acc, out);
            }
            acc.pop();
        }
    }
}

/// Sum of the state weights, exact and schedule-independent.
pub fn partition_function(system: &LatticeSystem) -> Result<Polynomial> {
    let states = if system.has_shape_boundary() {
        enumerate_states(system)?
    } else {
        enumerate_states_generic(system)
    };
    exec::try_map_reduce(
        &states,
        Polynomial::zero(),
        |state| state.weight(system),
        |a, b| a.checked_add(&b),
    )
}

/// ASCII rendering: class labels with the spins of every edge, columns
/// numbered right to left.
pub fn render_state(system: &LatticeSystem, state: &LatticeState) -> String {
    let cols: Vec<u32> = (1..=system.n_cols as u32).rev().collect();
    let mut lines = Vec::new();
    let head = cols
        .iter()
        .map(|c| format!("{c:^5}"))
        .collect::<Vec<_>>()
        .join(" ");
    lines.push(format!("col   {head}"));
    let spin_line = |spins: Vec<Spin>| -> String {
        let body = spins
            .iter()
            .map(|s| format!("{:^5}", s.symbol()))
            .collect::<Vec<_>>()
            .join(" ");
        format!("      {body}")
    };
    lines.push(spin_line(
        cols.iter().map(|&c| system.top[c as usize - 1]).collect(),
    ));
    for row in 1..=system.n_rows {
        let mut body = String::new();
        for &c in &cols {
            let class = state.class_at(row, c);
            let east = class.spins().3;
            // The west spin of this vertex is printed by the neighbour.
            body.push_str(&format!(" {:^3}{}", class.label(), east.symbol()));
        }
        let west = state.class_at(row, *cols.first().expect("nonempty grid")).spins().2;
        lines.push(format!("r{row:<3} {}{body}", west.symbol()));
        lines.push(spin_line(
            cols.iter()
                .map(|&c| state.class_at(row, c).south())
                .collect(),
        ));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::lattice::{TParam, VertexClass::*};

    fn shape(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_cell_system_has_one_state() {
        let sys = LatticeSystem::gamma(&Partition::empty(), 1, TParam::Symbolic).unwrap();
        let states = enumerate_states(&sys).unwrap();
        assert_eq!(states.len(), 1);
        assert_eq!(states[0].classes, vec![vec![C2]]);
        assert!(states[0].weight(&sys).unwrap().is_one());
    }

    #[test]
    fn one_by_two_state_classes() {
        let sys = LatticeSystem::gamma(&shape(&[1]), 1, TParam::Symbolic).unwrap();
        let states = enumerate_states(&sys).unwrap();
        assert_eq!(states.len(), 1);
        assert_eq!(states[0].class_at(1, 1), B2);
        assert_eq!(states[0].class_at(1, 2), C2);
        assert_eq!(
            states[0].weight(&sys).unwrap(),
            Polynomial::z(1) + Polynomial::alpha(1)
        );
        let profile = states[0].profile();
        assert_eq!(profile.a2_b1_c1, 0);
        assert_eq!(profile.per_column_a2_b2_c1, vec![1, 0]);
    }

    #[test]
    fn empty_shape_two_rows() {
        let sys = LatticeSystem::gamma(&Partition::empty(), 2, TParam::Symbolic).unwrap();
        let states = enumerate_states(&sys).unwrap();
        assert_eq!(states.len(), 2);
        let z = partition_function(&sys).unwrap();
        assert_eq!(z, Polynomial::z(1) + Polynomial::t() * Polynomial::z(2));

        // The state dropping column 2 keeps one interior vertical minus.
        let with_minus = states
            .iter()
            .find(|s| s.gt().row(2) == [2])
            .expect("present");
        assert_eq!(with_minus.profile().a2_b1_c1, 1);
        assert_eq!(
            with_minus.classes,
            vec![vec![C2, B1], vec![B2, C2]],
            "classes stored rightmost column first"
        );
    }

    #[test]
    fn generic_enumeration_agrees_on_shape_boundaries() {
        for (lam, n) in [
            (Partition::empty(), 1),
            (Partition::empty(), 2),
            (shape(&[1]), 1),
            (shape(&[2]), 2),
            (shape(&[2, 1]), 2),
            (shape(&[2, 2]), 2),
        ] {
            let sys = LatticeSystem::gamma(&lam, n, TParam::Symbolic).unwrap();
            let by_pattern: std::collections::BTreeSet<Vec<Vec<VertexClass>>> =
                enumerate_states(&sys)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.classes)
                    .collect();
            let generic: std::collections::BTreeSet<Vec<Vec<VertexClass>>> =
                enumerate_states_generic(&sys)
                    .into_iter()
                    .map(|s| s.classes)
                    .collect();
            assert_eq!(by_pattern, generic, "λ={lam} n={n}");
        }
    }

    #[test]
    fn worked_three_row_state_is_enumerated() {
        let sys = LatticeSystem::gamma(&shape(&[5, 4, 1]), 3, TParam::Symbolic).unwrap();
        let states = enumerate_states(&sys).unwrap();
        let target = GtPattern::new(vec![vec![8, 6, 2], vec![7, 4], vec![4]]).unwrap();
        assert!(states.iter().any(|s| s.gt() == target));
    }

    #[test]
    fn render_is_stable() {
        let sys = LatticeSystem::gamma(&shape(&[1]), 1, TParam::Symbolic).unwrap();
        let states = enumerate_states(&sys).unwrap();
        let text = render_state(&sys, &states[0]);
        let expected = "\
col     2     1
        -     +
r1   +  c2 -  b2 -
        +     +  ";
        assert_eq!(text, expected);
    }
}
