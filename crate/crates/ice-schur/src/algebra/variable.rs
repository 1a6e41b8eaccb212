use std::fmt;

/// A variable of the working ring: spectral parameters `z_i`, shift
/// parameters `a_j` and the global deformation parameter `t`.
///
/// The derived order is the canonical variable order
/// `z1 < z2 < … < a1 < a2 < … < t` used by the monomial order and by all
/// serialized output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    /// Spectral (row) parameter `z_i`, 1-based.
    Z(u32),
    /// Shift (column) parameter `a_j`, 1-based.
    Alpha(u32),
    /// Deformation parameter `t`.
    T,
}

impl Variable {
    pub fn z(i: u32) -> Self {
        assert!(i >= 1, "spectral indices are 1-based");
        Variable::Z(i)
    }

    pub fn alpha(j: u32) -> Self {
        assert!(j >= 1, "shift indices are 1-based");
        Variable::Alpha(j)
    }

    /// Parse the serialized form: `z3`, `a12` or `t`.
    pub fn parse(name: &str) -> Option<Self> {
        if name == "t" {
            return Some(Variable::T);
        }
        let (kind, index) = name.split_at(1);
        let index: u32 = index.parse().ok().filter(|&i| i >= 1)?;
        match kind {
            "z" => Some(Variable::Z(index)),
            "a" => Some(Variable::Alpha(index)),
            _ => None,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Z(i) => write!(f, "z{i}"),
            Variable::Alpha(j) => write!(f, "a{j}"),
            Variable::T => write!(f, "t"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_z_then_alpha_then_t() {
        assert!(Variable::z(1) < Variable::z(2));
        assert!(Variable::z(9) < Variable::alpha(1));
        assert!(Variable::alpha(3) < Variable::T);
    }

    #[test]
    fn parse_round_trips_display() {
        for v in [Variable::z(1), Variable::z(12), Variable::alpha(7), Variable::T] {
            assert_eq!(Variable::parse(&v.to_string()), Some(v));
        }
        assert_eq!(Variable::parse("q4"), None);
        assert_eq!(Variable::parse("z0"), None);
        assert_eq!(Variable::parse("z"), None);
    }
}
