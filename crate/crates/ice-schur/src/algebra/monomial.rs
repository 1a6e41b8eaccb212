use std::cmp::Ordering;
use std::fmt;

use super::variable::Variable;

/// A power product, stored as a sorted exponent list without zero entries.
///
/// The order is lexicographic on exponent vectors read in the canonical
/// variable order: the first variable with differing exponent decides, and
/// a larger exponent there means a larger monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Build from arbitrary (variable, exponent) pairs; duplicates add.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut exps: Vec<(Variable, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.iter_mut().find(|(w, _)| *w == v) {
                Some((_, old)) => *old += e,
                None => exps.push((v, e)),
            }
        }
        exps.sort_by_key(|&(v, _)| v);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// Merge-add exponents.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        exps.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    exps.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    exps.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps }
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut a = self.exps.iter().peekable();
        for &(vb, eb) in &other.exps {
            loop {
                match a.peek() {
                    Some(&&(va, ea)) if va < vb => {
                        exps.push((va, ea));
                        a.next();
                    }
                    Some(&&(va, ea)) if va == vb => {
                        if ea < eb {
                            return None;
                        }
                        if ea > eb {
                            exps.push((va, ea - eb));
                        }
                        a.next();
                        break;
                    }
                    _ => return None,
                }
            }
        }
        exps.extend(a.copied());
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.exps.iter(), other.exps.iter());
        let (mut x, mut y) = (a.next(), b.next());
        loop {
            match (x, y) {
                (None, None) => return Ordering::Equal,
                // A leftover positive exponent beats an implicit zero.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // The earlier canonical variable has exponent 0 on the
                    // other side, so the side holding it is larger.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            x = a.next();
                            y = b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.exps.iter().map(|(v, e)| format!("{v}^{e}")).collect();
        write!(f, "{}", parts.join(" * "))
    }
}
