use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::monomial::Monomial;
use super::variable::Variable;
use crate::error::{Error, Result};

static TERM_CAP: AtomicUsize = AtomicUsize::new(1_000_000);

/// Current term-count cap for polynomial operations.
pub fn term_cap() -> usize {
    TERM_CAP.load(Ordering::SeqCst)
}

/// Override the term-count cap (symbolic partition functions grow
/// combinatorially; better to fail loudly than to thrash).
pub fn set_term_cap(cap: usize) {
    TERM_CAP.store(cap.max(1), Ordering::SeqCst);
}

/// Sparse multivariate polynomial over arbitrary-precision rationals.
///
/// Kept canonical at all times: no zero coefficients are stored, and the
/// term map is ordered by the fixed monomial order. Two values are equal
/// as polynomials iff their term maps are identical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(BigRational::from(BigInt::from(n)))
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::term(Monomial::var(v), BigRational::one())
    }

    pub fn z(i: u32) -> Self {
        Polynomial::var(Variable::z(i))
    }

    pub fn alpha(j: u32) -> Self {
        Polynomial::var(Variable::alpha(j))
    }

    pub fn t() -> Self {
        Polynomial::var(Variable::T)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Greatest monomial with its coefficient (None for zero).
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest exponent of `v` over all terms.
    pub fn degree_in(&self, v: Variable) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Variables occurring with nonzero exponent, in canonical order.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vars: Vec<Variable> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.exponents() {
                if let Err(pos) = vars.binary_search(&v) {
                    vars.insert(pos, v);
                }
            }
        }
        vars
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.term_count() + other.term_count() > term_cap() {
            return Err(Error::ResourceLimit);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { terms })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let cap = term_cap();
        if self.term_count().saturating_mul(other.term_count()) > cap {
            return Err(Error::ResourceLimit);
        }
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        if terms.len() > cap {
            return Err(Error::ResourceLimit);
        }
        Ok(Polynomial { terms })
    }

    pub fn checked_pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn neg_ref(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Substitute with a resolver: variables mapped to `None` stay intact.
    /// Substitution is simultaneous and a ring homomorphism.
    pub fn substitute_with<F>(&self, resolve: F) -> Result<Polynomial>
    where
        F: Fn(Variable) -> Option<Polynomial>,
    {
        let mut powers: BTreeMap<(Variable, u32), Polynomial> = BTreeMap::new();
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for (v, e) in m.exponents() {
                match resolve(v) {
                    None => kept.push((v, e)),
                    Some(image) => {
                        let p = match powers.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = image.checked_pow(e)?;
                                powers.insert((v, e), p.clone());
                                p
                            }
                        };
                        factor = factor.checked_mul(&p)?;
                    }
                }
            }
            let kept = Polynomial::term(Monomial::from_pairs(kept), BigRational::one());
            acc = acc.checked_add(&factor.checked_mul(&kept)?)?;
        }
        Ok(acc)
    }

    /// Substitute from an explicit binding map (unbound variables intact).
    pub fn substitute(&self, bindings: &BTreeMap<Variable, Polynomial>) -> Result<Polynomial> {
        self.substitute_with(|v| bindings.get(&v).cloned())
    }

    /// Swap two variables.
    pub fn swap_vars(&self, a: Variable, b: Variable) -> Result<Polynomial> {
        self.substitute_with(|v| {
            if v == a {
                Some(Polynomial::var(b))
            } else if v == b {
                Some(Polynomial::var(a))
            } else {
                None
            }
        })
    }

    /// Exact quotient `self / den`.
    ///
    /// Implemented as multivariate division against a single divisor under
    /// the fixed monomial order. The divisions this crate performs are exact
    /// by theorems, so a remainder is a correctness alarm, not a user error.
    pub fn exact_divide(&self, den: &Polynomial) -> Result<Polynomial> {
        let (lead_m, lead_c) = match den.leading_term() {
            None => return Err(Error::DivisionByZero),
            Some(lt) => lt,
        };
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = match rm.checked_div(lead_m) {
                None => return Err(Error::NotDivisible),
                Some(qm) => qm,
            };
            let qc = rc / lead_c;
            let step = Polynomial::term(qm, qc);
            rem = rem.checked_sub(&step.checked_mul(den)?)?;
            quot = quot.checked_add(&step)?;
        }
        Ok(quot)
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})` on the given
    /// ordered alphabet, with `i` 1-based.
    pub fn divided_difference(&self, i: usize, alphabet: &[Variable]) -> Result<Polynomial> {
        if i < 1 || i >= alphabet.len() {
            return Err(Error::IndexOutOfRange);
        }
        let (a, b) = (alphabet[i - 1], alphabet[i]);
        let swapped = self.swap_vars(a, b)?;
        let num = self.checked_sub(&swapped)?;
        let den = Polynomial::var(a) - Polynomial::var(b);
        num.exact_divide(&den)
    }

    /// True iff invariant under every adjacent transposition of `alphabet`.
    pub fn is_symmetric(&self, alphabet: &[Variable]) -> bool {
        (1..alphabet.len()).all(|i| {
            self.swap_vars(alphabet[i - 1], alphabet[i])
                .map(|s| s == *self)
                .unwrap_or(false)
        })
    }

    /// Canonical JSON form: a list of terms in descending monomial order.
    pub fn to_json(&self) -> Value {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            let mut exps = serde_json::Map::new();
            for (v, e) in m.exponents() {
                exps.insert(v.to_string(), json!(e));
            }
            let mut term = serde_json::Map::new();
            term.insert("coeff".into(), json!(format!("{}/{}", c.numer(), c.denom())));
            term.insert("exps".into(), Value::Object(exps));
            out.push(Value::Object(term));
        }
        Value::Array(out)
    }

    /// Parse the JSON form produced by [`Polynomial::to_json`].
    pub fn from_json(value: &Value) -> Option<Polynomial> {
        let mut acc = Polynomial::zero();
        for term in value.as_array()? {
            let coeff = BigRational::from_str(term.get("coeff")?.as_str()?).ok()?;
            let mut pairs = Vec::new();
            for (name, e) in term.get("exps")?.as_object()? {
                let v = Variable::parse(name)?;
                pairs.push((v, u32::try_from(e.as_u64()?).ok()?));
            }
            acc = acc
                .checked_add(&Polynomial::term(Monomial::from_pairs(pairs), coeff))
                .ok()?;
        }
        Some(acc)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in descending monomial order, each as
    /// `p/q * z1^e1 * a2^e2 * t^e3`, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}/{}", c.numer(), c.denom())?;
            for (v, e) in m.exponents() {
                write!(f, " * {v}^{e}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial term cap exceeded")
            }
        }
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

/// Signed helper kept for witness normalization: leading coefficient > 0.
impl Polynomial {
    pub fn leading_coefficient_positive(&self) -> bool {
        self.leading_term().is_some_and(|(_, c)| c.is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: u32) -> Polynomial {
        Polynomial::z(i)
    }
    fn a(j: u32) -> Polynomial {
        Polynomial::alpha(j)
    }
    fn t() -> Polynomial {
        Polynomial::t()
    }

    #[test]
    fn add_cancels_inverse() {
        assert!((z(1) - z(1)).is_zero());
        assert_eq!(z(1) + a(1) + z(2) + a(2), a(1) + z(2) + z(1) + a(2));
    }

    #[test]
    fn add_collects_free_fermion_first_terms() {
        // (z1 - t a1) + t (z1 + a1) = z1 + t z1
        let lhs = (z(1) - t() * a(1)) + t() * (z(1) + a(1));
        assert_eq!(lhs, z(1) + t() * z(1));
    }

    #[test]
    fn mul_identity_and_difference_of_squares() {
        let p = z(1) * a(2) + t();
        assert_eq!(Polynomial::one() * p.clone(), p);
        assert_eq!(
            (z(1) - z(2)) * (z(1) + z(2)),
            z(1) * z(1) - z(2) * z(2)
        );
    }

    #[test]
    fn mul_expands_shifted_square() {
        let lhs = (z(1) + a(1)) * (z(1) + a(2));
        let rhs = z(1) * z(1) + (a(1) + a(2)) * z(1) + a(1) * a(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_linear_evaluation() {
        let p = z(1) + a(1);
        let mut b = BTreeMap::new();
        b.insert(Variable::z(1), -a(2));
        assert_eq!(p.substitute(&b).unwrap(), a(1) - a(2));
    }

    #[test]
    fn substitute_t_minus_one() {
        let p = t() * z(2) + z(1);
        let mut b = BTreeMap::new();
        b.insert(Variable::T, Polynomial::int(-1));
        assert_eq!(p.substitute(&b).unwrap(), z(1) - z(2));
    }

    #[test]
    fn substitute_alpha_sign_flip() {
        let p = z(1) + a(1);
        let flipped = p
            .substitute_with(|v| match v {
                Variable::Alpha(j) => Some(-Polynomial::alpha(j)),
                _ => None,
            })
            .unwrap();
        assert_eq!(flipped, z(1) - a(1));
    }

    #[test]
    fn exact_divide_difference_of_squares() {
        let num = z(1) * z(1) - z(2) * z(2);
        let den = z(1) - z(2);
        assert_eq!(num.exact_divide(&den).unwrap(), z(1) + z(2));
    }

    #[test]
    fn exact_divide_rejects_remainder_and_zero() {
        let num = z(1) + z(2);
        let den = z(1) - z(2);
        assert_eq!(num.exact_divide(&den), Err(Error::NotDivisible));
        assert_eq!(
            num.exact_divide(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn divided_difference_basics() {
        let x = [Variable::z(1), Variable::z(2)];
        assert_eq!(z(1).divided_difference(1, &x).unwrap(), Polynomial::one());
        assert!((z(1) * z(2)).divided_difference(1, &x).unwrap().is_zero());
        assert_eq!(
            (z(1) * z(1)).divided_difference(1, &x).unwrap(),
            z(1) + z(2)
        );
        assert_eq!(
            z(1).divided_difference(2, &x),
            Err(Error::IndexOutOfRange)
        );
    }

    #[test]
    fn symmetry_detection() {
        let x = [Variable::z(1), Variable::z(2)];
        assert!((z(1) + z(2)).is_symmetric(&x));
        assert!(!(z(1) - z(2)).is_symmetric(&x));
        assert!((z(1) + z(2) + a(1) + a(2)).is_symmetric(&x));
    }

    #[test]
    fn display_is_descending_and_rational() {
        let p = z(1) * z(1) - a(1).scale(&BigRational::new(3.into(), 2.into()));
        assert_eq!(p.to_string(), "1/1 * z1^2 + -3/2 * a1^1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = z(1) * a(3) * t() - Polynomial::int(7) + z(2).checked_pow(3).unwrap();
        let back = Polynomial::from_json(&p.to_json()).unwrap();
        assert_eq!(p, back);
        assert_eq!(Polynomial::from_json(&json!([])).unwrap(), Polynomial::zero());
    }

    #[test]
    fn term_cap_trips() {
        let old = term_cap();
        set_term_cap(3);
        let p = z(1) + z(2) + z(3);
        assert_eq!(p.checked_mul(&p), Err(Error::ResourceLimit));
        set_term_cap(old);
        assert!(p.checked_mul(&p).is_ok());
    }
}
