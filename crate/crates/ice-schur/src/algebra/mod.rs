//! Exact sparse multivariate polynomial arithmetic over arbitrary-precision
//! rationals.
//!
//! Values are canonical (no zero coefficients, fixed monomial order), so
//! equality of polynomials is equality of values. All operations are pure;
//! everything is safe to share across threads.

mod monomial;
mod polynomial;
mod variable;

pub use monomial::Monomial;
pub use polynomial::{set_term_cap, term_cap, Polynomial};
pub use variable::Variable;

/// Largest spectral-parameter index the desk-scale builders will mint.
pub const MAX_SPECTRAL: u32 = 12;

/// Largest shift index the desk-scale builders will mint.
pub const MAX_SHIFT: u32 = 24;
