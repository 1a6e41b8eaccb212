//! Exact-arithmetic constructions of factorial Schur functions by three
//! routes — alternant ratio, tableau sum, six-vertex partition function —
//! together with a symbolic certification suite for the identities
//! connecting them at desk scale.

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod lattice;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
