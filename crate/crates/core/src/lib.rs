//! Exact λ-ring computations over the field with one element.
//!
//! The crate covers the symmetric-function substrate of λ-rings, monoid
//! rings and their points, the Λ-stable ideal theory of `Z[x]`, big Witt
//! vectors, λ-modules over square-zero extensions, and three routes to the
//! Riemann zeta function that are checked against each other.

pub mod acceptance;
pub mod algebra;
pub mod cli;
pub mod closure;
pub mod config;
pub mod error;
pub mod f1mod;
pub mod lambda;
pub mod monoid;
pub mod parse;
pub mod symmetric;
pub mod witt;
pub mod zeta;

pub use error::{Error, Result};
