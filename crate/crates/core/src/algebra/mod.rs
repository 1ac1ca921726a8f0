//! Exact integer, polynomial and truncated power-series arithmetic.

pub mod cyclotomic;
pub mod mpoly;
pub mod numtheory;
pub mod polyover;
pub mod ring;
pub mod series;
pub mod upoly;

pub use cyclotomic::cyclotomic;
pub use mpoly::{MPoly, MPolyRing, Monomial, TermRecord};
pub use polyover::PolyOver;
pub use ring::{Integers, Ring};
pub use series::TruncSeries;
pub use upoly::{UPoly, UPolyRing};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
