use thiserror::Error;

/// Errors raised by the exact-algebra and λ-ring machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("series constant term is not a unit")]
    NonUnitConstant,

    #[error("polynomial is not symmetric: swapping variables {first} and {second} changes it")]
    NotSymmetric { first: usize, second: usize },

    #[error("{what} = {value} exceeds the feasibility limit {limit}")]
    Resource {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("truncation order {have} is insufficient, order {need} is required")]
    Truncation { have: usize, need: usize },

    #[error("Witt component {index} is not integral")]
    Integrality { index: usize },

    #[error("polynomial is not monic")]
    NonMonic,

    #[error("generator is not certified Λ-stable: {0}")]
    Unstable(String),

    #[error("not enumerable: {0}")]
    NotEnumerable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// A short machine-readable kind tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InexactDivision(_) => "inexact_division",
            Error::NonUnitConstant => "non_unit_constant",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::Resource { .. } => "resource",
            Error::Truncation { .. } => "truncation",
            Error::Integrality { .. } => "integrality",
            Error::NonMonic => "non_monic",
            Error::Unstable(_) => "unstable",
            Error::NotEnumerable(_) => "not_enumerable",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Parse(_) => "parse",
            Error::Unsupported(_) => "unsupported",
            Error::Consistency(_) => "consistency",
        }
    }

    /// Concrete witness carried by the error, when there is one.
    pub fn witness(&self) -> Option<serde_json::Value> {
        match self {
            Error::NotSymmetric { first, second } => {
                Some(serde_json::json!({ "transposition": [first, second] }))
            }
            Error::Integrality { index } => Some(serde_json::json!({ "component": index })),
            Error::Truncation { have, need } => {
                Some(serde_json::json!({ "have": have, "need": need }))
            }
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
