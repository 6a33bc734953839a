use std::fmt;

use serde::Serialize;

use crate::graph::QuotientMatrix;

pub type Result<T> = std::result::Result<T, Error>;

/// Two vertices of the same color whose neighbourhoods have different color profiles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotEquitable {
    pub color: usize,
    pub first: usize,
    pub second: usize,
    pub first_profile: Vec<u64>,
    pub second_profile: Vec<u64>,
}

impl fmt::Display for NotEquitable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} and {} share color {} but see profiles {:?} and {:?}",
            self.first, self.second, self.color, self.first_profile, self.second_profile
        )
    }
}

/// Two same-colored hypergraph vertices with different incidence tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotPerfect {
    pub color: usize,
    pub first: usize,
    pub second: usize,
    pub composition: Vec<usize>,
    pub first_count: usize,
    pub second_count: usize,
}

impl fmt::Display for NotPerfect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} and {} share color {} but lie in {} and {} hyperedges of composition {:?}",
            self.first,
            self.second,
            self.color,
            self.first_count,
            self.second_count,
            self.composition
        )
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("multigraph is not regular: vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    NotRegular {
        vertex: usize,
        degree: u64,
        expected: u64,
    },

    #[error("coloring is not perfect: {0}")]
    NotEquitable(NotEquitable),

    #[error("hypergraph coloring is not perfect: {0}")]
    NotPerfect(NotPerfect),

    #[error("vertex {vertex} has {count} neighbours inside the set, more than the cap {cap}")]
    InnerDegreeExceeded { vertex: usize, count: u64, cap: u64 },

    #[error("quotient mismatch: expected {expected}, found {found}")]
    QuotientMismatch {
        expected: QuotientMatrix,
        found: QuotientMatrix,
    },

    #[error("not a design: {0}")]
    NotDesign(String),

    #[error("not a Hadamard matrix: {0}")]
    NotHadamard(String),

    #[error("not a partial difference set: {0}")]
    NotPds(String),

    #[error("not strongly regular: {0}")]
    NotSrg(String),

    #[error("not a bent function: {0}")]
    NotBent(String),

    /// An internal cross-check between two independent routes disagreed.
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True when the error is a negative verdict about the input rather than malformed input.
    pub fn is_property_failure(&self) -> bool {
        matches!(
            self,
            Error::NotRegular { .. }
                | Error::NotEquitable(_)
                | Error::NotPerfect(_)
                | Error::InnerDegreeExceeded { .. }
                | Error::QuotientMismatch { .. }
                | Error::NotDesign(_)
                | Error::NotHadamard(_)
                | Error::NotPds(_)
                | Error::NotSrg(_)
                | Error::NotBent(_)
        )
    }
}

pub(crate) fn invalid_params(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

pub(crate) fn invalid_input(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
