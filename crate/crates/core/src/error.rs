use std::fmt;

use crate::subsets::SubsetMask;

/// One of the three independence axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndependenceAxiom {
    /// The empty set is independent.
    I1,
    /// Subsets of independent sets are independent.
    I2,
    /// Augmentation.
    I3,
}

impl fmt::Display for IndependenceAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IndependenceAxiom::I1 => "I1",
            IndependenceAxiom::I2 => "I2",
            IndependenceAxiom::I3 => "I3",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("universe of size {n} exceeds the cap of {max} for this operation")]
    UniverseTooLarge { n: usize, max: usize },

    #[error("element {element} is outside the universe of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("set {set} is not contained in the universe of size {n}")]
    SetOutOfRange { set: SubsetMask, n: usize },

    #[error("axiom {axiom} violated: {detail}")]
    AxiomViolation {
        axiom: IndependenceAxiom,
        witness: Vec<SubsetMask>,
        detail: String,
    },

    #[error("invalid matroid description: {0}")]
    InvalidRepresentation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{set} is not a flat")]
    NotAFlat { set: SubsetMask },

    #[error("{set} has full rank, no hyperplane contains it")]
    FullRankFlat { set: SubsetMask },

    #[error("expected {expected} weights, got {got}")]
    WeightArityMismatch { expected: usize, got: usize },

    #[error("weight {index} is not finite")]
    NonFiniteWeight { index: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
