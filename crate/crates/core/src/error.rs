//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by document parsing, validation and the algebraic engines.
#[derive(Debug, Error)]
pub enum Error {
    /// The input document is structurally malformed.
    #[error("malformed document: {0}")]
    Document(String),

    /// A sequence that must be a permutation of 1..=n is not one.
    #[error("{role} {index} is not a permutation of 1..={n}")]
    NotAPermutation { role: &'static str, index: usize, n: usize },

    /// The map induced on pairs is not a bijection.
    #[error("table is not a bijection on pairs: value ({0}, {1}) occurs twice")]
    NotPairBijection(usize, usize),

    /// A relation set violates the structural conditions for a
    /// solution presentation.
    #[error("relation set: {0}")]
    RelationSet(String),

    /// An operation was called on data that does not meet its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A subset that must be invariant is not.
    #[error("subset {{{}}} is not invariant", fmt_subset(.0))]
    NotInvariant(Vec<usize>),

    /// Word reversing exceeded its step budget; the presentation is not
    /// complemented-complete (or the budget override is too small).
    #[error("reversing budget exhausted after {steps} steps (limit {limit}): presentation not complemented-complete")]
    ReversingBudget { steps: u64, limit: u64 },

    /// The divisor-lattice construction detected a violation of a
    /// Garside axiom; the input is not a valid symmetric solution.
    #[error("Garside structure violated: {0}")]
    Garside(String),

    /// A cross-check that is guaranteed by theory failed on this input.
    #[error("theorem violation: {0}")]
    Theorem(String),

    /// The request exceeds a documented size limit.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn fmt_subset(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub type Result<T> = std::result::Result<T, Error>;
