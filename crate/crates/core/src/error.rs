//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by ideal, sequence, and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values live in polynomial rings with different variable counts.
    #[error("ambient mismatch: expected {expected} variables, got {actual}")]
    AmbientMismatch { expected: usize, actual: usize },

    /// A 1-based variable index fell outside `1..=n`.
    #[error("variable index {index} out of range 1..={num_vars}")]
    IndexOutOfRange { index: usize, num_vars: usize },

    /// The zero ideal has no generators, hence no last generator.
    #[error("the zero ideal has no last generator")]
    NoLastGenerator,

    /// The unit ideal's only generator is 1, which has no largest variable.
    #[error("the unit ideal has no last-generator index")]
    UnitIdeal,

    /// An index set is infinite because no pure power of the named variable
    /// lies in the ideal, so the per-level bound never closes.
    #[error(
        "index set at level {level} is infinite: no positive power of x{variable} lies in the ideal"
    )]
    InfiniteIndexSet { level: usize, variable: usize },

    /// A structural hypothesis required by the operation does not hold.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    /// An augmentation plan violated one of its invariants.
    #[error("invalid augmentation plan: {0}")]
    InvalidPlan(String),

    /// The sequence fails the unimodal-at-each-tail condition; the witness
    /// names the derived level and the degree where it rises again.
    #[error("sequence is not unimodal at each tail: h^({level}) increases at degree {degree}")]
    NotUnimodal { level: usize, degree: usize },

    /// A sequence failed structural validation.
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    /// No derived Froberg spec exists below zero variables.
    #[error("cannot derive a Froberg spec with zero variables")]
    CannotDerive,

    /// Exact integer arithmetic exceeded the fixed-width working range.
    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
