use thiserror::Error;

use crate::scalar::Ring;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a field, got the {0} ring")]
    UnsupportedRing(Ring),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("subspace is not an ideal: [e{basis}, w{member}] leaves it")]
    NotAnIdeal { basis: usize, member: usize },

    #[error("subspace is not a subalgebra: [k{first}, k{second}] leaves it")]
    NotASubalgebra { first: usize, second: usize },

    #[error("action is not a representation: theta([e{first}, e{second}]) != [theta(e{first}), theta(e{second})]")]
    NotARepresentation { first: usize, second: usize },

    #[error("horizontal and isotropy subspaces overlap in dimension {0}")]
    OverlappingSubspaces(usize),

    #[error("horizontal subspace does not bracket-generate: filtration stalls at dimension {reached} of {expected}")]
    NotBracketGenerating { reached: usize, expected: usize },

    #[error("commutator leaves the matrix span: [b{first}, b{second}]")]
    EscapesSpan { first: usize, second: usize },

    #[error("matrix does not lie in the span of the algebra basis")]
    NotInSpan,

    #[error("unsupported parameters: {radical} is irrational")]
    IrrationalRadical { radical: String },

    #[error("parameters off locus: {0}")]
    OffLocus(String),

    #[error("not an isomorphism: {0}")]
    NotAnIsomorphism(String),

    #[error("algebra already has rational scalars")]
    AlreadyRational,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
