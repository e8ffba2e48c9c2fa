use thiserror::Error;

use crate::exactla::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the enclosing space")]
    NotContained,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("matrix is singular")]
    Singular,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket pair ({0}, {1}) must satisfy i < j")]
    InvalidPair(usize, usize),
    #[error("bracket [x{0}, x{1}] given twice")]
    DuplicateBracket(usize, usize),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,
    #[error("Lie algebra is abelian")]
    Abelian,
    #[error("expected derived subalgebra of dimension {expected}, found {found}")]
    DerivedDimension { expected: usize, found: usize },
    #[error("codimension of the center is odd ({0}); input is not of Heisenberg type")]
    ParityViolation(usize),
    #[error("{name} requires {requirement}, got {field}")]
    CharacteristicMismatch {
        name: &'static str,
        requirement: &'static str,
        field: FieldSpec,
    },
    #[error("{0} has no fixed presentation")]
    NoPresentation(&'static str),
    #[error("out of scope: derived subalgebra has dimension {0} > 2")]
    OutOfScope(usize),
    #[error("unavailable over {0}: finite enumeration needs a prime field")]
    InfiniteField(FieldSpec),
    #[error("epicenter candidates are not closed under addition ({members} of {expected} lines)")]
    EpicenterNotClosed { members: usize, expected: usize },
    #[error("a denominator is divisible by {0}")]
    NotReducible(u64),
    #[error("parse error: {0}")]
    Parse(String),
}
