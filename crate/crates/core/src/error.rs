use thiserror::Error;

/// Errors raised by the algebraic machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("unknown variable index {0}")]
    UnknownVariable(usize),

    #[error("weights must be positive integers, got {0}")]
    InvalidWeight(i64),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("ring mismatch")]
    RingMismatch,

    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("inconsistent generator degrees: {0}")]
    InconsistentDegrees(String),

    #[error("element does not lie in the degree-{degree} slice")]
    NotInSlice { degree: i64 },

    #[error("derivation does not preserve the relation ideal: {0}")]
    NotADerivation(String),

    #[error("not in the span of the generators: {0}")]
    NotInSpan(String),

    #[error("Lie-Rinehart algebra is not free on its generators")]
    NotFree,

    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("not a complex: d^{}∘d^{p} ≠ 0 in degree {degree}", .p + 1)]
    NotAComplex { p: usize, degree: i64 },

    #[error("connection is not flat: {0}")]
    NotFlat(String),

    #[error("not horizontal: {0}")]
    NotHorizontal(String),

    #[error("invalid exact sequence data: {0}")]
    InvalidSequence(String),

    #[error("closed form is not polynomial: {0}")]
    NonPolynomial(String),

    #[error("kernel computation failed: {0}")]
    Kernel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
