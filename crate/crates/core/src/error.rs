use thiserror::Error;

/// Errors shared by every layer of the toolkit.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid modulus {0}: must be a prime below 2^31")]
    InvalidModulus(u64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("scalar {0} is not an element of the ring's field")]
    ScalarOutOfField(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("monomial arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("division is not exact")]
    NonExactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient by the zero ideal")]
    ZeroIdealQuotient,
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
    #[error("input is not homogeneous")]
    NonHomogeneous,
    #[error("index {0} out of range [{1}, {2}]")]
    IndexOutOfRange(i64, i64, i64),
    #[error("step limit exceeded after {0} reduction steps")]
    StepLimitExceeded(u64),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("embedding matrix is rank-deficient or has the wrong target rank")]
    RankMismatch,
    #[error("module has no embedding attached")]
    MissingEmbedding,
    #[error("closure candidate has no monic integral equation for variable `{0}`")]
    MissingMonicRelation(String),
    #[error("closure candidate is inconsistent: 1 lies in its defining ideal")]
    InconsistentCandidate,
    #[error("modules live over different base rings")]
    BaseMismatch,
    #[error("graded component degree {0} exceeds the materialization bound {1}")]
    DegreeBoundExceeded(i64, i64),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
