use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("value {value} is not a valid element of {ring}")]
    Encoding { ring: String, value: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration guard exceeded: {needed} > {guard}")]
    GuardExceeded { needed: String, guard: u64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("invalid root lattice: {0}")]
    InvalidSpec(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("lattice is not integral")]
    NotIntegral,

    #[error("lattice is not even")]
    NotEven,

    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("bound must be non-negative, got {0}")]
    NegativeBound(i64),

    #[error("rank {rank} exceeds the limit {limit}")]
    RankGuard { rank: usize, limit: usize },

    #[error("lattices live in different ambient spaces")]
    AmbientMismatch,

    #[error("truncation bounds differ: {0} vs {1}")]
    BoundMismatch(String, String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
