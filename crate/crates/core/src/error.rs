use thiserror::Error;

/// Errors raised by the library. Every variant is a caller error or a
/// violated mathematical precondition; none are transient.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid nu vector: {0}")]
    InvalidNu(String),

    #[error("expected dimension r = {expected}, got r = {found}")]
    Dimension { expected: usize, found: usize },

    #[error("index {index} out of range for {len} entries")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{functions} functions supplied for {entries} nu entries")]
    LengthMismatch { functions: usize, entries: usize },

    #[error("invalid function descriptor `{0}`")]
    InvalidDescriptor(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no closed form: {0}")]
    NoClosedForm(String),

    #[error("divergent sum: {0}")]
    Divergent(String),

    #[error("invalid truncation plan: {0}")]
    InvalidPlan(String),

    #[error("cone must be simplicial with 1 or 2 generators, got {0}")]
    NonSimplicial(usize),

    #[error("internal invariant violated: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
