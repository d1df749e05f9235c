use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sequence would exceed the 63-symbol word limit.
    #[error("length {len} exceeds the maximum word length {max}")]
    LengthOverflow { len: usize, max: usize },

    #[error("sets have mixed member lengths ({expected} and {found})")]
    MixedLengths { expected: usize, found: usize },

    #[error("invalid bit string {text:?}: {reason}")]
    Parse { text: String, reason: String },

    /// The exhaustive search would exceed its configured budget.
    #[error("search budget exceeded: {what} is {actual}, limit {limit}")]
    Budget {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("requested {requested} reads but the deletion ball has only {ball_size} elements")]
    BallTooSmall { requested: usize, ball_size: usize },

    #[error("invalid read set: {0}")]
    InvalidReads(String),

    #[error("line {line}: {reason}")]
    ReadFile { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
