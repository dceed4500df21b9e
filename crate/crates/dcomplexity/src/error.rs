use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text or symbol vector cannot form a valid word.
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// Operation requires a word of pairwise-distinct symbols.
    #[error("word has repeated symbols")]
    NotAllDistinct,

    /// Input exceeds the practical ceiling of an exponential path.
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),

    /// Parameter outside the stated range of a formula.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Construction divides by d-1 and needs d >= 2.
    #[error("d must be at least 2 for this construction")]
    DNotSupported,

    /// An exactness assertion failed; must never fire on correct code.
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),

    /// Cache file is unreadable, corrupt or has a bad checksum.
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
