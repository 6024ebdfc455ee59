//! Error types shared by all modules.

/// Errors produced by the library.
///
/// Every fallible operation distinguishes malformed input (bad partitions,
/// dimension mismatches, out-of-range parameters) from inputs that are valid
/// but exceed the documented feasibility caps of the polyhedral engine.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Input violates a precondition (range, dimension, parse failure).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Blocks do not form a partition of {1,…,n} into four nonempty parts.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// Input is valid but larger than the supported enumeration caps.
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
