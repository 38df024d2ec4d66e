use thiserror::Error;

/// Errors raised when an input violates the preconditions of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid Brieskorn exponents: {0}")]
    InvalidTriple(String),

    #[error("invalid cyclic quotient datum: {0}")]
    InvalidCyclic(String),

    /// The cyclic quotient has q = 1, so every generator has the same weight.
    #[error("cyclic quotient ({n}, 1) is homogeneous; no lowest-weight generator is distinguished")]
    HomogeneousInput { n: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
