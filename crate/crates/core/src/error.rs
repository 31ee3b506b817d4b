use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("quotient is infinite-dimensional: no pure power of x{0} among the leading terms")]
    InfiniteQuotient(usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("input outside the domain: {0}")]
    Domain(String),
    /// A computed object contradicts an identity it is expected to satisfy.
    #[error("falsified: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
