use thiserror::Error;

/// Errors raised by series construction, algebraic operations and the
/// verification suites.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("letter {letter} is out of range for arity {arity}")]
    LetterOutOfRange { letter: usize, arity: usize },

    #[error("word of length {len} exceeds truncation order {order}")]
    WordTooLong { len: usize, order: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// The degree-`degree` component fails the Dynkin criterion
    /// `delta(p) = k * p`.
    #[error("not a Lie element: degree {degree} fails the Dynkin test")]
    NotLie { degree: usize },

    #[error("usage error: {0}")]
    Usage(String),

    /// A verification suite was handed an input that does not satisfy the
    /// hypothesis it certifies; `witness` names the first offending term.
    #[error("hypothesis of {check} not satisfied: {witness}")]
    Hypothesis { check: String, witness: String },

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_arity(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::ArityMismatch { left, right })
    }
}
