use thiserror::Error;

use crate::algebra::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{family:?} generator requires {expected} doubled index, got {index2}")]
    Parity {
        family: Family,
        index2: i64,
        expected: &'static str,
    },
    #[error("generator index overflow")]
    IndexOverflow,
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("unsupported tensor arity {0}")]
    BadArity(usize),
    #[error("p must be a half-integer (odd doubled value), got p2 = {0}")]
    EvenP(i64),
    #[error("expected a single generator, got {0}")]
    NotAGenerator(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
