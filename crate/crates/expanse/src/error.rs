//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u64, found: u64 },

    #[error("monomial set is not minimal with respect to divisibility")]
    NotDivisMinimal,

    #[error("not a permutation of 0..{expected}")]
    NotAPermutation { expected: usize },

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("search too large: size {size} exceeds limit {limit}")]
    SearchTooLarge { size: usize, limit: usize },

    #[error("computation budget exhausted (limit {limit})")]
    BudgetExhausted { limit: u64 },

    #[error("configuration is not generated in a single degree")]
    NotEquigenerated,

    #[error("empty subconfiguration")]
    EmptySubconfiguration,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A fact the underlying theory guarantees failed to hold. This is a bug
    /// escalation, never a recoverable state.
    #[error("property violation: {0}")]
    PropertyViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
