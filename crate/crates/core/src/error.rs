//! Error type shared by the solver and the oracles.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// `Contract` marks a violated caller precondition; `Invariant` marks an
/// internal consistency failure and always signals a bug, never bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Modulus is zero or exceeds [`crate::MAX_MODULUS`].
    #[error("invalid modulus {0}")]
    InvalidModulus(u64),
    /// Residue has no multiplicative inverse for this modulus.
    #[error("{0} is not invertible modulo {1}")]
    NoInverse(u64, u64),
    /// Input sequence has the wrong number of elements.
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: u64, got: u64 },
    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(&'static str),
    /// An internal consistency check failed.
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
}
