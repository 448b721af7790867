//! Error taxonomy shared by every module.

/// Errors produced by construction, query, and character operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The algebra spec string or a (family, rank) pair is not a valid
    /// semisimple type.
    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),
    /// A weight or root was combined with a root system it does not belong
    /// to.
    #[error("operands belong to different algebras ({0} vs {1})")]
    MismatchedAlgebra(String, String),
    /// A simple-root index outside `0..rank`.
    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    /// An operation requiring a dominant weight received a non-dominant one.
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    /// An operation requiring a self-dual weight received one with
    /// `μ ≠ μ̄`.
    #[error("weight {0} is not self-dual")]
    NotSelfDual(String),
    /// A genuine decomposition accumulated a negative multiplicity. This
    /// signals a bug, never bad input.
    #[error("internal error: negative multiplicity {mult} at {weight}")]
    InternalNegativeMultiplicity { weight: String, mult: i64 },
    /// Halving a character produced a non-integral coefficient. This signals
    /// a bug, never bad input.
    #[error("internal error: non-integral character coefficient at {0}")]
    NonIntegralCharacter(String),
    /// A character computation would exceed the configured support cap.
    #[error("character support estimate {size} exceeds the cap {cap}")]
    SizeCapExceeded { size: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
