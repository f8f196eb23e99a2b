//! Error type shared by every module of the engine.

use thiserror::Error;

/// Errors raised by field, group, table and decision operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the range the operation accepts.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed input text; `position` is a 0-based character offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A group spec could not be understood.
    #[error("unknown group spec `{0}`")]
    UnknownGroup(String),

    /// Enumeration would exceed the configured element bound.
    #[error("group `{label}` exceeds the enumeration bound of {bound} elements")]
    OrderBoundExceeded { label: String, bound: u64 },

    /// A computation needs more than the configured resources (classes, table size, ...).
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    /// `H` was expected to be a subgroup of `G`.
    #[error("`{sub}` is not a subgroup of `{group}`")]
    NotSubgroup { sub: String, group: String },

    /// Characters or class functions from different groups were combined.
    #[error("class functions belong to different groups")]
    GroupMismatch,

    /// Attempted to invert the zero element of a field.
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    /// A class function that should be a character is not one.
    #[error("not a character: {0}")]
    NotACharacter(String),

    /// Two independent computations of the same quantity disagree.
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
