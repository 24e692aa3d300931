//! Error type shared across the library.

use std::fmt;

/// Library-wide error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A mathematical precondition was violated (zero inverse, zero vector,
    /// missing direction, mismatched moduli, ...).
    Domain(String),
    /// An operation was asked to run outside its size gate.
    Resource(String),
    /// A verified invariant failed. Over the supported ranges this would be a
    /// counterexample to a proven statement, so it is reported loudly instead
    /// of being swallowed.
    Verification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Resource(msg) => write!(f, "resource gate exceeded: {msg}"),
            Error::Verification(msg) => write!(f, "verification failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn resource(msg: impl Into<String>) -> Error {
    Error::Resource(msg.into())
}

pub(crate) fn verification(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}
