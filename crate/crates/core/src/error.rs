use alloc::string::String;
use core::fmt;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates a documented precondition (duplicate entries, length
    /// mismatch, overlapping value sets, ...).
    InvalidInput(String),
    /// A scan was requested beyond the configured length cap.
    CapExceeded { requested: usize, cap: usize },
    /// `exp` was asked to act on a series with nonzero constant term.
    NonzeroConstantTerm,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::CapExceeded { requested, cap } => {
                write!(f, "length {requested} exceeds the enumeration cap {cap}")
            }
            Error::NonzeroConstantTerm => {
                f.write_str("exponential of a series with nonzero constant term")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
