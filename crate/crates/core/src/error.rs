use thiserror::Error;

/// Errors raised by the library.
///
/// `Parse` and `Domain` are caller mistakes (bad input, violated
/// precondition). `Internal` means two independent computations disagreed,
/// which points at a bug rather than at the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("field too large: {size} elements exceeds the cap of {cap}")]
    FieldTooLarge { size: u64, cap: u64 },
    #[error("{0}")]
    Domain(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
