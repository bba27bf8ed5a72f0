use thiserror::Error;

/// Errors raised by library operations. Property violations are reported in
/// result values, never through this type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element index {index} out of range for a carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("{what}: carrier size {size} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("carrier mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("unknown builtin operator `{0}`")]
    UnknownBuiltin(String),

    #[error("closed-set count exceeds the bound of {bound}")]
    TooManyClosedSets { bound: usize },

    #[error("search exceeded its limit of {limit} candidates")]
    SearchLimit { limit: u64 },

    #[error("{0} has too many divisors (limit 64)")]
    TooManyDivisors(u64),

    #[error("{0} is outside the supported range 1..=1000000")]
    IntegerRange(u64),

    #[error("subset {0} is not closed")]
    NotClosed(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("embedding precondition failed: {0}")]
    Embedding(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
