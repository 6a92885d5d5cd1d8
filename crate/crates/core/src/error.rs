use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("no p-values given")]
    EmptyInput,
    #[error("p-value at index {index} is {value}, expected a finite value in [0, 1]")]
    InvalidPValue { index: usize, value: f64 },
    #[error("step weights need at least one hypothesis")]
    ZeroSize,
    #[error("local test needs a non-empty subset")]
    EmptySubset,
    #[error("hypothesis index {index} out of range for {m} hypotheses")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("alpha {0} is outside [0, 1]")]
    InvalidAlpha(f64),
    #[error("inputs disagree on the number of hypotheses: {expected} vs {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("{m} hypotheses exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        m: usize,
        limit: usize,
    },
    #[error("size {m} exceeds the quadratic cap of {cap}; pass an explicit override to run it")]
    CapExceeded { m: usize, cap: usize },
    #[error("fast and quadratic adjustments disagree at m = {m}")]
    Mismatch { m: usize },
}
