use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero modulus")]
    ZeroModulus,

    #[error("degree zero polynomial where degree >= 1 required")]
    DegreeZero,

    #[error("modulus must be irreducible of degree {expected}, got 0x{mask:x}")]
    BadModulus { mask: u64, expected: u32 },

    #[error("scale mismatch: {0} vs {1}")]
    ScaleMismatch(u32, u32),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("frequency out of range: k = {k}, need k < 2^{m}")]
    FrequencyOutOfRange { k: u64, m: u32 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),

    #[error("evaluation budget exceeded: needs {needed} elementary operations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
