use thiserror::Error;

/// Errors produced by the ideal engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("resource limit exceeded: {what} (cap {cap})")]
    Resource { what: &'static str, cap: u64 },

    #[error("exponent overflow")]
    Overflow,

    #[error("ideal is not invariant under permuting the variables")]
    NotSymmetric,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("outside the regime of the formula: {0}")]
    Regime(String),

    #[error("operation undefined for the zero ideal: {0}")]
    ZeroIdeal(&'static str),

    #[error(
        "no linear-quotients witness: colon at generator {index} is not generated by variables"
    )]
    NoLinearQuotients { index: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
