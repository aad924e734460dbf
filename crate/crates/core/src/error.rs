use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    ResourceCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("expected a one-dimensional kernel, computed nullity {nullity}")]
    Rank { nullity: usize },

    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(i64),

    #[error("oracle failure: {0}")]
    OracleFailure(String),

    #[error("identity failure at {witness}")]
    IdentityFailure { witness: String },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("formula violation: {0}")]
    FormulaViolation(String),

    #[error("discrepancy: {0}")]
    Discrepancy(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

/// Coarse classification, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    Verification,
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. }
            | Error::InvalidSequence(_)
            | Error::ContractViolation(_)
            | Error::DuplicateAbscissa(_) => ErrorKind::InvalidInput,
            Error::ResourceCap { .. } => ErrorKind::Resource,
            Error::Rank { .. }
            | Error::OracleFailure(_)
            | Error::IdentityFailure { .. }
            | Error::TheoremViolation(_)
            | Error::FormulaViolation(_)
            | Error::Discrepancy(_)
            | Error::Internal(_) => ErrorKind::Verification,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
