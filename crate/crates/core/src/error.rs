use thiserror::Error;

/// Errors raised by group construction, parsing, enumeration and classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("permutation closure exceeded the cap of {cap} elements")]
    ClosureLimit { cap: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("coset enumeration exceeded {0} cosets")]
    EnumerationExceeded(usize),

    #[error("group axiom violated: {0}")]
    Axiom(String),

    #[error("scale guard: {0}")]
    ScaleGuard(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
