use thiserror::Error;

/// Errors raised by the algebra engine, the oracle and the presentation language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("descriptor mismatch: expected {expected} generators, found {found}")]
    DescriptorMismatch { expected: usize, found: usize },

    #[error("inconsistent structure maps: {0}")]
    InconsistentMaps(String),

    #[error("presentation is not a right double Ore extension: {0}")]
    InconsistentPresentation(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("resource cap exceeded at degree {degree}: {words} words > cap {cap}")]
    ResourceCap { degree: usize, words: u128, cap: usize },

    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown catalogue entry `{0}`")]
    UnknownExample(String),

    #[error("constraint violated: {0}")]
    Constraint(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
