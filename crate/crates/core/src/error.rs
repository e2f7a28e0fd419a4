use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through element {0}")]
    Cycle(usize),

    #[error("element index {index} out of range for poset of size {n}")]
    Bounds { index: usize, n: usize },

    #[error("{what}: {actual} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("codes are equal; delta is undefined")]
    EqualCodes,

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("gave up: {0}")]
    GiveUp(String),

    #[error("invalid realizer: {0}")]
    InvalidRealizer(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
