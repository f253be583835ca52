use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: primary has {primary} values, alternative has {alternative}")]
    LengthMismatch { primary: usize, alternative: usize },

    #[error("non-finite value {value} in {context}")]
    NonFiniteValue { value: f64, context: String },

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("mixed context: {0}")]
    MixedContext(String),

    #[error("ragged trace: trial {trial} has {found} generations, expected {expected}")]
    RaggedTrace {
        trial: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown score key `{0}`")]
    UnknownKey(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("duplicate row at line {line}: {key}")]
    DuplicateRow { line: u64, key: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: u64, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Process exit code: 2 for IO and parse failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Parse { .. } => 2,
            _ => 1,
        }
    }
}
