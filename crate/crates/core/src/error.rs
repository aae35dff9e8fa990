use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("composite of differentials is nonzero at degree {degree}")]
    NotAComplex { degree: i32 },
    #[error("{axiom} violated at {location}: residual {residual}")]
    Violation { axiom: String, location: String, residual: String },
    #[error("not a Maurer-Cartan element: residual {0}")]
    NotMC(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("map is not continuous: {0}")]
    NonContinuous(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn violation(axiom: impl Into<String>, location: impl Into<String>, residual: impl Into<String>) -> Error {
        Error::Violation { axiom: axiom.into(), location: location.into(), residual: residual.into() }
    }

    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Error {
        Error::Parse { location: location.into(), message: message.into() }
    }

    /// Process exit status: 2 for malformed input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnknownGenerator(_) | Error::DuplicateGenerator(_) => 2,
            _ => 1,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Violation { .. } | Error::NotAComplex { .. })
    }
}
