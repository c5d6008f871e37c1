use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("pole lies inside or on the ball (distance {distance}, radius {radius})")]
    PoleInBall { distance: f64, radius: f64 },

    #[error("balls {first} and {second} overlap (gap {gap:e})")]
    Overlap { first: usize, second: usize, gap: f64 },

    #[error("empty packing")]
    EmptyPacking,

    #[error("unsupported chart: {0}")]
    UnsupportedChart(String),

    #[error("property violated: {0}")]
    PropertyViolation(String),

    #[error("construction inconsistency: {0}")]
    ConstructionInconsistency(String),

    #[error("layering error: {0}")]
    Layering(String),

    #[error("claim failed: {0}")]
    ClaimFailure(String),

    #[error("shell certificate failed: {0}")]
    CertificateFailure(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid packing file: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
