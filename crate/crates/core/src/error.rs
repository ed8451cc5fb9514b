use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),

    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),

    #[error("monomial length mismatch: {left} vs {right} variables")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is rank deficient: column {column} has no pivot")]
    RankDeficient { column: usize },

    #[error("duplicate point at rows {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },

    #[error("invalid point set: {0}")]
    InvalidPoints(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("variety generation failed: {0}")]
    Generation(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("checksum mismatch for {instance}: essgb {essgb:016x}, bm {bm:016x}")]
    ChecksumMismatch {
        instance: String,
        essgb: u64,
        bm: u64,
    },

    #[error("I/O error: {0}")]
    Io(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
