use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A Green-function solve hit a pivot below the singularity threshold:
    /// the requested energy is numerically an eigenvalue of the operator.
    #[error("singular energy: pivot {pivot:.3e} at row {index}")]
    SingularEnergy { index: usize, pivot: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit status for this error (0 is success).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Config(_) | Error::SchemaMismatch(_) => 2,
            Error::SingularEnergy { .. } => 3,
            Error::Io(_) => 1,
        }
    }

    /// Short machine-readable reason tag used in summary records.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::SingularEnergy { .. } => "singular-energy",
            Error::Config(_) => "invalid-config",
            Error::SchemaMismatch(_) => "schema-mismatch",
            Error::Io(_) => "io-error",
        }
    }
}
