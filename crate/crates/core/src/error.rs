use thiserror::Error;

/// Errors shared across the crate.
///
/// Certification gate failures are *not* errors: they are encoded in the
/// [`crate::certify::Certificate`] verdict. An `Error` means the inputs were
/// malformed or a computation could not be carried out at all.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid gluing: {0}")]
    InvalidGluing(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("invalid vertex pair: u and v must differ")]
    InvalidPair,

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("not a factor: polynomial division left a nonzero remainder")]
    NotAFactor,

    #[error("polynomial is not monic in t")]
    NonMonic,

    #[error("matrix is not symmetric within tolerance")]
    Asymmetric,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("precondition violation: {0}")]
    PreconditionViolation(String),

    #[error("K is not an orbit of the supplied action")]
    InvalidOrbit,

    #[error("mixed quadratic fields: sqrt({0}) and sqrt({1})")]
    FieldMismatch(i64, i64),

    #[error("resource limit exceeded: {0}")]
    ResourceExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
