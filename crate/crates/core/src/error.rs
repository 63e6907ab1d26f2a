use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation on the diagonal z = ζ of a kernel that is singular there.
    #[error("singular point: {0}")]
    Singular(String),

    /// Input data too small or too trivial for the requested computation.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// The requested evaluation would under-resolve a quadrature rule.
    #[error("resolution policy: {0}")]
    Policy(String),

    /// Structurally invalid data, naming the offending field.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    /// A field was checked against a case it was not computed from.
    #[error("fingerprint mismatch: field built from {found}, expected {expected}")]
    Fingerprint { expected: String, found: String },
}

impl Error {
    pub fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
