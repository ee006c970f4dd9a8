use thiserror::Error;

/// Errors raised before any axiom is evaluated.
///
/// Axiom failures are never errors; they are reported through
/// [`Report`](crate::Report). An `Error` means the input could not be read as
/// the structure it claims to be.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed {what}: {reason}")]
    Structure { what: &'static str, reason: String },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("GF({p}^{k}): {reason}")]
    Field { p: u32, k: u32, reason: String },

    #[error("input does not satisfy its axioms: {0}")]
    Invalid(String),

    #[error("{0}")]
    Refused(String),
}

impl Error {
    pub(crate) fn structure(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Structure {
            what,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
