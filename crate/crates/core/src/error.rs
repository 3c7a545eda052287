//! Error type shared by every module.
//!
//! The three fatal categories map onto distinct process exit codes in the
//! CLI: parse and domain errors are usage errors (exit 1), while a
//! [`Error::Consistency`] means a derived quantity disagreed with a stored
//! closed form — an internal tripwire that must never fire on a correct
//! build (exit 2).

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// A descriptor string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A derived value disagrees with its closed-form expectation.
    #[error("internal consistency failure for {subject}: column {column}: derived {derived}, expected {expected}")]
    Consistency {
        subject: String,
        column: String,
        derived: String,
        expected: String,
    },

    /// An evaluation outside the supported (fiber-surface) regime was requested.
    #[error("unsupported evaluation: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn consistency(
        subject: impl Into<String>,
        column: impl Into<String>,
        derived: impl ToString,
        expected: impl ToString,
    ) -> Self {
        Error::Consistency {
            subject: subject.into(),
            column: column.into(),
            derived: derived.to_string(),
            expected: expected.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
