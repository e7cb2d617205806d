use std::fmt;

use thiserror::Error;

/// A self-contained failing instance, serialized so it can be replayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub message: String,
    /// Host in edge-list format.
    pub instance: String,
    /// Free-form context: current tree, separator, path, case label.
    pub detail: String,
}

impl Witness {
    pub fn new(message: impl Into<String>, instance: String, detail: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            instance,
            detail: detail.into(),
        }
    }

    /// Text dump suitable for a witness file.
    pub fn to_text(&self) -> String {
        format!(
            "# {}\n# {}\n{}",
            self.message,
            self.detail.replace('\n', "\n# "),
            self.instance
        )
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.message, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no separating set: graph is complete")]
    NoSeparatingSet,
    /// A search that is guaranteed to succeed under its preconditions came up empty.
    #[error("not found: {0}")]
    NotFound(Box<Witness>),
    /// A case construction failed to make progress.
    #[error("internal contradiction: {0}")]
    Contradiction(Box<Witness>),
}

impl Error {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Error::NotFound(w) | Error::Contradiction(w) => Some(w),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
