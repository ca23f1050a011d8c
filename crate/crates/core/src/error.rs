use thiserror::Error;

/// Errors produced by graph construction and the measure computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph with {n} vertices{}", line_suffix(*.line))]
    Range {
        vertex: usize,
        n: usize,
        line: Option<usize>,
    },

    #[error("self-loop at vertex {vertex}{}", line_suffix(*.line))]
    SelfLoop { vertex: usize, line: Option<usize> },

    #[error("invalid graph family: {0}")]
    InvalidFamily(String),

    /// The operation is not defined for this input (too few vertices,
    /// disconnected graph where connectivity is required, ...).
    #[error("undefined: {0}")]
    Domain(String),

    /// The exact computation would exceed its work budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

fn line_suffix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" at line {l}"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Range { .. } | Error::SelfLoop { .. } => 2,
            Error::InvalidFamily(_) | Error::Domain(_) => 1,
            Error::Capacity(_) => 3,
            Error::Numeric(_) => 4,
        }
    }
}
