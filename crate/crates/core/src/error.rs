use thiserror::Error;

use crate::verify::VerifyReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid circulant graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: graph has {graph} vertices but code is over Z_{code}")]
    DimensionMismatch { graph: usize, code: usize },

    #[error("vertex {vertex} out of range for Z_{n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("undefined share: vertex {vertex} in N[{codeword}] is not covered by the code")]
    UndefinedShare { codeword: usize, vertex: usize },

    #[error("vertex {0} is not a codeword")]
    NotACodeword(usize),

    #[error("precondition failed: {message}")]
    Precondition {
        message: String,
        report: Option<Box<VerifyReport>>,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition { message: message.into(), report: None }
    }

    pub(crate) fn failed_check(message: impl Into<String>, report: VerifyReport) -> Self {
        Error::Precondition { message: message.into(), report: Some(Box::new(report)) }
    }
}
