use thiserror::Error;

/// Errors raised by the algebraic operations and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("not a simple cycle of the quiver: {0}")]
    InvalidCycle(String),
    #[error("quiver does not have transverse cycles")]
    NotTransverse,
    #[error("labeling is not reduced: {0}")]
    NotReduced(String),
    #[error("labeled quiver is not localized at {0}")]
    NotLocalized(String),
    #[error("cannot compose: {0}")]
    ComposeError(String),
    #[error("cycle label is nonzero: {0}")]
    NonzeroCycleLabel(String),
    #[error("dimension mismatch: {0}")]
    DimError(String),
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("internal error: {0}")]
    InternalError(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "Parse",
            Error::InvalidInput(_) => "InvalidInput",
            Error::InvalidPath(_) => "InvalidPath",
            Error::InvalidCycle(_) => "InvalidCycle",
            Error::NotTransverse => "NotTransverse",
            Error::NotReduced(_) => "NotReduced",
            Error::NotLocalized(_) => "NotLocalized",
            Error::ComposeError(_) => "ComposeError",
            Error::NonzeroCycleLabel(_) => "NonzeroCycleLabel",
            Error::DimError(_) => "DimError",
            Error::UnsupportedPresentation(_) => "UnsupportedPresentation",
            Error::SizeLimit(_) => "SizeLimit",
            Error::InternalError(_) => "InternalError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
