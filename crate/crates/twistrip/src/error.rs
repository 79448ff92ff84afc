use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument to an analytic formula.
    #[error("domain error: {0}")]
    Domain(String),
    /// Inconsistent grid / window geometry.
    #[error("geometry error: {0}")]
    Geometry(String),
    /// Invalid run configuration.
    #[error("configuration error: {0}")]
    Config(String),
    /// A solve failed to converge or produced inconsistent certificates.
    #[error("numerics error: {0}")]
    Numerics(String),
    /// A symmetry precondition (parity-symmetric grid) does not hold.
    #[error("symmetry error: {0}")]
    Symmetry(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn numerics(msg: impl Into<String>) -> Self {
        Error::Numerics(msg.into())
    }
    pub fn symmetry(msg: impl Into<String>) -> Self {
        Error::Symmetry(msg.into())
    }
}
