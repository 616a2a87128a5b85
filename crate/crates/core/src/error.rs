use thiserror::Error;

/// Errors raised by graph construction and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown ids, bad degrees, parse failures).
    #[error("input error: {0}")]
    Input(String),

    /// The computation is defined but exceeds a hard size ceiling.
    #[error("capacity error: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// The operation is undefined for this argument (e.g. a cut-edge where a
    /// cycle edge is required).
    #[error("domain error: {0}")]
    Domain(String),

    /// An affine system with no solution.
    #[error("infeasible constraints: {0}")]
    Infeasible(String),

    /// Circulations over different coefficient rings were combined.
    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    /// Two independent computational routes disagreed.
    #[error("oracle mismatch in {what}: {detail}")]
    OracleMismatch { what: &'static str, detail: String },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn mismatch(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OracleMismatch {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
