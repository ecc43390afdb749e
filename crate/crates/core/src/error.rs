use thiserror::Error;

/// Errors raised by group computations, parsing and the prober.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("cap exceeded: {what} requires {requested}, limit is {limit}")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("group is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("group is not abelian")]
    NonAbelianInput,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("hypothesis not met: Sylow {prime}-subgroup has order {order} > {prime}^{k}")]
    HypothesisNotMet { prime: u64, order: u64, k: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown verification tag `{0}`")]
    UnknownTag(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn cap(
        what: &'static str,
        requested: impl Into<u128>,
        limit: impl Into<u128>,
    ) -> Self {
        Error::CapExceeded {
            what,
            requested: requested.into(),
            limit: limit.into(),
        }
    }
}
