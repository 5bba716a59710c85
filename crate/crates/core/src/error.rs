use thiserror::Error;

/// Errors raised by the series engine and the combinatorial modules built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative q-exponent {q_exp} cannot be stored in a power series")]
    NegativeQExponent { q_exp: i64 },

    #[error("window underflow: {0}")]
    WindowUnderflow(String),

    #[error("q-exponent {q_exp} exceeds truncation order {order}")]
    BeyondOrder { q_exp: i64, order: u32 },

    #[error("{what} = {value} exceeds the exhaustive cap {cap}")]
    CapExceeded { what: &'static str, value: i64, cap: i64 },

    #[error("theta = {theta} must satisfy 0 <= theta <= l = {l}")]
    BadTheta { theta: i64, l: i64 },

    #[error("module index i = {i} must satisfy 0 <= i < N = {n}")]
    BadModuleIndex { i: i64, n: i64 },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
