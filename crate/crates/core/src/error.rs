use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A denominator parameter of a hypergeometric series is zero or a negative integer.
    #[error("pole parameter: {name} = {value} is zero or a negative integer")]
    PoleParameter { name: &'static str, value: f64 },

    #[error("invalid integral spec: {0}")]
    InvalidSpec(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge after {terms} terms (error estimate {err_est:e})")]
    NotConverged { terms: usize, err_est: f64 },

    #[error("moment of order {n} does not exist: {reason}")]
    MomentDoesNotExist { n: u32, reason: String },

    #[error("root finding did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
