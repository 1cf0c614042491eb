use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("agent index {index} out of range (n = {n})")]
    AgentOutOfRange { index: usize, n: usize },

    #[error("candidate index {index} out of range (m = {m})")]
    CandidateOutOfRange { index: usize, m: usize },

    #[error("solution has {size} stops but the budget is {k}")]
    OverBudget { size: usize, k: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration guard exceeded: {what} ({count} > {limit})")]
    GuardExceeded {
        what: &'static str,
        count: u128,
        limit: u128,
    },

    #[error("failed to parse instance: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
