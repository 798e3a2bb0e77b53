use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Zero lies outside the natural numbers used throughout this crate.
    #[error("{op}: argument must be at least 1, got 0")]
    Zero { op: &'static str },

    #[error("{op}: {value} is not prime")]
    NotPrime { op: &'static str, value: u64 },

    #[error("sieve limit must be at least 2, got {0}")]
    LimitTooSmall(u64),

    #[error("sieve limit {0} does not fit a 32-bit factor table")]
    LimitTooLarge(u64),

    #[error("sieve up to {limit} needs about {needed} bytes, over the {budget} byte budget")]
    MemoryBudget { limit: u64, needed: u64, budget: u64 },

    #[error("{op}: {value} exceeds the table limit {limit}")]
    OutOfRange { op: &'static str, value: u64, limit: u64 },

    #[error("{op}: {reason} (got {value})")]
    Domain { op: &'static str, value: u64, reason: &'static str },

    #[error("invalid decomposition {p}+{q}+{r} for n = {n}: {reason}")]
    Decomposition { p: u64, q: u64, r: u64, n: u64, reason: &'static str },

    #[error("invalid range: lo {lo} > hi {hi}")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("unknown {kind}: {value}")]
    Unknown { kind: &'static str, value: String },

    #[error("thread pool: {0}")]
    ThreadPool(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Whether the error comes from a resource limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::MemoryBudget { .. } | Error::LimitTooLarge(_) | Error::OutOfRange { .. })
    }
}
