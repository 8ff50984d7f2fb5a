use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("gamma pole at non-positive integer {0}")]
    GammaPole(i64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge: error estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    NonConvergence {
        what: &'static str,
        estimate: f64,
        tolerance: f64,
    },

    #[error("truncation insufficient in {what}: tail estimate {tail:e} exceeds tolerance {tolerance:e}")]
    TruncationInsufficient {
        what: &'static str,
        tail: f64,
        tolerance: f64,
    },

    #[error("finite-difference step too large: Richardson disagreement {disagreement:e} exceeds {tolerance:e}")]
    StepTooLarge { disagreement: f64, tolerance: f64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("memory guard: {requested} entries requested, cap is {cap}")]
    MemoryGuard { requested: u64, cap: u64 },

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("validation failed: {}", .0.join("; "))]
    Validation(Vec<String>),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures of a numerical method (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. }
                | Error::TruncationInsufficient { .. }
                | Error::StepTooLarge { .. }
                | Error::NonFinite(_)
        )
    }
}
