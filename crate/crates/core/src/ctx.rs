//! Evaluation context and the engine-wide error type.

use thiserror::Error;

/// Budgets shared by every fuel- or cutoff-bounded operation.
///
/// `fuel` is the step budget handed to each top-level application; `cutoff`
/// bounds enumerations of infinite-branching extensions such as `ext(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalCtx {
    pub fuel: u64,
    pub cutoff: u64,
}

impl Default for EvalCtx {
    fn default() -> Self {
        EvalCtx {
            fuel: 1_000_000,
            cutoff: 8,
        }
    }
}

impl EvalCtx {
    pub fn new(fuel: u64, cutoff: u64) -> Self {
        EvalCtx { fuel, cutoff }
    }

    /// The same context with both budgets doubled; used by the stability
    /// suite to confirm that definite verdicts do not flip.
    pub fn doubled(&self) -> Self {
        EvalCtx {
            fuel: self.fuel.saturating_mul(2),
            cutoff: self.cutoff.saturating_mul(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("out of fuel")]
    OutOfFuel,
    #[error("stuck: {0}")]
    Stuck(String),
    #[error("unbounded enumeration: {0}")]
    Unbounded(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("not an immediate successor: {0}")]
    NotAChild(String),
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("unsupported formula: {0}")]
    UnsupportedFormula(String),
    #[error("open formula: unbound tree variable {0}")]
    OpenFormula(String),
}

pub type Result<T> = std::result::Result<T, Error>;
