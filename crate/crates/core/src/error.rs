use thiserror::Error;

/// Errors raised by the dimension pipelines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is singular (exact determinant is zero)")]
    SingularInput,

    #[error("value {value} outside the admissible domain {domain}")]
    DomainError { value: f64, domain: &'static str },

    #[error("enumeration of {requested} words exceeds the node cap of {cap}")]
    BudgetExceeded { requested: u128, cap: u64 },

    #[error("stopping family undecided at depth cap {depth}: system is not uniformly contracting")]
    NotContracting { depth: usize },

    #[error("system is not positive: {0}")]
    NotPositive(String),

    #[error("generator {index} is not traceless")]
    NotTraceless { index: usize },

    #[error("singular value gap too small for a well-defined direction (a2 = {a2}, a3 = {a3})")]
    DegenerateGap { a2: f64, a3: f64 },

    #[error("Lyapunov spectrum is not simple: {0:?}")]
    DegenerateSpectrum([f64; 3]),

    #[error("invalid probability vector: {0}")]
    BadVector(String),

    #[error("bad frame direction: {0}")]
    BadDirection(String),

    #[error("linear fractional transformation has a vanishing denominator")]
    DenominatorZero,

    #[error("need at least {needed} usable scales, found {found}")]
    TooFewScales { needed: usize, found: usize },

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
