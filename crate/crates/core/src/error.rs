//! Error type shared by every module of the crate.

/// Everything that can go wrong while building, evaluating, or searching
/// designs. Numeric evaluation itself is exact and never fails; errors come
/// from malformed input, violated preconditions, or resource caps.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A design or weights file failed to parse. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Design construction violated a structural requirement.
    #[error("invalid design: {0}")]
    InvalidDesign(String),

    /// A design transform was not a valid group element for the design.
    #[error("invalid transform: {0}")]
    InvalidTransform(String),

    /// A factor subset referenced factors outside the design.
    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    /// The empty subset was supplied where a nonempty one is required.
    #[error("the empty factor subset is not allowed here")]
    EmptySubset,

    /// Two objects that must agree on the number of factors did not.
    #[error("factor count mismatch: {0}")]
    FactorMismatch(String),

    /// A model scenario was requested with out-of-range parameters.
    #[error("infeasible scenario: {0}")]
    InfeasibleScenario(String),

    /// A model distribution has no support, so no expectation exists.
    #[error("model distribution has empty support")]
    EmptySupport,

    /// An information matrix exceeded the configured order cap.
    #[error("information matrix order {order} exceeds cap {cap}")]
    OrderCap { order: usize, cap: usize },

    /// Canonicalization is only available for small factor counts.
    #[error("canonicalization supports at most {max} factors, got {got}")]
    GroupTooLarge { got: usize, max: usize },

    /// An exhaustive search space exceeded the guard bound.
    #[error("search space too large: {0}")]
    SearchSpace(String),

    /// A search or evaluation configuration was inconsistent.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The constructed Hadamard matrix failed its orthogonality check.
    #[error("Hadamard construction failed orthogonality verification")]
    HadamardVerification,
}

pub type Result<T> = std::result::Result<T, Error>;
