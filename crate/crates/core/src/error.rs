use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order k must be non-negative, got {0}")]
    NegativeOrder(i64),

    #[error("degree n must be at least {min}, got {got}")]
    DegreeTooSmall { min: i64, got: i64 },

    #[error("generalized Bernoulli index j = {index} must be below the order m = {order}")]
    BernoulliIndex { order: usize, index: usize },

    #[error("generalized Bernoulli order must be positive")]
    BernoulliOrder,

    #[error("length mismatch: {weights} weights but {scales} scales")]
    LengthMismatch { weights: usize, scales: usize },

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("inner series must have zero constant term for composition")]
    NonzeroInnerConstant,

    #[error("need at least {needed} terms, got {got}")]
    TooFewTerms { needed: usize, got: usize },

    #[error("invalid Bell polynomial indices k = {k}, j = {j}")]
    BellIndex { k: usize, j: usize },

    #[error("x = {0} is a pole of the reciprocal Pochhammer symbol")]
    Pole(String),

    #[error("invalid parameters for rule `{rule}`: {reason}")]
    InvalidParams { rule: String, reason: String },

    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },

    #[error("memo table would hold {requested} entries, above the cap of {cap}")]
    CacheCapExceeded { requested: usize, cap: usize },

    #[error("quadrature did not reach tolerance {tol:e} within {evaluations} evaluations (estimate {estimate:e})")]
    QuadratureBudget { tol: f64, estimate: f64, evaluations: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),
}

/// Converts a signed order coming from an untyped boundary (CLI, C ABI).
pub fn order(k: i64) -> Result<usize> {
    usize::try_from(k).map_err(|_| Error::NegativeOrder(k))
}
