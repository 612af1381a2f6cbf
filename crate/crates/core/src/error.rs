use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse scalar `{0}`")]
    ScalarParse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-invertible series (leading coefficient unknown or zero)")]
    NonInvertible,
    #[error("grid violation: exponent {0} does not land on the q^(1/24) grid")]
    GridViolation(String),
    #[error("inconsistent frame shape: {0}")]
    InconsistentFrameShape(String),
    #[error("not an eigenvalue multiset: {0}")]
    NotEigenvalueMultiset(String),
    #[error("class {class} fixes too small a space for lambency {ell}")]
    LambencyTooLarge { class: String, ell: u32 },
    #[error("unsupported lambency {0}")]
    UnsupportedLambency(u32),
    #[error("unknown class {0}")]
    UnknownClass(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("value lies outside Q(sqrt2, sqrt3, sqrt5): {0}")]
    NotRadical(String),
    #[error("degree bound {0} exceeds the supported maximum of 3")]
    DegreeBoundTooLarge(u32),
    #[error("invariant failure: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
