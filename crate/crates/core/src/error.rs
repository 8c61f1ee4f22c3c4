use thiserror::Error;

/// Errors shared across the crate. Variants are named after the failure
/// they signal; several double as internal consistency checks (a
/// `ZeroDenominator` or `NonConvergence` means an arithmetic bug, not bad
/// user input).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arguments are not coprime: gcd({0}, {1}) > 1")]
    NotCoprime(i64, i64),
    #[error("exponent denominator {0} is not invertible modulo {1}")]
    NonInvertibleExponentDenominator(i64, i64),
    #[error("division by zero in a cyclotomic ring")]
    DivisionByZeroCyclo,
    #[error("exact division failed: {0}")]
    ExactDivisionFailed(String),
    #[error("solved coefficient is not a Laurent polynomial at {0}")]
    NonPolynomialCoefficient(String),
    #[error("coefficient table violates the integrality constraint at {0}")]
    IntegralityViolation(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("unsupported link kind for this operation")]
    UnsupportedLinkKind,
    #[error("denominator evaluated to zero (arithmetic bug)")]
    ZeroDenominator,
    #[error("exponent u = {0} is not an integer")]
    NonIntegerU(String),
    #[error("{0} is not a prime power")]
    NonPrimePower(i64),
    #[error("Newton iteration for the {0}th root of q did not stabilize")]
    NonConvergence(i64),
    #[error("element of sector {elem} cannot be evaluated at a root of order with p-valuation {val}")]
    SectorMismatch { elem: usize, val: usize },
    #[error("evaluation at roots of order {r} <= 2k+2 = {bound} is unsupported")]
    SmallOrderUnsupported { r: i64, bound: i64 },
    #[error("denominator is not invertible in jet arithmetic")]
    NonInvertibleDenominator,
    #[error("basis solve is singular (arithmetic bug)")]
    SingularBasis,
    #[error("value lies outside Z[1/{base}]: {what}")]
    NotLocalized { base: i64, what: String },
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
