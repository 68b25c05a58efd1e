use thiserror::Error;

/// Errors raised by the library.
///
/// Search failures (no parameter found within a trial budget) are not errors;
/// they come back as `None` or a failed outcome from the search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("field size {p}^{k} does not fit the element representation")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("operands live in different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("exponent overflow: monomial exponents must stay below 128")]
    ExponentOverflow,
    #[error("substitution matrix does not have full row rank")]
    RankDeficient,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("the scheme is empty (projective dimension -1)")]
    EmptyScheme,
    #[error("tuple entries must all have degree {expected}")]
    DegreeMismatch { expected: u32 },
    #[error("tuple index k = {k} exceeds the scheme dimension n = {n}")]
    IndexTooLarge { k: usize, n: i32 },
    #[error("{what}: needs {needed}, budget is {cap}")]
    BudgetExceeded { what: &'static str, needed: f64, cap: f64 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("closed-point tally is not a non-negative integer at degree {0}")]
    InvalidTally(usize),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn budget(what: &'static str, needed: f64, cap: f64) -> Self {
        Error::BudgetExceeded { what, needed, cap }
    }
}
