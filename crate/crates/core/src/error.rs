use thiserror::Error;

/// Errors raised anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at q = {0}")]
    EvalAtPole(String),
    #[error("rational function has a pole at q = 1")]
    PoleAtOne,
    #[error("power series requested at a pole (denominator vanishes at q = 0)")]
    SeriesAtPole,
    #[error("series substitution b = ±q^{0} is not a power series (need exponent >= 1)")]
    SeriesDomainError(i64),
    #[error("arity mismatch: expected {expected} values, got {got}")]
    ArityError { expected: usize, got: usize },
    #[error("p-adic precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("term budget exceeded: {terms} summands > budget {budget}")]
    TermBudgetExceeded { terms: u128, budget: u128 },
    #[error("invalid p-adic parameter: {0}")]
    InvalidPadic(String),
    #[error("unknown case id: {0}")]
    UnknownCaseId(String),
    #[error("range out of bounds: {0}")]
    RangeBound(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
