use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor is not a regular polynomial")]
    NonRegularDivisor,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("length {n} is coprime to p = {p}")]
    CoprimeLength { p: u32, n: usize },
    #[error("length {n} is not coprime to p = {p}")]
    NotCoprime { p: u32, n: usize },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("closed-form distance hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("two-generator coprime form does not reproduce the code: {0}")]
    CoprimeFormMismatch(String),
    #[error("formula disagrees with the computed value for {quantity}: formula {formula}, observed {observed}")]
    FormulaDiscrepancy { quantity: String, formula: i64, observed: i64 },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
