use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// A numerator, denominator, or Gaussian norm exceeded the factorization
    /// budget (norms must stay below 2^64). Callers resample at smaller height.
    #[error("factorization budget exceeded for norm {0}")]
    FactorizationBudget(String),

    /// Division by zero or factorization of zero requested.
    #[error("zero is not an element of the multiplicative group")]
    ZeroElement,
}
