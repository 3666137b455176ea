use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid field size q={q} for p={p}: {reason}")]
    InvalidField { p: u64, q: u64, reason: String },
    #[error("{value} is not invertible modulo {p}")]
    NotInvertible { value: u64, p: u64 },
    #[error("element {0} is not a p-th root of unity")]
    NotInMuP(u64),
    #[error("element {0} does not have exact order p")]
    NotPrimitiveRoot(u64),
    #[error("point `{0}` appears more than once")]
    DuplicatePoint(String),
    #[error("the point at infinity cannot be a root of a factored function")]
    InfiniteRoot,
    #[error("degree {degree} is not divisible by {p}")]
    DegreeNotDivisible { degree: i64, p: u64 },
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("enumeration of {requested} items exceeds the budget of {budget}")]
    BudgetExceeded { requested: String, budget: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Short machine-readable code used in CLI error responses.
    pub fn code(&self) -> &'static str {
        match self {
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::NotPrime(_) => "not_prime",
            Error::InvalidField { .. } => "invalid_field",
            Error::NotInvertible { .. } => "not_invertible",
            Error::NotInMuP(_) | Error::NotPrimitiveRoot(_) => "not_root_of_unity",
            Error::DuplicatePoint(_) => "duplicate_point",
            Error::InfiniteRoot => "infinite_root",
            Error::DegreeNotDivisible { .. } => "degree_not_divisible",
            Error::ContextMismatch(_) => "context_mismatch",
            Error::Invalid(_) => "invalid_input",
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
