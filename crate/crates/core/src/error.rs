use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field order {p}^{deg} exceeds the supported maximum of 65536")]
    FieldTooLarge { p: u32, deg: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("modulus is not a monic irreducible polynomial of the requested degree")]
    BadModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
