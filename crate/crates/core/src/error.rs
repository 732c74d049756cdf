use thiserror::Error;

/// Errors surfaced by the library.
///
/// `BudgetExceeded` and `HypothesisViolation` are separated from plain input
/// errors because callers (notably the CLI) map them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("ambient mismatch: expected {expected} variables, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },

    #[error("piece is not spanned by monomials: {0}")]
    NonMonomialPiece(String),

    #[error("enumeration budget exceeded: visited {visited} subset prefixes (budget {budget})")]
    BudgetExceeded { visited: u64, budget: u64 },

    #[error("not a Hilbert polynomial: {0}")]
    NotHilbertPolynomial(String),

    #[error("chain hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("witness violated: {0}")]
    WitnessViolated(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
