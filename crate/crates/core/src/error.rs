use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),

    #[error("invalid automorphism: gcd({k}, {order}) != 1")]
    InvalidAutomorphism { k: i64, order: u32 },

    #[error("invalid order N = {order}: {reason}")]
    InvalidOrder { order: u64, reason: String },

    #[error("invalid lens space L({m}, {n}): {reason}")]
    InvalidLens { m: i64, n: i64, reason: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("state space too large: {what} needs {base}^{exp} = {size} states, budget is {budget}")]
    Capacity { what: String, base: u64, exp: u32, size: u128, budget: u64 },

    #[error("Weyl group of {0} too large to enumerate; use the denominator product")]
    WeylGroupTooLarge(&'static str),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that come from refusing work rather than from bad input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::WeylGroupTooLarge(_))
    }
}
