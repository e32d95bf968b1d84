use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input (non-coprime where coprime is required,
    /// swapped generators, values outside the supported 64-bit-safe range, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// There are infinitely many d-distinct (s,t)-cores, so no maximum exists.
    #[error("infinite family: gcd(s,t) > d (gcd({s}, {t}) = {gcd} > {d})")]
    InfiniteFamily { s: i64, t: i64, gcd: i64, d: i64 },

    /// Parameters outside the scope of the closed forms (s = t, or s/gcd < 2).
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
