use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse ring spec {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("Z{0}: modulus must be at least 2")]
    ModulusTooSmall(u32),

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("extension degree must be at least 1")]
    DegreeTooSmall,

    #[error("polynomial {poly:?} over Z{p} must be monic of degree {k}")]
    NotMonic { p: u32, k: u32, poly: Vec<u32> },

    #[error("polynomial {poly:?} is reducible over Z{p}")]
    ReduciblePolynomial { p: u32, poly: Vec<u32> },

    #[error("a product needs at least 2 factors, got {0}")]
    TooFewFactors(usize),

    #[error("matrix dimension must be at least 1")]
    MatrixDimTooSmall,

    #[error("matrix rings are only built over Z_n, got {0}")]
    MatrixBaseNotZn(String),

    #[error("ring order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: u64, limit: u64 },

    #[error("{0} is not commutative")]
    Noncommutative(String),

    #[error("{0} is not a matrix ring")]
    NotMatrixRing(String),

    #[error("exact search too large: order {order} exceeds cap {cap}")]
    SearchTooLarge { order: usize, cap: usize },

    #[error("exact search gave up after {0} nodes")]
    SearchBudgetExhausted(u64),

    #[error("config line {line}: {reason}")]
    Config { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
