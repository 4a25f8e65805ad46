use thiserror::Error;

/// Errors raised by the algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime in the supported range 2..2^31")]
    InvalidPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("{q} is not a power of the characteristic {p}")]
    InvalidFrobeniusPower { q: u64, p: u32 },
    #[error("the ideal is the unit ideal; its variety is empty")]
    EmptyVariety,
    #[error("the module is zero")]
    ZeroModule,
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("representative is not a cocycle")]
    NotACocycle,
    #[error("test element must be nonzero in the working ring")]
    InvalidTestElement,
    #[error("invalid suitable-parameter data: {0}")]
    InvalidSuitableData(String),
    #[error("ideal does not have finite colength")]
    NotPrimary,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("candidate reduction is not contained in the ideal")]
    NotASubideal,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("entries are not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("resource limit reached: {0}")]
    ResourceLimit(String),
    #[error("exponent overflow")]
    ExponentOverflow,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
