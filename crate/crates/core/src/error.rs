use thiserror::Error;

/// Errors raised by constructors, parsers and the analysis engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is out of range (must be < 2^31)")]
    PrimeOutOfRange(u64),
    #[error("invalid extension degree {0}")]
    InvalidDegree(u32),
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("field of order {0} exceeds the supported table size")]
    FieldTooLarge(u64),
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("inversion of zero")]
    ZeroInversion,
    #[error("zero has no square class")]
    ZeroInput,
    #[error("element is not invertible (norm zero)")]
    NotInvertible,
    #[error("p-adic precision exhausted")]
    PrecisionExhausted,
    #[error("p = 2 is not supported for p-adic fields")]
    PadicTwo,
    #[error("radicand {0} is a rational square")]
    SquareRadicand(String),
    #[error("identity automorphism rejected (use the identity override)")]
    IdentitySigma,
    #[error("the Dickson constant c must be nonzero")]
    ZeroConstant,
    #[error("the commutative variant needs a commutative coefficient algebra")]
    NonCommutativeCoefficients,
    #[error("c does not equal the critical value built from (r, s, t)")]
    CriticalValueMismatch,
    #[error("exhaustive search over {size} elements exceeds the cap of {cap}")]
    SearchTooLarge { size: u64, cap: u64 },
    #[error("characteristic 2 is not supported by this analysis")]
    CharacteristicTwo,
    #[error("left inverse of (0,1) does not exist")]
    NoLeftInverse,
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
