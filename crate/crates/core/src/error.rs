//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by ring, polynomial, Gröbner and ideal operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("modulus {0} out of supported range [2, 2^31]")]
    ModulusOutOfRange(u64),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("term order does not match the basis order")]
    OrderMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("exponent overflow (max per-variable exponent is {max})", max = u16::MAX)]
    ExponentOverflow,
    #[error("polynomial does not lie in the contracted ring (variable `{0}` occurs)")]
    VariableOccurs(String),
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("ideal membership expected but normal form is nonzero ({0})")]
    MembershipFailure(String),
    #[error("exact division failed: {0}")]
    ExactDivisionFailure(String),
    #[error("Gröbner basis computed without cofactor tracking")]
    NoCofactors,
    #[error("S-pair budget of {0} exceeded (raise FROBSPLIT_PAIR_BUDGET)")]
    PairBudgetExceeded(u64),
    #[error("term budget of {0} exceeded while powering (raise FROBSPLIT_POW_TERM_BUDGET)")]
    PowTermBudgetExceeded(u64),
    #[error("instance too large for the brute-force check: {0}")]
    InstanceTooLarge(String),
    #[error("saturation did not stabilize within {0} iterations")]
    SaturationDiverged(u32),
    #[error("matrix size out of range: {0}")]
    SizeOutOfRange(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
