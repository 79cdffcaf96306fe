use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} must be an odd prime")]
    NotOddPrime(u64),

    #[error("p = {0} must be an odd integer >= 3")]
    InvalidModulus(u64),

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("p = {p} needs GF(2^{k}); extension degrees above 16 are not supported")]
    FieldTooLarge { p: u64, k: u32 },

    #[error("weights must be nonzero mod p")]
    ZeroWeight,

    #[error("expected {expected} weights (one per x/y pair), got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("r and s cannot both be zero")]
    EmptyRepresentation,

    #[error("variable count mismatch: {0} vs {1}")]
    VariableCount(usize, usize),

    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("malformed exponent in `{0}`")]
    MalformedExponent(String),

    #[error("exponent overflow (exponents are limited to 16 bits)")]
    ExponentOverflow,

    #[error("monomial {0} is not rho-invariant")]
    NotRhoInvariant(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("quotient ring is not finite-dimensional: no pure power of variable {0} among the lead terms")]
    InfiniteQuotient(usize),

    #[error("resource cap exceeded: basis grew beyond {0} elements")]
    ResourceCap(usize),
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap(_))
    }
}
