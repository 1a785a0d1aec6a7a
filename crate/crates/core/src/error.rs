use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    #[error("operands live over different fields (F_{left} vs F_{right})")]
    FieldMismatch { left: u64, right: u64 },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("shift constant lambda must be nonzero")]
    ZeroLambda,

    #[error("length must be positive")]
    ZeroLength,

    #[error("{0} is not a unit of F_p + vF_p")]
    NotAUnit(String),

    #[error("element {0} of F_p has no inverse")]
    ZeroInverse(u64),

    #[error("polynomial {0} has zero constant term")]
    ZeroConstantTerm(String),

    #[error("polynomial {0} is not monic")]
    NotMonic(String),

    #[error("{generator} does not divide {modulus}")]
    NotADivisor { generator: String, modulus: String },

    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("the zero code has no nonzero codewords")]
    ZeroCode,

    #[error("search space of {size} exceeds the cap of {cap}; use a bounded search")]
    CapExceeded { size: String, cap: u128 },

    #[error("submodule quotient is only supported for v and 1-v (got {0})")]
    UnsupportedMultiplier(String),

    #[error("non-bijective Gray parameter: mu = 0 for theta = {0}")]
    NonBijectiveGray(String),

    #[error("operation requires theta = 1-2v or -1+2v (got {0})")]
    UnsupportedTheta(String),

    #[error("codes live in different ambient rings")]
    AmbientMismatch,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for violations of a mathematical precondition (a generator
    /// that does not divide its modulus and the like), as opposed to
    /// malformed or out-of-range input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotADivisor { .. } | Error::NotMonic(_) | Error::ZeroConstantTerm(_)
        )
    }
}
