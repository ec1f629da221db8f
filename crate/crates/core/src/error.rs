use thiserror::Error;

/// Failures while describing or building a ring, or while operating on its elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("modulus must be >= 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("characteristic p = {0} is not prime")]
    NotPrime(u64),
    #[error("polynomial modulus must have degree >= 1")]
    ConstantModulus,
    #[error("polynomial modulus must be monic, leading coefficient is {0}")]
    NotMonic(u64),
    #[error("coefficient {value} is out of range for p = {p}")]
    CoefficientOutOfRange { value: u64, p: u64 },
    #[error("product ring needs at least one factor")]
    EmptyProduct,
    #[error("quotient ideal must be proper, but its generators produce the whole ring")]
    ImproperQuotient,
    #[error("ring would have {size} elements, above the cap of {cap}")]
    TooLarge { size: u128, cap: usize },
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("element {text} is not valid in {ring}: {reason}")]
    BadElement {
        text: String,
        ring: String,
        reason: String,
    },
}

/// A syntax error in ring-spec, element, or ideal text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{what} needs {needed} evaluations, above the cap of {cap}")]
    ResourceLimit {
        what: String,
        needed: u128,
        cap: u128,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("decision procedures require a proper ideal")]
    ImproperIdeal,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(HypothesisFailure),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("trace inconsistency: {0}")]
    TraceInconsistency(String),
}

/// Which hypothesis of a corollary check did not hold, with the elements
/// that show it (in canonical text).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisFailure {
    #[error("ideal is not 3-absorbing, witness {witness:?}")]
    NotThreeAbsorbing { witness: Vec<String> },
    #[error("radical is not prime, witness pair {pair:?}")]
    RadicalNotPrime { pair: Vec<String> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
