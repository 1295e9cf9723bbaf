use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division requires a nonzero monic divisor")]
    UnsupportedDivision,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("polynomial vanishes at an interval endpoint; perturb the endpoint")]
    RootAtEndpoint,
    #[error("polynomial has {0} distinct real roots above 1, expected at most one")]
    MultipleRootsAbove1(usize),
    #[error("base is not in the open interval (1, 2)")]
    BaseOutOfRange,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("no finite or periodic expansion found within {0} steps")]
    StepLimit(usize),
    #[error("root moduli could not be certified at {0} bits of precision")]
    Indeterminate(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed family id: {0}")]
    MalformedFamily(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
