use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("polynomial is not divisible by the given linear form")]
    NonDivisible,
    #[error("divisor is not a nonzero linear form")]
    NotLinear,
    #[error("weight {0:?} is neither dominant nor antidominant")]
    NotCanonical(Vec<i64>),
    #[error("weight {0:?} is not antidominant")]
    NotAntidominant(Vec<i64>),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("simple index {0} out of range")]
    BadIndex(usize),
    #[error("element is not supported on the parabolic quotient")]
    NotInCJ,
    #[error("parabolic basis system is singular")]
    NotFree,
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
