use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a decision problem needs at least one alternative")]
    EmptyProblem,

    #[error("alternative id {id} is out of range for n = {n}")]
    IdOutOfRange { id: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: alternative id {id} is out of range for n = {n}")]
    ParseIdOutOfRange { line: usize, id: usize, n: usize },

    #[error("missing `n <count>` header")]
    MissingHeader,

    #[error("problem too large: n = {n} exceeds the enumeration ceiling of {ceiling}")]
    TooLarge { n: usize, ceiling: usize },

    #[error("set {members:?} is not w-stable")]
    NotWStable { members: Vec<usize> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
