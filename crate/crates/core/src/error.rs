use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unlucky specialization: {0}")]
    UnluckySpecialization(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("input not in the D-stable subspace (symmetric polynomials)")]
    NotSymmetric,
    #[error("non-generic parameters: {0}")]
    NonGeneric(String),
    #[error("rank {0} too large for Weyl group enumeration (limit 6)")]
    RankTooLarge(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
