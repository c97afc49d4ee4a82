use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity {arity} is not supported here (supported: {supported})")]
    ArityOutOfRange {
        arity: usize,
        supported: &'static str,
    },

    #[error("{0} is undefined for the polynomial -inf")]
    EmptyPolynomial(&'static str),

    #[error("polygon has non-integer vertices")]
    NonLattice,

    #[error("input too large: size {size} exceeds bound {bound}")]
    TooLarge { size: usize, bound: usize },

    #[error("degenerate curve: {0}")]
    DegenerateCurve(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
