use crate::rational::Rational;
use thiserror::Error;

/// Failures raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate abscissa {0} in interpolation data (malformed spectrum)")]
    DuplicateAbscissa(Rational),

    #[error("not unitarizable: ladder coefficient t_{index} = {value} is not positive")]
    NotUnitarizable { index: usize, value: Rational },

    #[error("label does not close: t_{dim} = {value}, expected 0")]
    OpenLabel { dim: usize, value: Rational },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not diagonal: {0}")]
    NotDiagonal(String),

    #[error("invalid mode index {index} for a {modes}-mode space")]
    InvalidMode { index: usize, modes: usize },

    #[error("not a sector operator: state {state} is mapped outside the sector")]
    NotSectorOperator { state: usize },

    #[error("Pi is not a constant of motion")]
    NotConstantOfMotion,

    #[error("composition is not diagonal on the sector")]
    CompositionNotDiagonal,

    #[error("commutator is not a function of Pi0: conflicting values at Pi0 = {0}")]
    NotAFunctionOfPi0(Rational),

    #[error("invalid (k, l) grid point: {0}")]
    InvalidLabel(String),

    #[error("nonpositive normalizer L(L+1) - K = {0}")]
    NonpositiveNormalizer(Rational),

    #[error("operator is not closed on the basis: degree {0} leaks past the top state")]
    NotClosed(usize),

    #[error("sector is empty")]
    EmptySector,

    #[error("degree mismatch: expected {expected}, derived {derived:?}")]
    DegreeMismatch { expected: usize, derived: Option<usize> },

    #[error("unknown catalog entry '{0}'")]
    UnknownEntry(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
