use alloc::boxed::Box;
use alloc::string::String;

use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational {0:?} (expected \"p\" or \"p/q\")")]
    MalformedRational(String),
    #[error("series has a zero constant term and is not invertible")]
    NonUnitSeries,
    #[error("series offsets {} and {} do not differ by an integer", .0.0, .0.1)]
    IncommensurateOffsets(Box<(ExactScalar, ExactScalar)>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("Gram matrix is degenerate at level {level} (rank {rank} < {dim})")]
    DegenerateGram { level: usize, rank: usize, dim: usize },
    #[error("unknown constituent with lowest exponent {0}")]
    UnknownConstituent(ExactScalar),
    #[error("not decomposable in this family: coefficient {coefficient} at exponent {exponent}")]
    NotDecomposable { exponent: Box<ExactScalar>, coefficient: Box<ExactScalar> },
    #[error("no simple Lie algebra of type {series} with rank {rank}")]
    IllegalLieAlgebra { series: String, rank: u32 },
}
