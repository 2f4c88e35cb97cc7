use thiserror::Error;

use crate::staircase::{Grading, HilbertFunction, Monomial};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: rows must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid grading ({0},{1}): both weights must be positive")]
    InvalidGrading(u32, u32),

    #[error("monomial {0} is not in the ideal")]
    NotInIdeal(Monomial),

    #[error("Hilbert functions differ under grading {grading}: {left} vs {right}")]
    HilbertFunctionMismatch {
        grading: Grading,
        left: HilbertFunction,
        right: HilbertFunction,
    },

    #[error("no monomial ideal has Hilbert function {hf} under grading {grading}")]
    EmptyFiber { hf: HilbertFunction, grading: Grading },

    #[error("fiber of {hf} under grading {grading} has a single ideal; there is no edge to probe")]
    SingletonFiber { hf: HilbertFunction, grading: Grading },

    #[error("extremes of the dominance order disagree with the arrow characterization for {hf} under {grading}")]
    ExtremesMismatch { hf: HilbertFunction, grading: Grading },

    #[error("{0}")]
    Precondition(String),

    #[error("matrix of size {size} exceeds the determinant bound {limit}")]
    DeterminantTooLarge { size: usize, limit: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{count} maximal minors requested, above the guard of {cap}")]
    MinorGuard { count: u128, cap: u128 },

    #[error("variable {0} has no assigned value")]
    MissingVariable(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("direct path of length {length} from generator {index} does not exist")]
    MissingDirectPath { index: usize, length: u32 },

    #[error("direct-path product {monomial} has coefficient {coefficient} in the minor, expected 1")]
    CertificateMismatch { monomial: String, coefficient: String },

    #[error("initial monomials do not form a staircase of a finite-colength ideal")]
    InconsistentInitialIdeal,

    #[error("ground set of {0} elements is too large for bitmask matroids (max 64)")]
    GroundTooLarge(usize),

    #[error("parse error: {0}")]
    Parse(String),
}
