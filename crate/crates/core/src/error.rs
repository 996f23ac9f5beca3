use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ragged input: all points must have the same length")]
    Ragged,
    #[error("empty input")]
    Empty,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear system is underdetermined")]
    Underdetermined,
    #[error("negative dilation factor {0}")]
    NegativeDilate(String),
    #[error("polytope is not a lattice polytope")]
    NotLattice,
    #[error("polytope is not a simplex")]
    NotSimplex,
    #[error("point lies outside the affine hull")]
    NotInAffineHull,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("point is inside but cannot be classified: no facet description for affine dimension {0}")]
    UnclassifiedInside(usize),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("numeric overflow in {0}")]
    Overflow(&'static str),
}
