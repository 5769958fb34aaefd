use thiserror::Error;

use crate::weights::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for {series}")]
    InvalidRank { series: Series, rank: usize },
    #[error("expected {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
    #[error("coordinates violate the {series} lattice: {detail}")]
    Lattice { series: Series, detail: String },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension {dim} exceeds the configured bound {bound}")]
    BoundExceeded { dim: u128, bound: u128 },
    #[error("family mismatch: {0} vs {1}")]
    FamilyMismatch(Series, Series),
    #[error("not a normal form: {0}")]
    NormalForm(String),
    #[error("operation undefined for the top element")]
    TopElement,
    #[error("operation requires finite type")]
    InfiniteType,
    #[error("spinor factor squared has no normal form")]
    SpinSquare,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate form on the chosen subspace")]
    DegenerateForm,
    #[error("invalid matrix: {0}")]
    Matrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
