//! Dense linear algebra over finite fields.

mod charpoly;
mod cycle;
mod matrix;
mod subspace;

pub use charpoly::{charpoly, charpoly_hessenberg, has_simple_spectrum};
pub(crate) use charpoly::hessenberg_charpoly_in_place;
pub use cycle::{block_cycle_multiplicity_check, BlockCycleReport};
pub use matrix::Matrix;
pub use subspace::{
    adapted_basis, image, induced_quotient_action, kernel, rank, restrict_to_invariant, rref,
    solve_and_span, SpanMode, Subspace,
};

use thiserror::Error;

use crate::galois::GaloisError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, not square")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrices over different fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not invariant")]
    NotInvariant,
    #[error("not a block cycle: {0}")]
    NotACycle(String),
    #[error("no blocks given")]
    Empty,
    #[error("malformed encoding: {0}")]
    BadEncoding(String),
    #[error(transparent)]
    Field(#[from] GaloisError),
}
