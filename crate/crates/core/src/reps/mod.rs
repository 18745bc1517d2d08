//! Explicit modules for the groups `<G, sigma>` with `sigma` a graph
//! automorphism, and membership tests for the finite groups.

mod a2;
mod a3;
mod d4;
mod explicit;
mod membership;
pub(crate) mod tensor;

pub use a2::{a2_conjugation, a2_weyl_matrix, build_a2_adjoint};
pub use a3::{a3_weyl_matrices, build_a3_induced_pair, build_a3_two_omega2, induced_block, INDUCED_BLOCK};
pub use d4::{
    build_d4_char2, root_values_from_epsilon, ChevalleyAlgebra, D4Construction, JacobiReport, ZeroWeightAction,
};
pub use explicit::{CaseLabel, ExplicitRep, LedgerEntry, WeylElement};
pub use membership::{
    membership_3d4, membership_d4, membership_sl3, membership_su3, IdentityCheck, MembershipReport,
};

use thiserror::Error;

use crate::galois::GaloisError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{case} needs a different characteristic than {p}")]
    BadCharacteristic { case: &'static str, p: u64 },
    #[error("invariant subspace not found: {0}")]
    InvariantNotFound(String),
    #[error("Lie center has dimension {0}, expected 2")]
    CenterDimensionUnexpected(usize),
    #[error("unknown case {0}")]
    UnknownCase(String),
    #[error("unknown Weyl representative {0}")]
    UnknownWeyl(String),
    #[error("bad torus coordinates: {0}")]
    BadTorus(String),
    #[error("twist unavailable: {0}")]
    NoTwist(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}
