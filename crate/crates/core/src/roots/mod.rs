//! Root systems, weights, Weyl orbits, characteristic-zero weight
//! multiplicities, diagram automorphisms and the catalog of modules whose
//! zero weight is the only repeated weight.

mod automorphism;
mod freudenthal;
mod system;
mod table1;

pub use automorphism::{diagram_automorphism, DiagramAutomorphism};
pub use freudenthal::{dominant_character, freudenthal_multiplicity, DominantCharacter};
pub use system::{build_root_system, weyl_orbit, Basis, RootSystem, TypeLetter, Weight};
pub use table1::{
    table1_rows, theorem_case_filter, verify_table1_char0, CharAtom, FilterVerdict, RowCheck,
    FilteredRow, Linear, RankCondition, RowStatus, Table1Report, Table1Row, TheoremCase,
    VerifyOptions, MultiplicityExpr,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("no root system of type {0}")]
    InvalidType(String),
    #[error("weight has {found} coordinates, rank is {expected}")]
    WrongRank { expected: usize, found: usize },
    #[error("no epsilon realization for {0}")]
    NoEpsilonCoordinates(String),
    #[error("vector is not in the span of the roots")]
    NotInRootSpan,
    #[error("highest weight is not dominant integral")]
    NotDominant,
    #[error("weight is not integral")]
    NotIntegral,
    #[error("time budget exceeded")]
    BudgetExceeded,
    #[error("{name} has no diagram automorphism of order {order}")]
    NoSuchAutomorphism { name: String, order: u32 },
}
