//! Elements `sigma^a n_w t` of the coset, their characteristic polynomials
//! against the predicted factorizations, and exhaustive family searches.

mod cases;
mod checks;
mod element;
mod predict;
mod report;
mod search;

pub use cases::{
    build_case, check_3d4, check_a2, check_a3_negative, check_d4, check_induced_negative, check_su3, spectrum_of,
    CaseCheck, Expectation,
};
pub use checks::{
    gu1_property_check, induced_equivalence_check, power_bound_check, twisted_torus_parameters, v0_verdict,
    Gu1Report, InducedReport, PowerBoundReport, TwistedTorusParams, V0Report,
};
pub use element::{coset_weyl_ids, realize, ElementSpec, TorusCoords};
pub use predict::{
    m1_m2_condition, predicted_charpoly_3d4, predicted_charpoly_a2, predicted_charpoly_d4,
    predicted_charpoly_d4_epsilon, FactorKind, M1M2Verdict, PredictedCharpoly, PredictedFactor, Sector,
    TwistedBranch,
};
pub use report::{verify_element, Evidence, FactorEvidence, SpectrumReport};
pub use search::{family_search, threads_from_env, Family, SearchHit, SearchOptions, SearchReport, SearchVerdict};

use thiserror::Error;

use crate::galois::GaloisError;
use crate::linalg::LinalgError;
use crate::reps::{CaseLabel, RepError};
use crate::roots::RootError;

#[derive(Debug, Clone, Error)]
pub enum SpectraError {
    #[error("element is for {element}, module is {rep}")]
    CaseMismatch { element: CaseLabel, rep: CaseLabel },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("{case} needs a different characteristic than {p}")]
    BadCharacteristic { case: &'static str, p: u64 },
    #[error("branch mismatch: {0}")]
    BranchMismatch(String),
    #[error("bad element: {0}")]
    BadElement(String),
    #[error("budget exhausted after {} of {} candidates", .0.candidates_tested, .0.candidates_total)]
    BudgetExceeded(Box<SearchReport>),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}
