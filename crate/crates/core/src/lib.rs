//! Finite-field arithmetic, exact linear algebra, root systems and
//! explicit representations used to search for elements with simple
//! spectrum in twisted finite groups of Lie type.

pub mod galois;
pub mod linalg;
pub mod roots;
pub mod reps;
pub mod spectra;
