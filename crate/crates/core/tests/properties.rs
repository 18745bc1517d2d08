mod common;

use common::props;
use common::{cofactor_charpoly, root_multiplicity};
use simspec_core::galois::{Field, Polynomial};
use simspec_core::linalg::{charpoly, Matrix};
use simspec_core::spectra::power_bound_check;

const CASES: u32 = 300;

#[test]
fn berkowitz_and_hessenberg_match_cofactor_expansion() {
    props::charpoly_matches_cofactor_expansion(CASES).unwrap();
}

#[test]
fn squarefree_agrees_with_exhaustive_roots() {
    props::squarefree_agrees_with_exhaustive_roots(CASES).unwrap();
}

#[test]
fn charpoly_is_conjugation_invariant() {
    props::conjugation_invariance(CASES).unwrap();
}

#[test]
fn charpoly_is_multiplicative_on_blocks() {
    props::block_multiplicativity(CASES).unwrap();
}

#[test]
fn charpoly_of_subfield_matrix_stays_in_subfield() {
    props::subfield_closure(CASES).unwrap();
}

#[test]
fn block_cycle_eigenvalues_share_multiplicity() {
    props::block_cycle_multiplicity(CASES).unwrap();
}

#[test]
fn simple_spectrum_bounds_power_multiplicities() {
    props::power_bound(CASES).unwrap();
}

#[test]
fn cofactor_oracle_on_a_known_matrix() {
    let f = Field::gf(7).unwrap();
    // [[0,1],[1,0]] has charpoly x^2 - 1.
    let m = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
    assert_eq!(cofactor_charpoly(&m).coeffs(), &[6, 0, 1]);
    assert_eq!(charpoly(&m).unwrap().coeffs(), &[6, 0, 1]);
}

#[test]
fn root_multiplicity_oracle() {
    let f = Field::gf(5).unwrap();
    let p = Polynomial::from_roots(&f, &[2, 2, 2, 3]);
    assert_eq!(root_multiplicity(&p, 2), 3);
    assert_eq!(root_multiplicity(&p, 3), 1);
    assert_eq!(root_multiplicity(&p, 4), 0);
}

#[test]
fn power_bound_on_a_permutation() {
    // The 3-cycle on GF(7)^3 has eigenvalues the cube roots of unity; its
    // cube is the identity, one eigenvalue of multiplicity 3.
    let f = Field::gf(7).unwrap();
    let m = Matrix::from_ints(&f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let r = power_bound_check(&m, 3).unwrap();
    assert!(r.simple && r.holds);
    assert_eq!((r.max_multiplicity, r.distinct_roots), (3, 1));
}
