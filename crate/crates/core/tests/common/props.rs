//! Property suites as plain functions so both the unit-style targets and
//! the acceptance gate can run them.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use simspec_core::galois::{Field, Polynomial};
use simspec_core::linalg::{block_cycle_multiplicity_check, charpoly, charpoly_hessenberg, has_simple_spectrum, Matrix};
use simspec_core::spectra::power_bound_check;

use super::{cofactor_charpoly, matrix_in, root_multiplicity, small_field, square_matrix};

fn invertible_in(f: Field, n: usize) -> impl Strategy<Value = Matrix> {
    let size = f.size();
    prop::collection::vec(0..size, n * n)
        .prop_map(move |r| Matrix::from_rows(&f, n, n, r.iter().map(|&x| f.from_rank(x)).collect()).unwrap())
        .prop_filter("singular", |m| m.inverse().is_ok())
}

fn matrix_and_conjugator() -> impl Strategy<Value = (Matrix, Matrix)> {
    small_field().prop_flat_map(|f| {
        matrix_in(f.clone(), 6).prop_flat_map(move |m| {
            let n = m.rows();
            (Just(m), invertible_in(f.clone(), n))
        })
    })
}

fn two_blocks() -> impl Strategy<Value = (Matrix, Matrix)> {
    small_field().prop_flat_map(|f| (matrix_in(f.clone(), 4), matrix_in(f, 4)))
}

/// Field, subfield order and a matrix over the subfield.
fn tower_matrix() -> impl Strategy<Value = (u64, u32, Matrix)> {
    (prop::sample::select(vec![2u64, 3, 4, 5, 7]), 2u32..=3)
        .prop_flat_map(|(q, k)| matrix_in(Field::gf(q).unwrap(), 5).prop_map(move |m| (q, k, m)))
}

/// Blocks `A_0..A_{l-1}` of size `d` placed so block `i` maps to block
/// `i + 1`, with the full cycle product equal to `c` on the first block.
fn block_cycle() -> impl Strategy<Value = (Matrix, usize, usize, u64)> {
    (prop::sample::select(vec![5u64, 7, 8, 9, 11, 16]), 1usize..=3, 2usize..=4).prop_flat_map(|(q, d, l)| {
        let f = Field::gf(q).unwrap();
        let units = f.size() - 1;
        (
            prop::collection::vec(invertible_in(f.clone(), d), l - 1),
            1..=units,
        )
            .prop_map(move |(blocks, c_rank)| {
                let c = f.from_rank(c_rank);
                let mut prod = Matrix::identity(&f, d);
                for b in &blocks {
                    prod = b.mul(&prod);
                }
                let last = prod.inverse().unwrap().scale(c);
                let n = d * l;
                let mut m = Matrix::zeros(&f, n, n);
                for (i, b) in blocks.iter().chain(std::iter::once(&last)).enumerate() {
                    let (r0, c0) = (((i + 1) % l) * d, i * d);
                    for r in 0..d {
                        for s in 0..d {
                            m.set(r0 + r, c0 + s, b.get(r, s));
                        }
                    }
                }
                (m, d, l, c)
            })
    })
}

fn check<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn charpoly_matches_cofactor_expansion(cases: u32) -> Result<(), String> {
    check(cases, square_matrix(6), |m| {
        let oracle = cofactor_charpoly(&m);
        prop_assert_eq!(charpoly(&m).unwrap(), oracle.clone());
        prop_assert_eq!(charpoly_hessenberg(&m).unwrap(), oracle);
        Ok(())
    })
}

/// A repeated irreducible factor of a degree <= 4 polynomial has degree
/// <= 2, so repeated roots are visible in the quadratic extension.
pub fn squarefree_agrees_with_exhaustive_roots(cases: u32) -> Result<(), String> {
    check(cases, square_matrix(4), |m| {
        let big = m.field().extension(2).unwrap();
        let chi = cofactor_charpoly(&m).embed(&big).unwrap();
        let repeated = big.elements().any(|a| root_multiplicity(&chi, a) >= 2);
        prop_assert_eq!(has_simple_spectrum(&m).unwrap(), !repeated);
        prop_assert_eq!(charpoly(&m).unwrap().is_squarefree().unwrap(), !repeated);
        Ok(())
    })
}

pub fn conjugation_invariance(cases: u32) -> Result<(), String> {
    check(cases, matrix_and_conjugator(), |(m, p)| {
        let conj = p.mul(&m).mul(&p.inverse().unwrap());
        prop_assert_eq!(charpoly(&conj).unwrap(), charpoly(&m).unwrap());
        Ok(())
    })
}

pub fn block_multiplicativity(cases: u32) -> Result<(), String> {
    check(cases, two_blocks(), |(a, b)| {
        let block = Matrix::block_diagonal(&[&a, &b]).unwrap();
        let expected = cofactor_charpoly(&a).mul(&cofactor_charpoly(&b));
        prop_assert_eq!(charpoly(&block).unwrap(), expected);
        Ok(())
    })
}

pub fn subfield_closure(cases: u32) -> Result<(), String> {
    check(cases, tower_matrix(), |(q, k, m)| {
        let big = m.field().extension(k).unwrap();
        let chi = charpoly(&m.embed(&big).unwrap()).unwrap();
        prop_assert!(chi.coefficients_in_subfield(q));
        prop_assert_eq!(chi.restrict_to(m.field()).unwrap(), cofactor_charpoly(&m));
        Ok(())
    })
}

pub fn block_cycle_multiplicity(cases: u32) -> Result<(), String> {
    check(cases, block_cycle(), |(m, d, l, c)| {
        let f = m.field().clone();
        let report = block_cycle_multiplicity_check(d, &m).unwrap();
        prop_assert_eq!(report.cycle_length, l);
        prop_assert_eq!(report.scalar, c);
        prop_assert!(report.charpoly_shape_ok);
        prop_assert_eq!(cofactor_charpoly(&m), Polynomial::binomial(&f, l, c).pow(d as u32));
        if !(l as u64).is_multiple_of(f.characteristic()) {
            prop_assert_eq!(report.multiplicity, d as u32);
        }
        Ok(())
    })
}

pub fn power_bound(cases: u32) -> Result<(), String> {
    check(cases, (square_matrix(6), 1u32..=4), |(m, l)| {
        let r = power_bound_check(&m, l).unwrap();
        prop_assert!(r.holds, "{:?}", r);
        Ok(())
    })
}

pub type Suite = fn(u32) -> Result<(), String>;

/// Name and runner of every suite.
pub const SUITES: &[(&str, Suite)] = &[
    ("charpoly vs cofactor expansion", charpoly_matches_cofactor_expansion),
    ("squarefree vs exhaustive roots", squarefree_agrees_with_exhaustive_roots),
    ("conjugation invariance", conjugation_invariance),
    ("block multiplicativity", block_multiplicativity),
    ("subfield coefficient closure", subfield_closure),
    ("block cycle multiplicity", block_cycle_multiplicity),
    ("power bound", power_bound),
];
