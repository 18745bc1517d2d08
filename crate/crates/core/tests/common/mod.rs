#![allow(dead_code)]

use proptest::prelude::*;
use simspec_core::galois::{Field, Polynomial};
use simspec_core::linalg::Matrix;

pub mod props;

/// `det(xI - M)` by Laplace expansion along the first row.
pub fn cofactor_charpoly(m: &Matrix) -> Polynomial {
    let f = m.field();
    let n = m.rows();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Polynomial::new(f, vec![f.neg(m.get(i, j))]);
                    if i == j {
                        c.add(&Polynomial::x(f))
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let rows: Vec<usize> = (0..n).collect();
    laplace(f, &entries, &rows, &(0..n).collect::<Vec<_>>())
}

fn laplace(f: &Field, a: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::one(f);
    }
    let r = rows[0];
    let mut acc = Polynomial::zero(f);
    for (k, &c) in cols.iter().enumerate() {
        if a[r][c].is_zero() {
            continue;
        }
        let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a[r][c].mul(&laplace(f, a, &rows[1..], &minor_cols));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Multiplicity of `a` as a root, by repeated synthetic division.
pub fn root_multiplicity(p: &Polynomial, a: u64) -> u32 {
    let f = p.field();
    let mut c: Vec<u64> = p.coeffs().to_vec();
    let mut m = 0;
    while c.len() > 1 {
        // divide by (x - a): Horner from the top
        let mut q = vec![0u64; c.len() - 1];
        let mut carry = 0u64;
        for i in (0..c.len()).rev() {
            let v = f.add(c[i], f.mul(carry, a));
            if i == 0 {
                if v != 0 {
                    return m;
                }
            } else {
                q[i - 1] = v;
            }
            carry = v;
        }
        c = q;
        m += 1;
    }
    m
}

/// Prime powers up to 49 with their fields built once.
pub const SMALL_Q: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49];

pub fn small_field() -> impl Strategy<Value = Field> {
    prop::sample::select(SMALL_Q).prop_map(|q| Field::gf(q).unwrap())
}

/// A square matrix of dimension `1..=max_dim` over `f`.
pub fn matrix_in(f: Field, max_dim: usize) -> impl Strategy<Value = Matrix> {
    let size = f.size();
    (1..=max_dim).prop_flat_map(move |n| {
        let f = f.clone();
        prop::collection::vec(0..size, n * n).prop_map(move |ranks| {
            let data = ranks.iter().map(|&r| f.from_rank(r)).collect();
            Matrix::from_rows(&f, n, n, data).unwrap()
        })
    })
}

pub fn square_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    small_field().prop_flat_map(move |f| matrix_in(f, max_dim))
}
