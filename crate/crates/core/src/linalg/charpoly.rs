//! Characteristic polynomials.
//!
//! [`charpoly`] uses Berkowitz's division-free recursion. The Hessenberg
//! route in [`charpoly_hessenberg`] divides only by pivots and is several
//! times faster at the sizes the searches use; the two are cross-checked
//! in the tests.

use super::{LinalgError, Matrix};
use crate::galois::{Field, Polynomial};

fn require_square(m: &Matrix) -> Result<(), LinalgError> {
    if m.is_square() {
        Ok(())
    } else {
        Err(LinalgError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// `det(xI - M)`, monic of degree `dim M`.
pub fn charpoly(m: &Matrix) -> Result<Polynomial, LinalgError> {
    require_square(m)?;
    let f = m.field();
    let n = m.rows();
    // coefficients high degree first
    let mut p: Vec<u64> = vec![1];
    for k in 0..n {
        let a = m.get(k, k);
        let row: Vec<u64> = (0..k).map(|j| m.get(k, j)).collect();
        let mut col: Vec<u64> = (0..k).map(|i| m.get(i, k)).collect();
        // toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{k-1} C
        let mut t = Vec::with_capacity(k + 2);
        t.push(1);
        t.push(f.neg(a));
        for _ in 0..k {
            let rc = dot(f, &row, &col);
            t.push(f.neg(rc));
            col = (0..k)
                .map(|i| (0..k).fold(0, |acc, j| f.add(acc, f.mul(m.get(i, j), col[j]))))
                .collect();
        }
        let mut next = vec![0u64; k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = 0;
            for (j, &pj) in p.iter().enumerate().take(i + 1) {
                if pj != 0 {
                    acc = f.add(acc, f.mul(t[i - j], pj));
                }
            }
            *slot = acc;
        }
        p = next;
    }
    p.reverse();
    Ok(Polynomial::new(f, p))
}

fn dot(f: &Field, a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Characteristic polynomial through reduction to upper Hessenberg form.
pub fn charpoly_hessenberg(m: &Matrix) -> Result<Polynomial, LinalgError> {
    require_square(m)?;
    let mut work = m.data().to_vec();
    let coeffs = hessenberg_charpoly_in_place(m.field(), m.rows(), &mut work);
    Ok(Polynomial::new(m.field(), coeffs))
}

/// Hessenberg charpoly on a raw row-major buffer, which is overwritten.
/// Returns coefficients low degree first.
pub(crate) fn hessenberg_charpoly_in_place(f: &Field, n: usize, a: &mut [u64]) -> Vec<u64> {
    let at = |i: usize, j: usize| i * n + j;
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&r| a[at(r, c)] != 0) else {
            continue;
        };
        if piv != c + 1 {
            // similarity by a transposition: swap rows and columns
            for j in 0..n {
                a.swap(at(piv, j), at(c + 1, j));
            }
            for i in 0..n {
                a.swap(at(i, piv), at(i, c + 1));
            }
        }
        let inv = f.inv(a[at(c + 1, c)]).expect("nonzero pivot");
        for r in c + 2..n {
            let v = a[at(r, c)];
            if v == 0 {
                continue;
            }
            let m = f.mul(v, inv);
            let neg_m = f.neg(m);
            // row r -= m * row (c+1)
            for j in c..n {
                let s = a[at(c + 1, j)];
                if s != 0 {
                    a[at(r, j)] = f.add(a[at(r, j)], f.mul(neg_m, s));
                }
            }
            // column (c+1) += m * column r
            for i in 0..n {
                let s = a[at(i, r)];
                if s != 0 {
                    a[at(i, c + 1)] = f.add(a[at(i, c + 1)], f.mul(m, s));
                }
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(a[at(k, k)], c));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, a[at(i + 1, i)]);
            if prod == 0 {
                break;
            }
            let coef = f.mul(a[at(i, k)], prod);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// True iff the characteristic polynomial is squarefree.
pub fn has_simple_spectrum(m: &Matrix) -> Result<bool, LinalgError> {
    Ok(charpoly_hessenberg(m)?.is_squarefree()?)
}
