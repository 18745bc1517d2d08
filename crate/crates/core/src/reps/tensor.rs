//! Symmetric and exterior squares of matrices.

use crate::linalg::Matrix;

/// Index pairs `(i, j)` with `i <= j` (or `i < j` when `strict`), in
/// lexicographic order.
pub(crate) fn pairs(n: usize, strict: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (if strict { i + 1 } else { i })..n {
            out.push((i, j));
        }
    }
    out
}

/// Action of `m` on the symmetric square, in the monomial basis
/// `e_i e_j` (i <= j).
pub(crate) fn sym2(m: &Matrix) -> Matrix {
    let f = m.field().clone();
    let basis = pairs(m.rows(), false);
    Matrix::from_fn(&f, basis.len(), basis.len(), |r, c| {
        let (a, b) = basis[r];
        let (i, j) = basis[c];
        let t = f.mul(m.get(a, i), m.get(b, j));
        if a == b {
            t
        } else {
            f.add(t, f.mul(m.get(b, i), m.get(a, j)))
        }
    })
}

/// Action of `m` on the exterior square, in the basis `e_i ^ e_j` (i < j).
pub(crate) fn wedge2(m: &Matrix) -> Matrix {
    let f = m.field().clone();
    let basis = pairs(m.rows(), true);
    Matrix::from_fn(&f, basis.len(), basis.len(), |r, c| {
        let (a, b) = basis[r];
        let (i, j) = basis[c];
        f.sub(f.mul(m.get(a, i), m.get(b, j)), f.mul(m.get(b, i), m.get(a, j)))
    })
}
