//! Subspaces in reduced row-echelon form, kernels, images and quotient
//! actions. Vectors are columns: a matrix `M` acts as `v -> M v`.

use super::{LinalgError, Matrix};
use crate::galois::Field;

/// Row-reduces `m` in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let f = m.field().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        m.swap_rows(r, p);
        let s = f.inv(m.get(r, c)).expect("nonzero pivot");
        m.scale_row(r, s);
        for i in 0..rows {
            let v = m.get(i, c);
            if i != r && v != 0 {
                m.add_row_multiple(i, r, f.neg(v));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// A subspace of `F^n`, stored as the nonzero rows of an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given vectors (each of length `ambient_dim`).
    pub fn span(field: &Field, ambient_dim: usize, vectors: &[Vec<u64>]) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinalgError::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        let data = vectors.iter().flatten().copied().collect();
        let mut m = Matrix::from_rows(field, vectors.len(), ambient_dim, data)?;
        let pivots = rref(&mut m);
        let basis = m.submatrix(0..pivots.len(), 0..ambient_dim);
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn zero(field: &Field, ambient_dim: usize) -> Self {
        Self::span(field, ambient_dim, &[]).unwrap()
    }

    pub fn full(field: &Field, ambient_dim: usize) -> Self {
        let id = Matrix::identity(field, ambient_dim);
        Subspace {
            ambient_dim,
            basis: id,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u64>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let f = self.field();
        let coords: Vec<u64> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut rest = v.to_vec();
        for (i, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (r, &b) in rest.iter_mut().zip(self.basis.row(i)) {
                if b != 0 {
                    *r = f.sub(*r, f.mul(c, b));
                }
            }
        }
        rest.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        v.len() == self.ambient_dim && self.coordinates(v).is_some()
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        (0..self.dim()).all(|i| self.contains(&m.apply(self.basis.row(i))))
    }

    /// Greedy complement: standard basis vectors in index order that are
    /// independent of the subspace and of those already chosen.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut acc = self.clone();
        for i in 0..self.ambient_dim {
            let mut e = vec![0u64; self.ambient_dim];
            e[i] = 1;
            if !acc.contains(&e) {
                chosen.push(i);
                let mut vs = acc.basis_vectors();
                vs.push(e);
                acc = Subspace::span(self.field(), self.ambient_dim, &vs).unwrap();
            }
        }
        chosen
    }
}

/// Right kernel `{v : M v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let f = m.field().clone();
    let n = m.cols();
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vec<u64>> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(w.get(r, fc));
            }
            v
        })
        .collect();
    Subspace::span(&f, n, &vectors).unwrap()
}

/// Column space of `M`.
pub fn image(m: &Matrix) -> Subspace {
    let cols: Vec<Vec<u64>> = (0..m.cols()).map(|j| m.column(j)).collect();
    Subspace::span(m.field(), m.rows(), &cols).unwrap()
}

/// Modes for [`solve_and_span`].
#[derive(Debug, Clone, Copy)]
pub enum SpanMode<'a> {
    Kernel,
    Image,
    QuotientBasis(&'a Subspace),
}

/// Kernel, image, or the greedy complement of a subspace (returned as a
/// subspace spanned by standard vectors).
pub fn solve_and_span(m: &Matrix, mode: SpanMode<'_>) -> Result<Subspace, LinalgError> {
    match mode {
        SpanMode::Kernel => Ok(kernel(m)),
        SpanMode::Image => Ok(image(m)),
        SpanMode::QuotientBasis(sub) => {
            if sub.ambient_dim() != m.rows() {
                return Err(LinalgError::DimensionMismatch {
                    expected: m.rows(),
                    found: sub.ambient_dim(),
                });
            }
            let n = sub.ambient_dim();
            let vectors: Vec<Vec<u64>> = sub
                .complement_indices()
                .into_iter()
                .map(|i| {
                    let mut e = vec![0u64; n];
                    e[i] = 1;
                    e
                })
                .collect();
            Subspace::span(sub.field(), n, &vectors)
        }
    }
}

/// Matrix of `M` restricted to an invariant subspace, in its echelon basis.
pub fn restrict_to_invariant(m: &Matrix, sub: &Subspace) -> Result<Matrix, LinalgError> {
    let d = sub.dim();
    let mut out = Matrix::zeros(m.field(), d, d);
    for j in 0..d {
        let img = m.apply(sub.basis().row(j));
        let coords = sub.coordinates(&img).ok_or(LinalgError::NotInvariant)?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

/// Change of basis adapted to `sub`: the echelon basis of `sub` followed
/// by the greedy complement. Returns `(P, complement indices)` with the
/// basis vectors as columns of `P`.
pub fn adapted_basis(sub: &Subspace) -> (Matrix, Vec<usize>) {
    let n = sub.ambient_dim();
    let comp = sub.complement_indices();
    let mut p = Matrix::zeros(sub.field(), n, n);
    for j in 0..sub.dim() {
        for i in 0..n {
            p.set(i, j, sub.basis().get(j, i));
        }
    }
    for (k, &i) in comp.iter().enumerate() {
        p.set(i, sub.dim() + k, 1);
    }
    (p, comp)
}

/// Action of `M` on `ambient / sub` in the greedy complement basis.
pub fn induced_quotient_action(m: &Matrix, sub: &Subspace) -> Result<Matrix, LinalgError> {
    if m.rows() != sub.ambient_dim() || !m.is_square() {
        return Err(LinalgError::DimensionMismatch {
            expected: sub.ambient_dim(),
            found: m.rows(),
        });
    }
    if !sub.is_invariant_under(m) {
        return Err(LinalgError::NotInvariant);
    }
    let (p, _) = adapted_basis(sub);
    let pinv = p.inverse()?;
    let conj = pinv.mul(m).mul(&p);
    let d = sub.dim();
    let n = m.rows();
    Ok(conj.submatrix(d..n, d..n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;
    use crate::linalg::charpoly;

    #[test]
    fn kernel_extremes() {
        let f = make_field(5, 1, None).unwrap();
        assert_eq!(kernel(&Matrix::zeros(&f, 3, 3)).dim(), 3);
        assert_eq!(kernel(&Matrix::identity(&f, 3)).dim(), 0);
        let m = Matrix::from_ints(&f, &[&[1, 2, 3], &[2, 4, 2]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert!(m.apply(k.basis().row(0)).iter().all(|&x| x == 0));
        assert_eq!(image(&m).dim(), 2);
    }

    #[test]
    fn quotient_basis_is_first_index_greedy() {
        let f = make_field(3, 1, None).unwrap();
        let sub = Subspace::span(&f, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let id = Matrix::identity(&f, 4);
        let q = solve_and_span(&id, SpanMode::QuotientBasis(&sub)).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(sub.complement_indices(), vec![0, 3]);
        let bad = Subspace::zero(&f, 3);
        assert!(matches!(
            solve_and_span(&id, SpanMode::QuotientBasis(&bad)),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quotient_of_identity_is_identity() {
        let f = make_field(7, 1, None).unwrap();
        let sub = Subspace::span(&f, 3, &[vec![1, 2, 3]]).unwrap();
        let q = induced_quotient_action(&Matrix::identity(&f, 3), &sub).unwrap();
        assert_eq!(q, Matrix::identity(&f, 2));
    }

    #[test]
    fn block_triangular_quotient_is_lower_block() {
        let f = make_field(7, 1, None).unwrap();
        let m = Matrix::from_ints(&f, &[&[1, 2, 5, 6], &[3, 4, 0, 1], &[0, 0, 2, 3], &[0, 0, 4, 5]]);
        let sub = Subspace::span(&f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let q = induced_quotient_action(&m, &sub).unwrap();
        assert_eq!(q, Matrix::from_ints(&f, &[&[2, 3], &[4, 5]]));
        let r = restrict_to_invariant(&m, &sub).unwrap();
        let prod = charpoly(&r).unwrap().mul(&charpoly(&q).unwrap());
        assert_eq!(prod, charpoly(&m).unwrap());
        let not_inv = Subspace::span(&f, 4, &[vec![0, 0, 1, 0]]).unwrap();
        assert_eq!(induced_quotient_action(&m, &not_inv).unwrap_err(), LinalgError::NotInvariant);
    }
}
