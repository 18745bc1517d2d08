//! The adjoint module of `SL_3` on trace-zero matrices.

use super::explicit::{sl_torus_exponents, sl_weight, CaseLabel, ExplicitRep, WeylElement};
use super::RepError;
use crate::galois::Field;
use crate::linalg::Matrix;

/// Off-diagonal matrix units in basis order; the last two basis vectors
/// are `E11 - E22` and `E22 - E33`.
const UNITS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

/// The Weyl representative used throughout: swaps `e_1, e_2`, negates `e_3`.
pub fn a2_weyl_matrix(field: &Field) -> Matrix {
    Matrix::from_ints(field, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]])
}

fn to_matrix(f: &Field, v: &[u64]) -> Matrix {
    let mut m = Matrix::zeros(f, 3, 3);
    for (k, &(i, j)) in UNITS.iter().enumerate() {
        m.set(i, j, v[k]);
    }
    m.set(0, 0, v[6]);
    m.set(1, 1, f.sub(v[7], v[6]));
    m.set(2, 2, f.neg(v[7]));
    m
}

fn to_coords(f: &Field, m: &Matrix) -> Vec<u64> {
    let mut v: Vec<u64> = UNITS.iter().map(|&(i, j)| m.get(i, j)).collect();
    v.push(m.get(0, 0));
    v.push(f.neg(m.get(2, 2)));
    v
}

fn basis_vector(k: usize) -> Vec<u64> {
    let mut v = vec![0; 8];
    v[k] = 1;
    v
}

/// Matrix of a linear map on `sl_3` given on 3x3 matrices.
fn linear_map(f: &Field, map: impl Fn(&Matrix) -> Matrix) -> Matrix {
    let mut out = Matrix::zeros(f, 8, 8);
    for k in 0..8 {
        let image = to_coords(f, &map(&to_matrix(f, &basis_vector(k))));
        for (i, c) in image.into_iter().enumerate() {
            out.set(i, k, c);
        }
    }
    out
}

/// `l -> g l g^{-1}` on trace-zero matrices.
pub fn a2_conjugation(g: &Matrix) -> Result<Matrix, RepError> {
    let ginv = g.inverse()?;
    Ok(linear_map(g.field(), |l| g.mul(l).mul(&ginv)))
}

/// Adjoint module of `SL_3` over a field of characteristic other than 2
/// and 3. The torus coordinates are `(t_1, t_2)` for
/// `diag(t_1, t_2, (t_1 t_2)^{-1})` and `sigma` is `l -> -l^T`.
pub fn build_a2_adjoint(field: &Field) -> Result<ExplicitRep, RepError> {
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(RepError::BadCharacteristic {
            case: CaseLabel::A2Adjoint.as_str(),
            p,
        });
    }
    let f = field.clone();
    let sigma = linear_map(&f, |l| l.transpose().scale(f.neg(1)));
    let w = a2_conjugation(&a2_weyl_matrix(&f))?;
    let mut eps: Vec<Vec<i64>> = UNITS
        .iter()
        .map(|&(i, j)| {
            let mut c = vec![0i64; 3];
            c[i] += 1;
            c[j] -= 1;
            c
        })
        .collect();
    eps.push(vec![0; 3]);
    eps.push(vec![0; 3]);
    let mut labels: Vec<String> = UNITS.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    labels.push("E11-E22".into());
    labels.push("E22-E33".into());
    Ok(ExplicitRep {
        label: CaseLabel::A2Adjoint,
        field: f.clone(),
        sigma_order: 2,
        sigma,
        weyl: vec![
            WeylElement {
                id: "e".into(),
                matrix: Matrix::identity(&f, 8),
            },
            WeylElement { id: "w".into(), matrix: w },
        ],
        characters: eps.iter().map(|c| sl_torus_exponents(c)).collect(),
        weights: eps.iter().map(|c| sl_weight(c)).collect(),
        basis_labels: labels,
    })
}
