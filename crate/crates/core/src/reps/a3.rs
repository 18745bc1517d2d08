//! `SL_4`-modules with the transpose-inverse automorphism: the
//! 20-dimensional module of highest weight `2 omega_2` and the induced
//! module `Sym^2(V_4) + Sym^2(V_4^*)`.

use super::explicit::{sl_torus_exponents, sl_weight, CaseLabel, ExplicitRep, WeylElement};
use super::tensor::{pairs, sym2, wedge2};
use super::RepError;
use crate::galois::Field;
use crate::linalg::{kernel, restrict_to_invariant, Matrix, Subspace};

/// The two Weyl representatives `diag(J, 1, 1)` and `diag(J, J)` with
/// `J = [[0, 1], [-1, 0]]`, after the identity.
pub fn a3_weyl_matrices(field: &Field) -> Vec<(&'static str, Matrix)> {
    vec![
        ("e", Matrix::identity(field, 4)),
        (
            "w1",
            Matrix::from_ints(field, &[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
        ),
        (
            "w2",
            Matrix::from_ints(field, &[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]),
        ),
    ]
}

/// Root elements `1 + E_{i,i+1}` and `1 + E_{i+1,i}`.
fn root_elements(f: &Field) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..3 {
        for (a, b) in [(i, i + 1), (i + 1, i)] {
            let mut g = Matrix::identity(f, 4);
            g.set(a, b, 1);
            out.push(g);
        }
    }
    out
}

/// Gram matrix of `(u, v) -> u ^ v` on the exterior square of `F^4`.
fn wedge_pairing(f: &Field) -> Matrix {
    let basis = pairs(4, true);
    Matrix::from_fn(f, 6, 6, |r, c| {
        let (a, b) = basis[r];
        let (i, j) = basis[c];
        let perm = [a, b, i, j];
        let mut seen = [false; 4];
        for &x in &perm {
            if seen[x] {
                return 0;
            }
            seen[x] = true;
        }
        let mut sign = 1i64;
        for x in 0..4 {
            for y in x + 1..4 {
                if perm[x] > perm[y] {
                    sign = -sign;
                }
            }
        }
        f.from_int(sign)
    })
}

fn check_char(field: &Field, case: CaseLabel, bad: &[u64]) -> Result<(), RepError> {
    let p = field.characteristic();
    if bad.contains(&p) {
        return Err(RepError::BadCharacteristic { case: case.as_str(), p });
    }
    Ok(())
}

fn wedge_eps() -> Vec<Vec<i64>> {
    pairs(4, true)
        .into_iter()
        .map(|(i, j)| {
            let mut c = vec![0i64; 4];
            c[i] += 1;
            c[j] += 1;
            c
        })
        .collect()
}

/// The `2 omega_2` module, cut out of `Sym^2(wedge^2 F^4)` as the
/// orthogonal complement of the invariant line. Requires characteristic
/// other than 2 and 3.
pub fn build_a3_two_omega2(field: &Field) -> Result<ExplicitRep, RepError> {
    check_char(field, CaseLabel::A3TwoOmega2, &[2, 3])?;
    let f = field.clone();
    let act = |g: &Matrix| sym2(&wedge2(g));
    let n = 21;

    let mut rows = Vec::new();
    for g in root_elements(&f) {
        let m = act(&g);
        for i in 0..n {
            for j in 0..n {
                let v = m.get(i, j);
                rows.push(if i == j { f.sub(v, 1) } else { v });
            }
        }
    }
    let stacked = Matrix::from_rows(&f, rows.len() / n, n, rows)?;
    let fixed = kernel(&stacked);
    if fixed.dim() != 1 {
        return Err(RepError::InvariantNotFound(format!("fixed space has dimension {}", fixed.dim())));
    }
    let v0 = fixed.basis().row(0).to_vec();

    let b = wedge_pairing(&f);
    let mono = pairs(6, false);
    let gram = Matrix::from_fn(&f, n, n, |r, c| {
        let (i, j) = mono[r];
        let (k, l) = mono[c];
        f.add(f.mul(b.get(i, k), b.get(j, l)), f.mul(b.get(i, l), b.get(j, k)))
    });
    let pairing_row = Matrix::from_rows(&f, 1, n, gram.transpose().apply(&v0))?;
    let v = kernel(&pairing_row);
    if v.dim() != 20 || v.contains(&v0) {
        return Err(RepError::InvariantNotFound("invariant line is isotropic".into()));
    }

    let sigma = restrict_to_invariant(&sym2(&b), &v)?;
    let weyl = a3_weyl_matrices(&f)
        .into_iter()
        .map(|(id, g)| {
            Ok(WeylElement {
                id: id.to_string(),
                matrix: restrict_to_invariant(&act(&g), &v)?,
            })
        })
        .collect::<Result<Vec<_>, RepError>>()?;

    let weps = wedge_eps();
    let mono_eps: Vec<Vec<i64>> = mono
        .iter()
        .map(|&(i, j)| weps[i].iter().zip(&weps[j]).map(|(a, b)| a + b).collect())
        .collect();
    let labels_w: Vec<String> = pairs(4, true).iter().map(|(i, j)| format!("{}{}", i + 1, j + 1)).collect();
    let mut eps = Vec::new();
    let mut labels = Vec::new();
    for row in v.basis_vectors() {
        let support: Vec<usize> = (0..n).filter(|&k| row[k] != 0).collect();
        let c = &mono_eps[support[0]];
        if support.iter().any(|&k| mono_eps[k] != *c) {
            return Err(RepError::InvariantNotFound("complement basis is not a weight basis".into()));
        }
        eps.push(c.clone());
        let (i, j) = mono[support[0]];
        labels.push(format!("e{}.e{}", labels_w[i], labels_w[j]));
    }
    Ok(ExplicitRep {
        label: CaseLabel::A3TwoOmega2,
        field: f,
        sigma_order: 2,
        sigma,
        weyl,
        characters: eps.iter().map(|c| sl_torus_exponents(c)).collect(),
        weights: eps.iter().map(|c| sl_weight(c)).collect(),
        basis_labels: labels,
    })
}

/// `Sym^2(V_4) + Sym^2(V_4^*)` with `g` acting as `Sym^2(g) + Sym^2(g^{-T})`
/// and `sigma` swapping the two blocks. Requires odd characteristic.
pub fn build_a3_induced_pair(field: &Field) -> Result<ExplicitRep, RepError> {
    check_char(field, CaseLabel::A3Induced, &[2])?;
    let f = field.clone();
    let act = |g: &Matrix| -> Result<Matrix, RepError> {
        let dual = g.inverse()?.transpose();
        Ok(Matrix::block_diagonal(&[&sym2(g), &sym2(&dual)])?)
    };
    let mut sigma = Matrix::zeros(&f, 20, 20);
    for i in 0..10 {
        sigma.set(i, i + 10, 1);
        sigma.set(i + 10, i, 1);
    }
    let weyl = a3_weyl_matrices(&f)
        .into_iter()
        .map(|(id, g)| {
            Ok(WeylElement {
                id: id.to_string(),
                matrix: act(&g)?,
            })
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    let sym_eps: Vec<Vec<i64>> = pairs(4, false)
        .into_iter()
        .map(|(i, j)| {
            let mut c = vec![0i64; 4];
            c[i] += 1;
            c[j] += 1;
            c
        })
        .collect();
    let mut eps = sym_eps.clone();
    eps.extend(sym_eps.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
    let mut labels: Vec<String> = pairs(4, false).iter().map(|(i, j)| format!("e{}e{}", i + 1, j + 1)).collect();
    labels.extend(pairs(4, false).iter().map(|(i, j)| format!("f{}f{}", i + 1, j + 1)));
    Ok(ExplicitRep {
        label: CaseLabel::A3Induced,
        field: f,
        sigma_order: 2,
        sigma,
        weyl,
        characters: eps.iter().map(|c| sl_torus_exponents(c)).collect(),
        weights: eps.iter().map(|c| sl_weight(c)).collect(),
        basis_labels: labels,
    })
}

/// Block size of the induced module.
pub const INDUCED_BLOCK: usize = 10;

/// `Subspace` spanned by one block of the induced module.
pub fn induced_block(field: &Field, which: usize) -> Subspace {
    let vs: Vec<Vec<u64>> = (0..INDUCED_BLOCK)
        .map(|i| {
            let mut v = vec![0; 2 * INDUCED_BLOCK];
            v[which * INDUCED_BLOCK + i] = 1;
            v
        })
        .collect();
    Subspace::span(field, 2 * INDUCED_BLOCK, &vs).expect("block vectors have the right length")
}
