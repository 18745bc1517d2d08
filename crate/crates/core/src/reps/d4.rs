//! The Chevalley Lie algebra of type `D_4` over GF(2) and its
//! 26-dimensional quotient by the center, with triality and the Weyl group
//! acting by basis permutations.
//!
//! Basis order of the algebra: `X_alpha` for the 12 positive roots (in the
//! root system's order), then for their negatives, then `H_1..H_4`.
//! In characteristic 2 every structure-constant sign disappears.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::explicit::{CaseLabel, ExplicitRep, WeylElement};
use super::RepError;
use crate::galois::{make_field, Field, Polynomial};
use crate::linalg::{
    adapted_basis, charpoly, induced_quotient_action, kernel, restrict_to_invariant, Matrix, Subspace,
};
use crate::roots::{build_root_system, diagram_automorphism, RootSystem, TypeLetter};

const N_ROOTS: usize = 24;
const DIM: usize = 28;

/// The 28-dimensional algebra with its bracket table over GF(2).
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    system: RootSystem,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// `table[i][j]` is `[b_i, b_j]` as a 0/1 vector.
    table: Vec<Vec<Vec<u8>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub failures: usize,
    pub alternating: bool,
}

impl ChevalleyAlgebra {
    pub fn new() -> Self {
        let system = build_root_system(TypeLetter::D, 4).expect("D4 exists");
        let mut roots: Vec<Vec<i64>> = system.positive_roots().to_vec();
        roots.extend(system.positive_roots().iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut alg = ChevalleyAlgebra {
            system,
            roots,
            index,
            table: Vec::new(),
        };
        alg.table = (0..DIM)
            .map(|i| (0..DIM).map(|j| alg.bracket_basis_raw(i, j)).collect())
            .collect();
        alg
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn dim(&self) -> usize {
        DIM
    }

    /// Roots indexing the first 24 basis vectors.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn basis_label(&self, i: usize) -> String {
        if i < N_ROOTS {
            let r: Vec<String> = self.roots[i].iter().map(|c| c.to_string()).collect();
            format!("X[{}]", r.join(","))
        } else {
            format!("H{}", i - N_ROOTS + 1)
        }
    }

    /// `<alpha, alpha_k^vee>`.
    fn pairing(&self, root: &[i64], k: usize) -> i64 {
        let c = self.system.cartan();
        root.iter().enumerate().map(|(j, &a)| a * c[j][k]).sum()
    }

    fn bracket_basis_raw(&self, i: usize, j: usize) -> Vec<u8> {
        let mut out = vec![0u8; DIM];
        match (i < N_ROOTS, j < N_ROOTS) {
            (true, true) => {
                let sum: Vec<i64> = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a + b).collect();
                if sum.iter().all(|&c| c == 0) {
                    for (k, &c) in self.roots[i].iter().enumerate() {
                        out[N_ROOTS + k] = c.rem_euclid(2) as u8;
                    }
                } else if let Some(&k) = self.index.get(&sum) {
                    out[k] = 1;
                }
            }
            (true, false) | (false, true) => {
                let (x, h) = if i < N_ROOTS { (i, j) } else { (j, i) };
                if self.pairing(&self.roots[x], h - N_ROOTS).rem_euclid(2) == 1 {
                    out[x] = 1;
                }
            }
            (false, false) => {}
        }
        out
    }

    /// `[b_i, b_j]` for basis vectors.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[u8] {
        &self.table[i][j]
    }

    /// Bilinear extension to 0/1 coefficient vectors.
    pub fn bracket(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; DIM];
        for i in (0..DIM).filter(|&i| x[i] == 1) {
            for j in (0..DIM).filter(|&j| y[j] == 1) {
                for (o, b) in out.iter_mut().zip(&self.table[i][j]) {
                    *o ^= b;
                }
            }
        }
        out
    }

    /// Jacobi identity on every ordered basis triple, plus `[x, x] = 0` and
    /// symmetry of the table (antisymmetry in characteristic 2).
    pub fn jacobi_check(&self) -> JacobiReport {
        let unit = |i: usize| {
            let mut v = vec![0u8; DIM];
            v[i] = 1;
            v
        };
        let mut failures = 0;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let a = self.bracket(&unit(i), &self.table[j][k]);
                    let b = self.bracket(&unit(j), &self.table[k][i]);
                    let c = self.bracket(&unit(k), &self.table[i][j]);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| x ^ y ^ z != 0) {
                        failures += 1;
                    }
                }
            }
        }
        let alternating = (0..DIM).all(|i| self.table[i][i].iter().all(|&b| b == 0))
            && (0..DIM).all(|i| (0..DIM).all(|j| self.table[i][j] == self.table[j][i]));
        JacobiReport {
            triples_checked: DIM * DIM * DIM,
            failures,
            alternating,
        }
    }

    /// `{x : [x, L] = 0}` over GF(2).
    pub fn center(&self) -> Subspace {
        let f2 = make_field(2, 1, None).expect("GF(2)");
        let mut data = Vec::with_capacity(DIM * DIM * DIM);
        for j in 0..DIM {
            for k in 0..DIM {
                for i in 0..DIM {
                    data.push(self.table[i][j][k] as u64);
                }
            }
        }
        kernel(&Matrix::from_rows(&f2, DIM * DIM, DIM, data).expect("sizes match"))
    }

    /// Triality on the algebra: `X_alpha -> X_{sigma alpha}`, `H_i -> H_{sigma i}`.
    pub fn sigma_on_algebra(&self) -> Matrix {
        let tau = diagram_automorphism(&self.system, 3).expect("D4 has triality");
        let f2 = make_field(2, 1, None).expect("GF(2)");
        let mut m = Matrix::zeros(&f2, DIM, DIM);
        for (i, r) in self.roots.iter().enumerate() {
            m.set(self.index[&tau.apply_root(r)], i, 1);
        }
        for k in 0..4 {
            m.set(N_ROOTS + tau.perm[k], N_ROOTS + k, 1);
        }
        m
    }

    fn reflect(&self, root: &[i64], k: usize) -> Vec<i64> {
        let c = self.pairing(root, k);
        let mut out = root.to_vec();
        out[k] -= c;
        out
    }

    /// The Weyl group as permutations of the 24 root indices, in
    /// breadth-first order over words in the simple reflections, each with
    /// its first-found word.
    pub fn weyl_group(&self) -> Vec<(String, Vec<usize>)> {
        let id: Vec<usize> = (0..N_ROOTS).collect();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone(), ());
        queue.push_back((String::new(), id));
        while let Some((word, perm)) = queue.pop_front() {
            for k in 0..4 {
                let next: Vec<usize> = perm
                    .iter()
                    .map(|&r| self.index[&self.reflect(&self.roots[r], k)])
                    .collect();
                if seen.insert(next.clone(), ()).is_none() {
                    queue.push_back((format!("s{}{}", k + 1, word), next));
                }
            }
            out.push((if word.is_empty() { "e".to_string() } else { word }, perm));
        }
        out
    }

    /// `n_w` on the algebra: roots permuted, `H_k -> H_{w alpha_k}` with the
    /// reflection representation reduced mod 2.
    pub fn weyl_on_algebra(&self, perm: &[usize]) -> Matrix {
        let f2 = make_field(2, 1, None).expect("GF(2)");
        let mut m = Matrix::zeros(&f2, DIM, DIM);
        for (i, &j) in perm.iter().enumerate() {
            m.set(j, i, 1);
        }
        for k in 0..4 {
            let mut simple = vec![0i64; 4];
            simple[k] = 1;
            let image = &self.roots[perm[self.index[&simple]]];
            for (j, c) in image.iter().enumerate() {
                m.set(N_ROOTS + j, N_ROOTS + k, c.rem_euclid(2) as u64);
            }
        }
        m
    }
}

impl Default for ChevalleyAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

/// Charpoly of triality on the Cartan subalgebra and on the zero weight
/// space of the quotient.
#[derive(Debug, Clone)]
pub struct ZeroWeightAction {
    pub cartan_charpoly: Polynomial,
    pub v0_matrix: Matrix,
    pub v0_charpoly: Polynomial,
    /// Squarefree decomposition of the V0 charpoly.
    pub v0_factors: Vec<(Polynomial, u32)>,
}

/// Everything computed while building the 26-dimensional module.
#[derive(Debug, Clone)]
pub struct D4Construction {
    pub algebra: ChevalleyAlgebra,
    pub jacobi: JacobiReport,
    pub center: Subspace,
    pub rep: ExplicitRep,
}

/// Builds the algebra, its center and the quotient module over `field`
/// (characteristic 2). The torus coordinates are the root values
/// `(alpha_1(t), .., alpha_4(t))`.
pub fn build_d4_char2(field: &Field) -> Result<D4Construction, RepError> {
    if field.characteristic() != 2 {
        return Err(RepError::BadCharacteristic {
            case: CaseLabel::D4Char2.as_str(),
            p: field.characteristic(),
        });
    }
    let algebra = ChevalleyAlgebra::new();
    let jacobi = algebra.jacobi_check();
    let center = algebra.center();
    if center.dim() != 2 {
        return Err(RepError::CenterDimensionUnexpected(center.dim()));
    }
    let quotient = |m: &Matrix| -> Result<Matrix, RepError> {
        Ok(induced_quotient_action(m, &center)?.embed(field)?)
    };
    let sigma = quotient(&algebra.sigma_on_algebra())?;
    let weyl = algebra
        .weyl_group()
        .into_iter()
        .map(|(id, perm)| {
            Ok(WeylElement {
                id,
                matrix: quotient(&algebra.weyl_on_algebra(&perm))?,
            })
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    let (_, complement) = adapted_basis(&center);
    let mut characters = Vec::new();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    for &i in &complement {
        if i < N_ROOTS {
            characters.push(algebra.roots[i].clone());
            weights.push(algebra.system.root_weight(&algebra.roots[i]).integral().expect("roots are integral"));
        } else {
            characters.push(vec![0; 4]);
            weights.push(vec![0; 4]);
        }
        labels.push(algebra.basis_label(i));
    }
    let rep = ExplicitRep {
        label: CaseLabel::D4Char2,
        field: field.clone(),
        sigma_order: 3,
        sigma,
        weyl,
        characters,
        weights,
        basis_labels: labels,
    };
    Ok(D4Construction {
        algebra,
        jacobi,
        center,
        rep,
    })
}

impl D4Construction {
    /// Basis indices of the zero weight space in the quotient.
    pub fn zero_weight_indices(&self) -> Vec<usize> {
        self.rep
            .weights
            .iter()
            .enumerate()
            .filter(|(_, w)| w.iter().all(|&c| c == 0))
            .map(|(i, _)| i)
            .collect()
    }

    /// Triality on the Cartan subalgebra and on `V_0`, computed from the
    /// constructed matrices (before any twist).
    pub fn zero_weight_action(&self) -> Result<ZeroWeightAction, RepError> {
        let f2 = make_field(2, 1, None).expect("GF(2)");
        let s = self.algebra.sigma_on_algebra();
        let cartan_vs: Vec<Vec<u64>> = (0..4)
            .map(|k| {
                let mut v = vec![0u64; DIM];
                v[N_ROOTS + k] = 1;
                v
            })
            .collect();
        let cartan = Subspace::span(&f2, DIM, &cartan_vs)?;
        let cartan_charpoly = charpoly(&restrict_to_invariant(&s, &cartan)?)?;
        let q = induced_quotient_action(&s, &self.center)?;
        let idx = self.zero_weight_indices();
        let v0_matrix = Matrix::from_fn(&f2, idx.len(), idx.len(), |i, j| q.get(idx[i], idx[j]));
        for &j in &idx {
            for i in (0..q.rows()).filter(|i| !idx.contains(i)) {
                if q.get(i, j) != 0 {
                    return Err(RepError::InvariantNotFound("zero weight space is not sigma-stable".into()));
                }
            }
        }
        let v0_charpoly = charpoly(&v0_matrix)?;
        let v0_factors = v0_charpoly.squarefree_decomposition()?;
        Ok(ZeroWeightAction {
            cartan_charpoly,
            v0_matrix,
            v0_charpoly,
            v0_factors,
        })
    }
}

/// Root values `(a_1, .., a_4)` from epsilon coordinates:
/// `a_1 = t_1/t_2`, `a_2 = t_2/t_3`, `a_3 = t_3/t_4`, `a_4 = t_3 t_4`.
pub fn root_values_from_epsilon(field: &Field, t: &[u64; 4]) -> Option<[u64; 4]> {
    let f = field;
    Some([
        f.div(t[0], t[1])?,
        f.div(t[1], t[2])?,
        f.div(t[2], t[3])?,
        f.mul(t[2], t[3]),
    ])
}
