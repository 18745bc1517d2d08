use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use super::RepError;
use crate::galois::{serial, Field};
use crate::linalg::Matrix;
use crate::roots::Weight;

/// The four modules the searches run on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    /// Adjoint module of `SL_3`, highest weight `omega_1 + omega_2`.
    A2Adjoint,
    /// The 20-dimensional `SL_4`-module of highest weight `2 omega_2`.
    A3TwoOmega2,
    /// `Sym^2(V_4) + Sym^2(V_4^*)`, induced from the index-2 subgroup.
    A3Induced,
    /// The 26-dimensional `D_4`-module `omega_2` in characteristic 2.
    D4Char2,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 4] = [
        CaseLabel::A2Adjoint,
        CaseLabel::A3TwoOmega2,
        CaseLabel::A3Induced,
        CaseLabel::D4Char2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::A2Adjoint => "a2-adjoint",
            CaseLabel::A3TwoOmega2 => "a3-2w2",
            CaseLabel::A3Induced => "a3-induced",
            CaseLabel::D4Char2 => "d4-w2-char2",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, RepError> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| RepError::UnknownCase(s.to_string()))
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A named element of `N(T)` with its matrix on the module.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub id: String,
    pub matrix: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub weight: Weight,
    pub multiplicity: usize,
    pub basis: Vec<usize>,
}

/// A module for `H = <G, sigma>` on a weight basis: `T` acts diagonally
/// through `characters`, and `sigma` and the listed Weyl representatives
/// act by explicit matrices.
#[derive(Debug, Clone)]
pub struct ExplicitRep {
    pub(crate) label: CaseLabel,
    pub(crate) field: Field,
    pub(crate) sigma_order: u32,
    pub(crate) sigma: Matrix,
    pub(crate) weyl: Vec<WeylElement>,
    /// Exponents of the torus coordinates, one row per basis vector.
    pub(crate) characters: Vec<Vec<i64>>,
    /// Weight of each basis vector in fundamental coordinates.
    pub(crate) weights: Vec<Vec<i64>>,
    pub(crate) basis_labels: Vec<String>,
}

impl ExplicitRep {
    pub fn label(&self) -> CaseLabel {
        self.label
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.characters.len()
    }

    pub fn torus_rank(&self) -> usize {
        self.characters.first().map_or(0, Vec::len)
    }

    pub fn sigma_order(&self) -> u32 {
        self.sigma_order
    }

    pub fn sigma_matrix(&self) -> &Matrix {
        &self.sigma
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn characters(&self) -> &[Vec<i64>] {
        &self.characters
    }

    /// All Weyl representatives; the identity comes first.
    pub fn weyl_representatives(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_eval(&self, id: &str) -> Result<&Matrix, RepError> {
        self.weyl
            .iter()
            .find(|w| w.id == id)
            .map(|w| &w.matrix)
            .ok_or_else(|| RepError::UnknownWeyl(id.to_string()))
    }

    /// Eigenvalues of the torus element with the given coordinates, one
    /// per basis vector.
    pub fn torus_diagonal(&self, coords: &[u64]) -> Result<Vec<u64>, RepError> {
        let f = &self.field;
        if coords.len() != self.torus_rank() {
            return Err(RepError::BadTorus(format!(
                "expected {} coordinates, got {}",
                self.torus_rank(),
                coords.len()
            )));
        }
        if coords.iter().any(|&c| c == 0 || c >= f.size()) {
            return Err(RepError::BadTorus("coordinates must be nonzero field elements".into()));
        }
        Ok(self
            .characters
            .iter()
            .map(|chi| {
                chi.iter().zip(coords).fold(f.one(), |acc, (&e, &c)| {
                    f.mul(acc, f.pow_signed(c, e).expect("nonzero"))
                })
            })
            .collect())
    }

    pub fn torus_eval(&self, coords: &[u64]) -> Result<Matrix, RepError> {
        Ok(Matrix::diagonal(&self.field, &self.torus_diagonal(coords)?))
    }

    /// Weights with multiplicities and the basis vectors spanning each
    /// weight space, in weight order.
    pub fn weight_ledger(&self) -> Vec<LedgerEntry> {
        let mut by_weight: BTreeMap<&Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            by_weight.entry(w).or_default().push(i);
        }
        by_weight
            .into_iter()
            .map(|(w, basis)| LedgerEntry {
                weight: Weight::fundamental(w),
                multiplicity: basis.len(),
                basis,
            })
            .collect()
    }

    /// `zeta^k`, where `zeta` is the first primitive `|sigma|`-th root of
    /// unity of the field.
    pub fn twist_scalar(&self, k: u32) -> Result<u64, RepError> {
        let f = &self.field;
        if k % self.sigma_order == 0 {
            return Ok(f.one());
        }
        let n = self.sigma_order as u64;
        if (f.size() - 1) % n != 0 {
            return Err(RepError::NoTwist(format!(
                "GF({}) has no primitive {}-th root of unity",
                f.size(),
                n
            )));
        }
        let zeta = f.pow(f.primitive(), (f.size() - 1) / n);
        Ok(f.pow(zeta, k as u64))
    }

    /// Multiplies `sigma` by [`Self::twist_scalar`].
    pub fn with_twist(mut self, k: u32) -> Result<Self, RepError> {
        let s = self.twist_scalar(k)?;
        self.sigma = self.sigma.scale(s);
        Ok(self)
    }

    pub fn metadata_json(&self) -> Value {
        let ledger: Vec<Value> = self
            .weight_ledger()
            .iter()
            .map(|e| json!({"weight": e.weight.to_string(), "multiplicity": e.multiplicity}))
            .collect();
        json!({
            "label": self.label.as_str(),
            "dim": self.dim(),
            "field": serial::field_to_json(&self.field),
            "sigma_order": self.sigma_order,
            "ledger": ledger,
        })
    }
}

/// Fundamental coordinates of an `SL_{n+1}` weight given in epsilon
/// coordinates.
pub(crate) fn sl_weight(eps: &[i64]) -> Vec<i64> {
    eps.windows(2).map(|w| w[0] - w[1]).collect()
}

/// Exponents on `(t_1, .., t_n)` of an `SL_{n+1}` character, using
/// `t_{n+1} = (t_1 .. t_n)^{-1}`.
pub(crate) fn sl_torus_exponents(eps: &[i64]) -> Vec<i64> {
    let last = *eps.last().unwrap();
    eps[..eps.len() - 1].iter().map(|c| c - last).collect()
}
