use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use super::SpectraError;
use crate::galois::serial::code_json;
use crate::galois::{Field, Polynomial};

/// One factor shape of a predicted characteristic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// `x - c`
    Linear(u64),
    /// `x^k - c`
    Binomial { k: u32, c: u64 },
    /// `x^2 + x + 1`
    Cyclotomic3,
}

/// Which part of the module a factor accounts for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sector {
    /// Spanned by nonzero weight vectors.
    Root,
    /// The zero weight space.
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedFactor {
    pub kind: FactorKind,
    pub count: u32,
    pub sector: Sector,
}

/// A product of linear, binomial and cyclotomic factors, optionally
/// rescaled by `x -> x / s` (the effect of multiplying the element by `s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedCharpoly {
    field: Field,
    factors: Vec<PredictedFactor>,
    scale: u64,
}

impl PredictedCharpoly {
    pub fn new(field: &Field) -> Self {
        PredictedCharpoly {
            field: field.clone(),
            factors: Vec::new(),
            scale: 1,
        }
    }

    pub fn push(&mut self, kind: FactorKind, count: u32, sector: Sector) {
        self.factors.push(PredictedFactor { kind, count, sector });
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn factors(&self) -> &[PredictedFactor] {
        &self.factors
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// Prediction for `s h` given the prediction for `h`.
    pub fn scaled(mut self, s: u64) -> Self {
        self.scale = self.field.mul(self.scale, s);
        self
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|f| kind_degree(f.kind) * f.count as usize)
            .sum()
    }

    /// The single factor, rescaled.
    pub fn factor_poly(&self, kind: FactorKind) -> Polynomial {
        let f = &self.field;
        let base = match kind {
            FactorKind::Linear(c) => Polynomial::linear(f, c),
            FactorKind::Binomial { k, c } => Polynomial::binomial(f, k as usize, c),
            FactorKind::Cyclotomic3 => Polynomial::new(f, vec![1, 1, 1]),
        };
        let d = kind_degree(kind);
        let coeffs = (0..=d).map(|i| f.mul(base.coeff(i), f.pow(self.scale, (d - i) as u64))).collect();
        Polynomial::new(f, coeffs)
    }

    pub fn sector_product(&self, sector: Sector) -> Polynomial {
        self.factors
            .iter()
            .filter(|p| p.sector == sector)
            .fold(Polynomial::one(&self.field), |acc, p| acc.mul(&self.factor_poly(p.kind).pow(p.count)))
    }

    pub fn expand(&self) -> Polynomial {
        self.sector_product(Sector::Root).mul(&self.sector_product(Sector::Zero))
    }

    pub fn factor_json(&self, p: &PredictedFactor) -> Value {
        let f = &self.field;
        let mut v = match p.kind {
            FactorKind::Linear(c) => json!({"kind": "linear", "c": code_json(f, c)}),
            FactorKind::Binomial { k, c } => json!({"kind": "binomial", "k": k, "c": code_json(f, c)}),
            FactorKind::Cyclotomic3 => json!({"kind": "cyclotomic3"}),
        };
        v["count"] = json!(p.count);
        v["sector"] = json!(p.sector);
        v
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self.factors.iter().map(|p| self.factor_json(p)).collect();
        json!({
            "factors": factors,
            "scale": code_json(&self.field, self.scale),
            "degree": self.degree(),
        })
    }
}

impl FactorKind {
    pub fn degree(self) -> usize {
        kind_degree(self)
    }
}

fn kind_degree(kind: FactorKind) -> usize {
    match kind {
        FactorKind::Linear(_) => 1,
        FactorKind::Binomial { k, .. } => k as usize,
        FactorKind::Cyclotomic3 => 2,
    }
}

fn nonzero(values: &[u64]) -> Result<(), SpectraError> {
    if values.contains(&0) {
        return Err(SpectraError::BadElement("torus values must be nonzero".into()));
    }
    Ok(())
}

/// `(x - 1)(x + 1)(x + s)(x + s^{-1})(x^2 - s)(x^2 - s^{-1})` with
/// `s = t_1 / t_2`.
pub fn predicted_charpoly_a2(field: &Field, t1: u64, t2: u64) -> Result<PredictedCharpoly, SpectraError> {
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(SpectraError::BadCharacteristic { case: "a2-adjoint", p });
    }
    nonzero(&[t1, t2])?;
    let f = field;
    let s = f.div(t1, t2).expect("nonzero");
    let si = f.inv(s).expect("nonzero");
    let mut out = PredictedCharpoly::new(f);
    out.push(FactorKind::Linear(1), 1, Sector::Zero);
    out.push(FactorKind::Linear(f.neg(1)), 1, Sector::Zero);
    out.push(FactorKind::Linear(f.neg(s)), 1, Sector::Root);
    out.push(FactorKind::Linear(f.neg(si)), 1, Sector::Root);
    out.push(FactorKind::Binomial { k: 2, c: s }, 1, Sector::Root);
    out.push(FactorKind::Binomial { k: 2, c: si }, 1, Sector::Root);
    Ok(out)
}

fn d4_prediction(f: &Field, linears: [u64; 3], cubes: [u64; 3]) -> PredictedCharpoly {
    let mut out = PredictedCharpoly::new(f);
    out.push(FactorKind::Cyclotomic3, 1, Sector::Zero);
    for c in linears {
        out.push(FactorKind::Linear(c), 1, Sector::Root);
        out.push(FactorKind::Linear(f.inv(c).expect("nonzero")), 1, Sector::Root);
    }
    for c in cubes {
        out.push(FactorKind::Binomial { k: 3, c }, 1, Sector::Root);
        out.push(FactorKind::Binomial { k: 3, c: f.inv(c).expect("nonzero") }, 1, Sector::Root);
    }
    out
}

fn monomial(f: &Field, a: &[u64; 4], e: [u64; 4]) -> u64 {
    (0..4).fold(1, |acc, i| f.mul(acc, f.pow(a[i], e[i])))
}

/// Prediction for `sigma t` on the 26-dimensional module from the root
/// values `a_i = alpha_i(t)`.
pub fn predicted_charpoly_d4(field: &Field, a: &[u64; 4]) -> Result<PredictedCharpoly, SpectraError> {
    if field.characteristic() != 2 {
        return Err(SpectraError::BadCharacteristic {
            case: "d4-w2-char2",
            p: field.characteristic(),
        });
    }
    nonzero(a)?;
    let f = field;
    let linears = [
        a[1],
        monomial(f, a, [1, 1, 1, 1]),
        monomial(f, a, [1, 2, 1, 1]),
    ];
    let cubes = [
        monomial(f, a, [1, 0, 1, 1]),
        monomial(f, a, [1, 3, 1, 1]),
        monomial(f, a, [2, 3, 2, 2]),
    ];
    Ok(d4_prediction(f, linears, cubes))
}

/// As [`predicted_charpoly_d4`] from `(t_1, t_2, t_3)`; the result does
/// not depend on `t_4`.
pub fn predicted_charpoly_d4_epsilon(field: &Field, t: &[u64; 3]) -> Result<PredictedCharpoly, SpectraError> {
    nonzero(t)?;
    let a = crate::reps::root_values_from_epsilon(field, &[t[0], t[1], t[2], 1]).expect("nonzero");
    predicted_charpoly_d4(field, &a)
}

/// Whether 3 divides `q - 1`, which decides how `y` relates to `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistedBranch {
    /// `3 | q - 1` and `y^2 = u`.
    Divides,
    /// `3` coprime to `q - 1` and `y^3 = u`.
    Coprime,
}

impl TwistedBranch {
    pub fn for_q(q: u64) -> Self {
        if (q - 1) % 3 == 0 {
            TwistedBranch::Divides
        } else {
            TwistedBranch::Coprime
        }
    }
}

/// Prediction over `GF(q)` for the twisted-torus element of `^3D_4(q)`.
pub fn predicted_charpoly_3d4(
    field: &Field,
    q: u64,
    y: u64,
    u: u64,
    branch: TwistedBranch,
) -> Result<PredictedCharpoly, SpectraError> {
    if q % 2 != 0 || field.size() != q {
        return Err(SpectraError::BadCharacteristic {
            case: "3d4",
            p: field.characteristic(),
        });
    }
    nonzero(&[y, u])?;
    let f = field;
    if branch != TwistedBranch::for_q(q) {
        return Err(SpectraError::BranchMismatch(format!("branch {:?} does not fit q = {}", branch, q)));
    }
    let (lin, cube, rel) = match branch {
        TwistedBranch::Divides => ([2, 4, 6], [8, 10, 2], 2),
        TwistedBranch::Coprime => ([2, 5, 7], [3, 9, 12], 3),
    };
    if f.pow(y, rel) != u {
        return Err(SpectraError::BranchMismatch(format!("y^{} != u", rel)));
    }
    Ok(d4_prediction(f, lin.map(|e| f.pow(y, e)), cube.map(|e| f.pow(y, e))))
}

/// Sizes of the two value sets behind the `D_4` prediction and whether
/// they force a squarefree product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M1M2Verdict {
    pub m1_size: usize,
    pub m2_size: usize,
    /// `s^3` avoids the second set for every `s` in the first; only
    /// checked when 3 does not divide `q - 1`.
    pub cube_avoidance: Option<bool>,
    pub sufficient: bool,
}

pub fn m1_m2_condition(field: &Field, t1: u64, t2: u64, t3: u64, q: u64) -> M1M2Verdict {
    let f = field;
    let pm = |c: u64| -> [u64; 2] { [c, f.inv(c).unwrap_or(0)] };
    let m1: BTreeSet<u64> = [
        f.div(t2, t3).unwrap_or(0),
        f.mul(t1, t3),
        f.mul(t1, t2),
    ]
    .into_iter()
    .flat_map(pm)
    .collect();
    let m2: BTreeSet<u64> = [
        f.div(f.mul(t1, f.mul(t3, t3)), t2).unwrap_or(0),
        f.div(f.mul(t1, f.mul(t2, t2)), t3).unwrap_or(0),
        f.mul(f.mul(t1, t1), f.mul(t2, t3)),
    ]
    .into_iter()
    .flat_map(pm)
    .collect();
    let cube_avoidance = ((q - 1) % 3 != 0).then(|| m1.iter().all(|&s| !m2.contains(&f.pow(s, 3))));
    M1M2Verdict {
        m1_size: m1.len(),
        m2_size: m2.len(),
        cube_avoidance,
        sufficient: m1.len() == 6 && m2.len() == 6 && cube_avoidance.unwrap_or(true) && !m1.contains(&0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_prediction_at_q7() {
        let f = Field::gf(7).unwrap();
        let p = predicted_charpoly_a2(&f, 3, 1).unwrap();
        let expected = [
            Polynomial::linear(&f, 1),
            Polynomial::linear(&f, 6),
            Polynomial::linear(&f, 4),
            Polynomial::linear(&f, 2),
            Polynomial::binomial(&f, 2, 3),
            Polynomial::binomial(&f, 2, 5),
        ]
        .iter()
        .fold(Polynomial::one(&f), |a, b| a.mul(b));
        assert_eq!(p.expand(), expected);
        assert_eq!(p.degree(), 8);
    }

    #[test]
    fn a2_eighth_roots_of_unity() {
        // zeta^4 = -1 in GF(17): zeta = 2 has order 8
        let f = Field::gf(17).unwrap();
        let p = predicted_charpoly_a2(&f, 4, 1).unwrap();
        assert_eq!(p.expand(), Polynomial::binomial(&f, 8, 1));
    }

    #[test]
    fn d4_prediction_at_q16() {
        let f = Field::gf(16).unwrap();
        let xi = f.primitive();
        let p = predicted_charpoly_d4_epsilon(&f, &[xi, f.pow(xi, 2), 1]).unwrap();
        assert_eq!(p.degree(), 26);
        let lin: BTreeSet<u64> = p
            .factors()
            .iter()
            .filter_map(|x| match x.kind {
                FactorKind::Linear(c) => Some(c),
                _ => None,
            })
            .collect();
        let want: BTreeSet<u64> = [2i64, -2, 1, -1, 3, -3].iter().map(|&e| f.pow_signed(xi, e).unwrap()).collect();
        assert_eq!(lin, want);
        assert!(p.expand().is_squarefree().unwrap());
        let v = m1_m2_condition(&f, xi, f.pow(xi, 2), 1, 16);
        assert!(v.sufficient && v.m1_size == 6 && v.cube_avoidance.is_none());
        assert!(!m1_m2_condition(&f, 1, 1, 1, 16).sufficient);
    }

    #[test]
    fn m1_m2_at_q32_avoids_cubes() {
        let f = Field::gf(32).unwrap();
        let xi = f.primitive();
        let v = m1_m2_condition(&f, xi, f.pow(xi, 2), 1, 32);
        assert_eq!(v.cube_avoidance, Some(true));
        assert!(v.sufficient);
    }

    #[test]
    fn twisted_branches() {
        let f = Field::gf(16).unwrap();
        let y = f.primitive();
        let u = f.pow(y, 2);
        assert_eq!(predicted_charpoly_3d4(&f, 16, y, u, TwistedBranch::Divides).unwrap().degree(), 26);
        assert!(matches!(
            predicted_charpoly_3d4(&f, 16, y, y, TwistedBranch::Divides),
            Err(SpectraError::BranchMismatch(_))
        ));
        let p = predicted_charpoly_3d4(&f, 16, 1, 1, TwistedBranch::Divides).unwrap();
        assert!(!p.expand().is_squarefree().unwrap());
    }

    #[test]
    fn scaling_substitutes_x_over_s() {
        let f = Field::gf(7).unwrap();
        let p = predicted_charpoly_a2(&f, 3, 1).unwrap();
        let s = 2;
        let scaled = p.clone().scaled(s).expand();
        let base = p.expand();
        for x in 0..7 {
            // s^8 chi(x / s)
            let want = f.mul(f.pow(s, 8), base.eval(f.div(x, s).unwrap()));
            assert_eq!(scaled.eval(x), want);
        }
    }
}
