use serde::Serialize;
use serde_json::{json, Value};

use super::element::{coset_weyl_ids, realize, ElementSpec, TorusCoords};
use super::predict::TwistedBranch;
use super::report::poly_json;
use super::SpectraError;
use crate::galois::{Field, Polynomial};
use crate::linalg::{charpoly, Matrix};
use crate::reps::{build_d4_char2, CaseLabel, ExplicitRep, INDUCED_BLOCK};

/// Outcome of comparing simplicity of `h` with simplicity of `h^2` on one
/// block of the induced module, over the whole coset family.
#[derive(Debug, Clone)]
pub struct InducedReport {
    pub q: u64,
    pub candidates: u64,
    /// Elements with squarefree charpoly on the full module.
    pub simple_on_module: u64,
    /// Elements whose `h^2` is squarefree on the first block.
    pub simple_square_on_block: u64,
    /// Elements whose `h^2` is squarefree on both blocks.
    pub simple_square_on_both_blocks: u64,
    /// Elements whose two block charpolys of `h^2` are coprime.
    pub cross_block_disjoint: u64,
    /// Elements whose two block charpolys of `h^2` coincide.
    pub blocks_isospectral: u64,
    /// `h^2` preserves both blocks for every element.
    pub square_preserves_blocks: bool,
    pub biconditional_violations: Vec<ElementSpec>,
    pub field: Field,
}

impl InducedReport {
    pub fn biconditional_holds(&self) -> bool {
        self.biconditional_violations.is_empty()
    }

    pub fn negative_claim_holds(&self) -> bool {
        self.simple_on_module == 0
    }

    pub fn to_json(&self) -> Value {
        let violations: Vec<Value> = self
            .biconditional_violations
            .iter()
            .map(|e| e.to_json(&self.field))
            .collect();
        json!({
            "q": self.q,
            "candidates": self.candidates,
            "simple_on_module": self.simple_on_module,
            "simple_square_on_block": self.simple_square_on_block,
            "simple_square_on_both_blocks": self.simple_square_on_both_blocks,
            "cross_block_disjoint": self.cross_block_disjoint,
            "blocks_isospectral": self.blocks_isospectral,
            "square_preserves_blocks": self.square_preserves_blocks,
            "biconditional": "h squarefree on the module iff h^2 squarefree on the first block",
            "biconditional_holds": self.biconditional_holds(),
            "biconditional_violations": violations,
            "negative_claim_holds": self.negative_claim_holds(),
        })
    }
}

fn squarefree(p: &Polynomial) -> Result<bool, SpectraError> {
    Ok(p.is_squarefree()?)
}

/// Runs over every `sigma n_w t` of the induced module with `t` over
/// `(GF(q)^x)^3`, comparing both sides of the block criterion.
pub fn induced_equivalence_check(rep: &ExplicitRep, q: u64) -> Result<InducedReport, SpectraError> {
    if rep.label() != CaseLabel::A3Induced {
        return Err(SpectraError::CaseMismatch {
            element: CaseLabel::A3Induced,
            rep: rep.label(),
        });
    }
    let f = rep.field().clone();
    let units: Vec<u64> = Field::gf(q)?.units().collect();
    let b = INDUCED_BLOCK;
    let mut out = InducedReport {
        q,
        candidates: 0,
        simple_on_module: 0,
        simple_square_on_block: 0,
        simple_square_on_both_blocks: 0,
        cross_block_disjoint: 0,
        blocks_isospectral: 0,
        square_preserves_blocks: true,
        biconditional_violations: Vec::new(),
        field: f.clone(),
    };
    for w in coset_weyl_ids(rep) {
        for &t1 in &units {
            for &t2 in &units {
                for &t3 in &units {
                    let e = ElementSpec::coset(rep.label(), &w, TorusCoords::Native(vec![t1, t2, t3]));
                    let h = realize(&e, rep)?;
                    let h2 = h.mul(&h);
                    let off_zero = h2.submatrix(0..b, b..2 * b).is_zero() && h2.submatrix(b..2 * b, 0..b).is_zero();
                    out.square_preserves_blocks &= off_zero;
                    let c1 = charpoly(&h2.submatrix(0..b, 0..b))?;
                    let c2 = charpoly(&h2.submatrix(b..2 * b, b..2 * b))?;
                    let left = squarefree(&charpoly(&h)?)?;
                    let right = squarefree(&c1)?;
                    out.candidates += 1;
                    out.simple_on_module += left as u64;
                    out.simple_square_on_block += right as u64;
                    out.simple_square_on_both_blocks += (right && squarefree(&c2)?) as u64;
                    out.cross_block_disjoint += (c1.gcd(&c2)?.degree() == Some(0)) as u64;
                    out.blocks_isospectral += (c1 == c2) as u64;
                    if left != right {
                        out.biconditional_violations.push(e);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Weight multiplicities against the necessary condition for a simple
/// spectrum element in the coset: nonzero weights of multiplicity 1 and
/// zero weight of multiplicity at most `|sigma|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gu1Report {
    pub case: CaseLabel,
    pub sigma_order: u32,
    pub nonzero_multiplicities_one: bool,
    pub zero_multiplicity: usize,
    pub passes: bool,
}

pub fn gu1_property_check(rep: &ExplicitRep, sigma_order: u32) -> Gu1Report {
    let ledger = rep.weight_ledger();
    let (zero, rest): (Vec<_>, Vec<_>) = ledger
        .iter()
        .partition(|e| e.weight.is_zero());
    let zero_multiplicity = zero.first().map_or(0, |e| e.multiplicity);
    let nonzero_multiplicities_one = rest.iter().all(|e| e.multiplicity == 1);
    Gu1Report {
        case: rep.label(),
        sigma_order,
        nonzero_multiplicities_one,
        zero_multiplicity,
        passes: nonzero_multiplicities_one && zero_multiplicity <= sigma_order as usize,
    }
}

/// If `m` has simple spectrum, every eigenvalue of `m^l` has multiplicity
/// at most `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerBoundReport {
    pub power: u32,
    pub simple: bool,
    pub max_multiplicity: u32,
    pub distinct_roots: usize,
    pub holds: bool,
}

pub fn power_bound_check(m: &Matrix, l: u32) -> Result<PowerBoundReport, SpectraError> {
    let simple = squarefree(&charpoly(m)?)?;
    let chi = charpoly(&m.pow(l as u64))?;
    let max_multiplicity = chi.max_root_multiplicity()?;
    let distinct_roots = chi.distinct_root_count()?;
    let bounded = max_multiplicity <= l && distinct_roots * l as usize >= m.rows();
    Ok(PowerBoundReport {
        power: l,
        simple,
        max_multiplicity,
        distinct_roots,
        holds: !simple || bounded,
    })
}

/// Triality on the zero weight space of the 26-dimensional module against
/// the expected `x^2 + x + 1`.
#[derive(Debug, Clone)]
pub struct V0Report {
    pub q: u64,
    pub jacobi_failures: usize,
    pub center_dim: usize,
    pub quotient_dim: usize,
    pub cartan_charpoly: Polynomial,
    pub v0_basis: Vec<String>,
    pub v0_matrix: Matrix,
    pub v0_charpoly: Polynomial,
    pub v0_factors: Vec<(Polynomial, u32)>,
    pub expected: Polynomial,
}

impl V0Report {
    pub fn matches_expected(&self) -> bool {
        self.v0_charpoly == self.expected
    }

    /// Triality fixes every vector of `V_0`.
    pub fn sigma_trivial_on_v0(&self) -> bool {
        self.v0_matrix == Matrix::identity(self.v0_matrix.field(), self.v0_matrix.rows())
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .v0_factors
            .iter()
            .map(|(p, m)| json!({"factor": poly_json(p, 2), "multiplicity": m}))
            .collect();
        json!({
            "q": self.q,
            "jacobi_failures": self.jacobi_failures,
            "center_dim": self.center_dim,
            "quotient_dim": self.quotient_dim,
            "cartan_charpoly": poly_json(&self.cartan_charpoly, 2),
            "v0_basis": self.v0_basis,
            "v0_matrix": self.v0_matrix.to_json(),
            "v0_charpoly": poly_json(&self.v0_charpoly, 2),
            "v0_factors": factors,
            "expected": poly_json(&self.expected, 2),
            "matches_expected": self.matches_expected(),
            "sigma_trivial_on_v0": self.sigma_trivial_on_v0(),
        })
    }
}

pub fn v0_verdict(q: u64) -> Result<V0Report, SpectraError> {
    let field = Field::gf(q)?;
    let c = build_d4_char2(&field)?;
    let z = c.zero_weight_action()?;
    let f2 = Field::gf(2)?;
    let labels = c.rep.basis_labels();
    Ok(V0Report {
        q,
        jacobi_failures: c.jacobi.failures,
        center_dim: c.center.dim(),
        quotient_dim: c.rep.dim(),
        cartan_charpoly: z.cartan_charpoly,
        v0_basis: c.zero_weight_indices().iter().map(|&i| labels[i].clone()).collect(),
        v0_matrix: z.v0_matrix,
        v0_charpoly: z.v0_charpoly,
        v0_factors: z.v0_factors,
        expected: Polynomial::new(&f2, vec![1, 1, 1]),
    })
}

/// The twisted torus element of `^3D_4(q)`: `y_1` primitive in `GF(q^3)`,
/// `u = y_1^{2(1+q+q^2)}` in `GF(q)` and `y` with `y^2 = u` or `y^3 = u`.
#[derive(Debug, Clone)]
pub struct TwistedTorusParams {
    pub q: u64,
    pub small: Field,
    pub big: Field,
    pub y1: u64,
    pub u: u64,
    pub y: u64,
    pub branch: TwistedBranch,
    /// `(y_1^2, y^2, y_1^{2q}, y_1^{2q^2})`.
    pub root_values: [u64; 4],
}

impl TwistedTorusParams {
    pub fn to_json(&self) -> Value {
        use crate::galois::serial::code_json;
        json!({
            "q": self.q,
            "branch": self.branch,
            "y1": code_json(&self.big, self.y1),
            "u": code_json(&self.small, self.u),
            "y": code_json(&self.small, self.y),
            "root_values": self.root_values.iter().map(|&c| code_json(&self.big, c)).collect::<Vec<_>>(),
        })
    }
}

pub fn twisted_torus_parameters(q: u64) -> Result<TwistedTorusParams, SpectraError> {
    if q % 2 != 0 || q < 4 {
        return Err(SpectraError::BadCharacteristic { case: "3d4", p: q });
    }
    let small = Field::gf(q)?;
    let big = small.extension(3)?;
    let y1 = big.primitive();
    let u = big.pow(y1, 2 * (1 + q + q * q));
    if !big.in_subfield(u, q) {
        return Err(SpectraError::FieldMismatch("norm value outside GF(q)".into()));
    }
    let branch = TwistedBranch::for_q(q);
    let y = match branch {
        // squaring is bijective in characteristic 2
        TwistedBranch::Divides => small.pow(u, q / 2),
        TwistedBranch::Coprime => {
            let n = q - 1;
            let inv3 = (1..n).find(|k| (3 * k) % n == 1).expect("3 is a unit mod q - 1");
            small.pow(u, inv3)
        }
    };
    let root_values = [
        big.pow(y1, 2),
        big.pow(y, 2),
        big.pow(y1, 2 * q),
        big.pow(big.pow(y1, 2 * q), q),
    ];
    Ok(TwistedTorusParams {
        q,
        small,
        big,
        y1,
        u,
        y,
        branch,
        root_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{build_a2_adjoint, build_a3_two_omega2};

    #[test]
    fn gu1_on_the_small_cases() {
        let f = Field::gf(7).unwrap();
        let a2 = gu1_property_check(&build_a2_adjoint(&f).unwrap(), 2);
        assert!(a2.passes && a2.zero_multiplicity == 2);
        let a3 = gu1_property_check(&build_a3_two_omega2(&f).unwrap(), 2);
        assert!(a3.passes && a3.zero_multiplicity == 2);
        assert!(!gu1_property_check(&build_a2_adjoint(&f).unwrap(), 1).passes);
    }

    #[test]
    fn twisted_parameters_q16() {
        let p = twisted_torus_parameters(16).unwrap();
        assert_eq!(p.branch, TwistedBranch::Divides);
        assert_eq!(p.small.pow(p.y, 2), p.u);
        assert_eq!(p.small.order_of(p.y), Some(15));
        let p32 = twisted_torus_parameters(32).unwrap();
        assert_eq!(p32.branch, TwistedBranch::Coprime);
        assert_eq!(p32.small.pow(p32.y, 3), p32.u);
    }
}
