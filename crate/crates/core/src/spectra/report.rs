use serde_json::{json, Value};

use super::element::{realize, ElementSpec};
use super::predict::{PredictedCharpoly, Sector};
use super::SpectraError;
use crate::galois::serial::code_json;
use crate::galois::{Field, Polynomial};
use crate::linalg::{charpoly, charpoly_hessenberg};
use crate::reps::{CaseLabel, ExplicitRep};

/// How one predicted factor sits inside the computed charpoly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEvidence {
    pub factor: Value,
    pub sector: Sector,
    pub degree: usize,
    pub predicted_count: u32,
    /// Largest `m` with `factor^m | charpoly`.
    pub found_multiplicity: u32,
    /// Degree of `gcd(charpoly, factor)`.
    pub gcd_degree: usize,
}

impl FactorEvidence {
    pub fn matched(&self) -> bool {
        self.found_multiplicity >= self.predicted_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub factors: Vec<FactorEvidence>,
    /// The product of all root-sector factors divides the charpoly.
    pub root_sector_divides: bool,
    /// Charpoly divided by the root-sector product, when it divides.
    pub residual: Option<Polynomial>,
    pub predicted_zero_sector: Polynomial,
    pub zero_sector_match: bool,
}

impl Evidence {
    /// Every root-sector factor is accounted for and only the zero weight
    /// part disagrees.
    pub fn mismatch_localized_to_zero_sector(&self) -> bool {
        self.root_sector_divides && !self.zero_sector_match
    }

    /// Total degree of the root-sector factors found in the charpoly.
    pub fn root_degree_matched(&self) -> usize {
        self.factors
            .iter()
            .filter(|e| e.sector == Sector::Root && e.matched())
            .map(|e| e.degree * e.predicted_count as usize)
            .sum()
    }
}

/// Computed spectrum of one element, optionally against a prediction.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub case: CaseLabel,
    pub q: u64,
    pub field: Field,
    pub element: ElementSpec,
    pub charpoly: Polynomial,
    /// Berkowitz and Hessenberg produced the same polynomial.
    pub charpoly_routes_agree: bool,
    pub squarefree: bool,
    /// `gcd(charpoly, charpoly')`, monic.
    pub gcd_witness: Polynomial,
    pub predicted: Option<PredictedCharpoly>,
    pub prediction_match: Option<bool>,
    pub evidence: Option<Evidence>,
    pub family_scope: String,
    pub exhaustive: bool,
    pub candidates_tested: u64,
}

fn multiplicity(chi: &Polynomial, factor: &Polynomial, cap: u32) -> u32 {
    let mut rest = chi.clone();
    let mut m = 0;
    while m < cap {
        match rest.exact_div(factor) {
            Some(r) => {
                rest = r;
                m += 1;
            }
            None => break,
        }
    }
    m
}

/// Coefficients low degree first, written over the smallest field on the
/// chain from `GF(q)` that holds them.
pub(crate) fn poly_json(p: &Polynomial, q: u64) -> Value {
    let shown = Field::gf(q)
        .ok()
        .and_then(|sub| p.restrict_to(&sub))
        .unwrap_or_else(|| p.clone());
    Value::Array(shown.coeffs().iter().map(|&c| code_json(shown.field(), c)).collect())
}

fn evidence(chi: &Polynomial, predicted: &PredictedCharpoly) -> Result<Evidence, SpectraError> {
    let target = chi.field();
    let lift = |p: &Polynomial| p.embed(target);
    let cap = chi.degree().unwrap_or(0) as u32;
    let mut factors = Vec::new();
    for pf in predicted.factors() {
        let fp = lift(&predicted.factor_poly(pf.kind))?;
        factors.push(FactorEvidence {
            factor: predicted.factor_json(pf),
            sector: pf.sector,
            degree: pf.kind.degree(),
            predicted_count: pf.count,
            found_multiplicity: multiplicity(chi, &fp, cap),
            gcd_degree: chi.gcd(&fp)?.degree().unwrap_or(0),
        });
    }
    let root = lift(&predicted.sector_product(Sector::Root))?;
    let zero = lift(&predicted.sector_product(Sector::Zero))?;
    let residual = chi.exact_div(&root);
    Ok(Evidence {
        factors,
        root_sector_divides: residual.is_some(),
        zero_sector_match: residual.as_ref() == Some(&zero),
        residual,
        predicted_zero_sector: zero,
    })
}

/// Charpoly, squarefree verdict and (given a prediction) the exact
/// comparison for one element.
pub fn verify_element(
    element: &ElementSpec,
    rep: &ExplicitRep,
    predicted: Option<&PredictedCharpoly>,
) -> Result<SpectrumReport, SpectraError> {
    let m = realize(element, rep)?;
    let chi = charpoly(&m)?;
    let routes_agree = charpoly_hessenberg(&m)? == chi;
    let gcd_witness = chi.gcd(&chi.derivative())?;
    let squarefree = gcd_witness.degree() == Some(0);
    let (prediction_match, ev) = match predicted {
        Some(p) => {
            let expanded = p.expand().embed(chi.field())?;
            (Some(expanded == chi), Some(evidence(&chi, p)?))
        }
        None => (None, None),
    };
    Ok(SpectrumReport {
        case: rep.label(),
        q: rep.field().size(),
        field: rep.field().clone(),
        element: element.clone(),
        charpoly: chi,
        charpoly_routes_agree: routes_agree,
        squarefree,
        gcd_witness,
        predicted: predicted.cloned(),
        prediction_match,
        evidence: ev,
        family_scope: "single element".into(),
        exhaustive: true,
        candidates_tested: 1,
    })
}

impl SpectrumReport {
    /// Reports the element as living in `G(q)` or `H(q)` for a subfield
    /// order `q` of the module's field.
    pub fn with_q(mut self, q: u64) -> Self {
        self.q = q;
        self
    }

    pub fn to_json(&self) -> Value {
        let q = self.q;
        let evidence = self.evidence.as_ref().map(|e| {
            let factors: Vec<Value> = e
                .factors
                .iter()
                .map(|f| {
                    json!({
                        "factor": f.factor,
                        "predicted_count": f.predicted_count,
                        "found_multiplicity": f.found_multiplicity,
                        "gcd_degree": f.gcd_degree,
                        "matched": f.matched(),
                    })
                })
                .collect();
            json!({
                "factors": factors,
                "root_sector_divides": e.root_sector_divides,
                "root_sector_degree_matched": e.root_degree_matched(),
                "residual": e.residual.as_ref().map(|r| poly_json(r, q)),
                "predicted_zero_sector": poly_json(&e.predicted_zero_sector, q),
                "zero_sector_match": e.zero_sector_match,
                "mismatch_localized_to_zero_sector": e.mismatch_localized_to_zero_sector(),
            })
        });
        json!({
            "case": self.case.as_str(),
            "q": q,
            "element": self.element.to_json(&self.field),
            "charpoly": poly_json(&self.charpoly, q),
            "charpoly_routes_agree": self.charpoly_routes_agree,
            "squarefree": self.squarefree,
            "gcd_witness": poly_json(&self.gcd_witness, q),
            "predicted": self.predicted.as_ref().map(PredictedCharpoly::to_json),
            "prediction_match": self.prediction_match,
            "family_scope": self.family_scope,
            "exhaustive": self.exhaustive,
            "candidates_tested": self.candidates_tested,
            "evidence": evidence,
        })
    }
}
