//! End-to-end checks for each case: build the module, pick the element,
//! compute, compare, and list which expectations held.

use serde::Serialize;
use serde_json::{json, Value};

use super::checks::{gu1_property_check, induced_equivalence_check, twisted_torus_parameters, v0_verdict};
use super::element::{ElementSpec, TorusCoords};
use super::predict::{
    m1_m2_condition, predicted_charpoly_3d4, predicted_charpoly_a2, predicted_charpoly_d4,
    predicted_charpoly_d4_epsilon, PredictedCharpoly,
};
use super::report::{verify_element, SpectrumReport};
use super::search::{family_search, Family, SearchOptions};
use super::SpectraError;
use crate::galois::Field;
use crate::reps::{
    build_a2_adjoint, build_a3_induced_pair, build_a3_two_omega2, build_d4_char2, membership_3d4, membership_d4,
    membership_sl3, membership_su3, CaseLabel, ExplicitRep,
};
use crate::roots::{build_root_system, diagram_automorphism, TypeLetter};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub name: String,
    pub holds: bool,
}

/// A finished check: the report body and the expectations it asserts.
#[derive(Debug, Clone)]
pub struct CaseCheck {
    pub command: String,
    pub q: u64,
    pub body: Value,
    pub expectations: Vec<Expectation>,
}

impl CaseCheck {
    fn new(command: &str, q: u64) -> Self {
        CaseCheck {
            command: command.to_string(),
            q,
            body: json!({}),
            expectations: Vec::new(),
        }
    }

    fn expect(&mut self, name: &str, holds: bool) {
        self.expectations.push(Expectation {
            name: name.to_string(),
            holds,
        });
    }

    pub fn all_met(&self) -> bool {
        self.expectations.iter().all(|e| e.holds)
    }

    pub fn expectation(&self, name: &str) -> Option<bool> {
        self.expectations.iter().find(|e| e.name == name).map(|e| e.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "q": self.q,
            "report": self.body,
            "expectations": self.expectations,
            "all_met": self.all_met(),
        })
    }
}

fn twisted(rep: ExplicitRep, twist: u32) -> Result<(ExplicitRep, u64), SpectraError> {
    let s = rep.twist_scalar(twist)?;
    Ok((rep.with_twist(twist)?, s))
}

fn a2_prediction(field: &Field, t: (u64, u64), scale: u64) -> Result<PredictedCharpoly, SpectraError> {
    Ok(predicted_charpoly_a2(field, t.0, t.1)?.scaled(scale))
}

/// Coset element of `SL_3(q)` with simple spectrum on the adjoint module.
/// Without `t` the default `(primitive, 1)` is tried first, then the first
/// hit of the coset family.
pub fn check_a2(q: u64, t: Option<(u64, u64)>, twist: u32) -> Result<CaseCheck, SpectraError> {
    let f = Field::gf(q)?;
    let (rep, scale) = twisted(build_a2_adjoint(&f)?, twist)?;
    let mut out = CaseCheck::new("check a2", q);
    let first = t.unwrap_or((f.primitive(), 1));
    let spec = |t: (u64, u64)| ElementSpec::coset(CaseLabel::A2Adjoint, "w", TorusCoords::Native(vec![t.0, t.1]));
    let report = verify_element(&spec(first), &rep, Some(&a2_prediction(&f, first, scale)?))?;
    let mut body = json!({ "requested": report.to_json() });
    let chosen = if report.squarefree || t.is_some() {
        report
    } else {
        let opts = SearchOptions {
            stop_after_hits: Some(1),
            max_hits: 1,
            ..SearchOptions::default()
        };
        let search = family_search(&rep, q, Family::SigmaWeylT, &opts)?;
        body["search"] = search.to_json();
        match search.hits.first() {
            Some(hit) => {
                let c = hit.element.torus.values();
                verify_element(&hit.element, &rep, Some(&a2_prediction(&f, (c[0], c[1]), scale)?))?
            }
            None => report,
        }
    };
    let c = chosen.element.torus.values();
    let membership = membership_sl3(&f, q, c[0], c[1])?;
    out.expect("element lies in SL3(q) coset", membership.holds);
    out.expect("coset element with simple spectrum", chosen.squarefree);
    out.expect("prediction matches charpoly", chosen.prediction_match == Some(true));
    body["membership"] = json!(membership);
    body["chosen"] = chosen.to_json();
    out.body = body;
    Ok(out)
}

/// `sigma n_w t` with `t = diag(t_1, 1, t_1^{-1})`, `t_1` of order `q + 1`
/// in `GF(q^2)`.
pub fn check_su3(q: u64, twist: u32) -> Result<CaseCheck, SpectraError> {
    let big = Field::gf(q * q)?;
    let (rep, scale) = twisted(build_a2_adjoint(&big)?, twist)?;
    let t1 = big.pow(big.primitive(), q - 1);
    let membership = membership_su3(&big, q, t1, 1)?;
    let e = ElementSpec::coset(CaseLabel::A2Adjoint, "w", TorusCoords::Native(vec![t1, 1]));
    let report = verify_element(&e, &rep, Some(&a2_prediction(&big, (t1, 1), scale)?))?.with_q(q);
    let mut out = CaseCheck::new("check su3", q);
    out.expect("element lies in SU3(q) coset", membership.holds);
    out.expect("t1 has order q + 1", big.order_of(t1) == Some(q + 1));
    out.expect("coset element with simple spectrum", report.squarefree);
    out.expect("prediction matches charpoly", report.prediction_match == Some(true));
    out.body = json!({"membership": membership, "spectrum": report.to_json()});
    Ok(out)
}

/// Exhaustive coset family search on the `2 omega_2` module of `SL_4(q)`.
pub fn check_a3_negative(q: u64, opts: &SearchOptions, twist: u32) -> Result<CaseCheck, SpectraError> {
    let f = Field::gf(q)?;
    let (rep, _) = twisted(build_a3_two_omega2(&f)?, twist)?;
    let search = family_search(&rep, q, Family::SigmaWeylT, opts)?;
    let gu1 = gu1_property_check(&rep, 2);
    let mut out = CaseCheck::new("check a3-negative", q);
    out.expect("family exhausted", search.exhaustive);
    out.expect("no simple spectrum element in the family", search.hits_total == 0);
    out.body = json!({"search": search.to_json(), "weight_condition": gu1});
    Ok(out)
}

/// Coset family on the induced module, with the block criterion.
pub fn check_induced_negative(q: u64, twist: u32) -> Result<CaseCheck, SpectraError> {
    let f = Field::gf(q)?;
    let (rep, _) = twisted(build_a3_induced_pair(&f)?, twist)?;
    let r = induced_equivalence_check(&rep, q)?;
    let mut out = CaseCheck::new("check induced-negative", q);
    out.expect("no simple spectrum element in the family", r.negative_claim_holds());
    out.expect("block criterion agrees on every candidate", r.biconditional_holds());
    out.expect("square preserves both blocks", r.square_preserves_blocks);
    out.body = r.to_json();
    Ok(out)
}

/// `sigma t` on the 26-dimensional module of `D_4(q)`, `q` even, with
/// epsilon coordinates `(t_1, t_2, t_3, 1)`; optionally also the wider
/// `sigma n_w t` family.
pub fn check_d4(
    q: u64,
    t: Option<[u64; 3]>,
    family: Option<&SearchOptions>,
    twist: u32,
) -> Result<CaseCheck, SpectraError> {
    let f = Field::gf(q)?;
    let construction = build_d4_char2(&f)?;
    let (rep, scale) = twisted(construction.rep, twist)?;
    let xi = f.primitive();
    let t = t.unwrap_or([xi, f.pow(xi, 2), 1]);
    let e = ElementSpec::coset(CaseLabel::D4Char2, "e", TorusCoords::Epsilon(t.to_vec()));
    let a: [u64; 4] = e.native_torus(&f)?.try_into().expect("four root values");
    let membership = membership_d4(&f, q, &a);
    let m1m2 = m1_m2_condition(&f, t[0], t[1], t[2], q);
    let predicted = predicted_charpoly_d4_epsilon(&f, &t)?.scaled(scale);
    let report = verify_element(&e, &rep, Some(&predicted))?;
    let v0 = v0_verdict(q)?;
    let ev = report.evidence.as_ref().expect("prediction given");
    let mut out = CaseCheck::new("check d4", q);
    out.expect("element lies in D4(q) coset", membership.holds);
    out.expect("value sets force a squarefree prediction", m1m2.sufficient);
    out.expect("root sector factors divide the charpoly", ev.root_sector_divides);
    out.expect("prediction matches charpoly", report.prediction_match == Some(true));
    out.expect("sigma t has simple spectrum", report.squarefree);
    let mut body = json!({
        "membership": membership,
        "value_sets": m1m2,
        "spectrum": report.to_json(),
        "zero_weight_space": v0.to_json(),
    });
    if let Some(opts) = family {
        let search = family_search(&rep, q, Family::SigmaWeylT, opts)?;
        body["family_search"] = search.to_json();
    }
    out.body = body;
    Ok(out)
}

/// The twisted torus element of `^3D_4(q)` on the module over `GF(q^3)`.
pub fn check_3d4(q: u64, twist: u32) -> Result<CaseCheck, SpectraError> {
    let p = twisted_torus_parameters(q)?;
    let construction = build_d4_char2(&p.big)?;
    let (rep, scale) = twisted(construction.rep, twist)?;
    let triality = diagram_automorphism(&build_root_system(TypeLetter::D, 4)?, 3)?;
    let membership = membership_3d4(&p.big, q, &p.root_values, &triality.perm);
    let e = ElementSpec::coset(CaseLabel::D4Char2, "e", TorusCoords::Native(p.root_values.to_vec()));
    // cube roots of unity lie in GF(4), so a twist scalar is already in GF(q)
    let predicted = predicted_charpoly_3d4(&p.small, q, p.y, p.u, p.branch)?.scaled(scale);
    let generic = predicted_charpoly_d4(&p.big, &p.root_values)?.scaled(scale);
    let routes_agree = predicted.expand().embed(&p.big)? == generic.expand();
    let report = verify_element(&e, &rep, Some(&predicted))?.with_q(q);
    let v0 = v0_verdict(q)?;
    let ev = report.evidence.as_ref().expect("prediction given");
    let mut out = CaseCheck::new("check 3d4", q);
    out.expect("element lies in the twisted group coset", membership.holds);
    out.expect("twisted and root-value predictions agree", routes_agree);
    out.expect("root sector factors divide the charpoly", ev.root_sector_divides);
    out.expect("prediction matches charpoly", report.prediction_match == Some(true));
    out.expect("sigma t has simple spectrum", report.squarefree);
    out.body = json!({
        "parameters": p.to_json(),
        "membership": membership,
        "spectrum": report.to_json(),
        "zero_weight_space": v0.to_json(),
    });
    Ok(out)
}

/// Builds the module for a case label over `GF(q)`.
pub fn build_case(case: CaseLabel, q: u64) -> Result<ExplicitRep, SpectraError> {
    let f = Field::gf(q)?;
    Ok(match case {
        CaseLabel::A2Adjoint => build_a2_adjoint(&f)?,
        CaseLabel::A3TwoOmega2 => build_a3_two_omega2(&f)?,
        CaseLabel::A3Induced => build_a3_induced_pair(&f)?,
        CaseLabel::D4Char2 => build_d4_char2(&f)?.rep,
    })
}

/// Spectrum report for a user-supplied element, with the prediction where
/// one exists for its shape.
pub fn spectrum_of(case: CaseLabel, q: u64, element: &Value, twist: u32) -> Result<SpectrumReport, SpectraError> {
    let (rep, scale) = twisted(build_case(case, q)?, twist)?;
    let f = rep.field().clone();
    let e = ElementSpec::from_json(case, &f, element)?;
    let c = e.native_torus(&f)?;
    let predicted = match (case, e.sigma_power, e.weyl_id.as_str()) {
        (CaseLabel::A2Adjoint, 1, "w") if c.len() == 2 => Some(a2_prediction(&f, (c[0], c[1]), scale)?),
        (CaseLabel::D4Char2, 1, "e") if c.len() == 4 => {
            Some(predicted_charpoly_d4(&f, &[c[0], c[1], c[2], c[3]])?.scaled(scale))
        }
        _ => None,
    };
    verify_element(&e, &rep, predicted.as_ref())
}
