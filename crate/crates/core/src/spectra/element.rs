use serde_json::{json, Value};

use super::SpectraError;
use crate::galois::serial::{code_json, element_from_json};
use crate::galois::Field;
use crate::linalg::Matrix;
use crate::reps::{root_values_from_epsilon, CaseLabel, ExplicitRep};

/// How the torus part of an element is written down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusCoords {
    /// The module's own coordinates: `(t_1, .., t_n)` of
    /// `diag(t_1, .., t_n, (t_1 .. t_n)^{-1})` for the `SL` cases, root
    /// values for `D_4`.
    Native(Vec<u64>),
    /// `D_4` only: `(t_1, t_2, t_3)` or `(t_1, .., t_4)`; a missing `t_4`
    /// is 1.
    Epsilon(Vec<u64>),
}

impl TorusCoords {
    pub fn values(&self) -> &[u64] {
        match self {
            TorusCoords::Native(v) | TorusCoords::Epsilon(v) => v,
        }
    }

    fn basis_name(&self) -> &'static str {
        match self {
            TorusCoords::Native(_) => "native",
            TorusCoords::Epsilon(_) => "epsilon",
        }
    }
}

/// `sigma^sigma_power * n_w * t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSpec {
    pub case: CaseLabel,
    pub sigma_power: u32,
    pub weyl_id: String,
    pub torus: TorusCoords,
}

impl ElementSpec {
    pub fn coset(case: CaseLabel, weyl_id: &str, torus: TorusCoords) -> Self {
        ElementSpec {
            case,
            sigma_power: 1,
            weyl_id: weyl_id.to_string(),
            torus,
        }
    }

    pub fn inner(case: CaseLabel, weyl_id: &str, torus: TorusCoords) -> Self {
        ElementSpec {
            case,
            sigma_power: 0,
            weyl_id: weyl_id.to_string(),
            torus,
        }
    }

    /// Coordinates in the module's native convention.
    pub fn native_torus(&self, field: &Field) -> Result<Vec<u64>, SpectraError> {
        match &self.torus {
            TorusCoords::Native(v) => Ok(v.clone()),
            TorusCoords::Epsilon(v) => {
                if self.case != CaseLabel::D4Char2 {
                    return Err(SpectraError::BadElement(
                        "epsilon coordinates are only defined for d4-w2-char2".into(),
                    ));
                }
                let t: [u64; 4] = match v.len() {
                    3 => [v[0], v[1], v[2], 1],
                    4 => [v[0], v[1], v[2], v[3]],
                    n => return Err(SpectraError::BadElement(format!("{} epsilon coordinates", n))),
                };
                root_values_from_epsilon(field, &t)
                    .map(Vec::from)
                    .ok_or_else(|| SpectraError::BadElement("epsilon coordinates must be nonzero".into()))
            }
        }
    }

    pub fn to_json(&self, field: &Field) -> Value {
        let torus: Vec<Value> = self.torus.values().iter().map(|&c| code_json(field, c)).collect();
        json!({
            "sigma_power": self.sigma_power,
            "weyl_id": self.weyl_id,
            "torus": torus,
            "torus_basis": self.torus.basis_name(),
        })
    }

    /// Parses `{sigma_power, weyl_id, torus, torus_basis?}`; torus entries
    /// are element encodings over `field` or bare integers.
    pub fn from_json(case: CaseLabel, field: &Field, v: &Value) -> Result<Self, SpectraError> {
        let bad = |m: &str| SpectraError::BadElement(m.to_string());
        let sigma_power = v
            .get("sigma_power")
            .map_or(Some(1), Value::as_u64)
            .ok_or_else(|| bad("sigma_power must be 0 or 1"))?;
        if sigma_power > 1 {
            return Err(bad("sigma_power must be 0 or 1"));
        }
        let weyl_id = v
            .get("weyl_id")
            .map_or(Some("e"), Value::as_str)
            .ok_or_else(|| bad("weyl_id must be a string"))?
            .to_string();
        let coords = v
            .get("torus")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("torus must be an array"))?
            .iter()
            .map(|c| Ok(element_from_json(field, c)?.code()))
            .collect::<Result<Vec<u64>, SpectraError>>()?;
        let torus = match v.get("torus_basis").and_then(Value::as_str).unwrap_or("native") {
            "native" => TorusCoords::Native(coords),
            "epsilon" => TorusCoords::Epsilon(coords),
            other => return Err(SpectraError::BadElement(format!("unknown torus_basis {}", other))),
        };
        Ok(ElementSpec {
            case,
            sigma_power: sigma_power as u32,
            weyl_id,
            torus,
        })
    }
}

/// The matrix of the element on the module.
pub fn realize(element: &ElementSpec, rep: &ExplicitRep) -> Result<Matrix, SpectraError> {
    if element.case != rep.label() {
        return Err(SpectraError::CaseMismatch {
            element: element.case,
            rep: rep.label(),
        });
    }
    let coords = element.native_torus(rep.field())?;
    let t = rep.torus_eval(&coords)?;
    let wt = rep.weyl_eval(&element.weyl_id)?.mul(&t);
    Ok(match element.sigma_power {
        0 => wt,
        k => rep.sigma_matrix().pow(k as u64).mul(&wt),
    })
}

/// Weyl parts of the coset family: the representatives other than the
/// identity for the `SL` cases, all of `W` for `D_4`.
pub fn coset_weyl_ids(rep: &ExplicitRep) -> Vec<String> {
    let reps = rep.weyl_representatives();
    match rep.label() {
        CaseLabel::D4Char2 => reps.iter().map(|w| w.id.clone()).collect(),
        _ => reps.iter().skip(1).map(|w| w.id.clone()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::build_a2_adjoint;

    #[test]
    fn coset_element_squares_into_the_torus() {
        let f = Field::gf(7).unwrap();
        let rep = build_a2_adjoint(&f).unwrap();
        let h = realize(&ElementSpec::coset(CaseLabel::A2Adjoint, "w", TorusCoords::Native(vec![3, 1])), &rep).unwrap();
        // h^2 = diag(t1/t2, t2/t1, 1)
        let s = f.div(3, 1).unwrap();
        let g = ElementSpec::inner(CaseLabel::A2Adjoint, "e", TorusCoords::Native(vec![s, f.inv(s).unwrap()]));
        assert_eq!(h.mul(&h), realize(&g, &rep).unwrap());
    }

    #[test]
    fn json_roundtrip_and_mismatch() {
        let f = Field::gf(7).unwrap();
        let rep = build_a2_adjoint(&f).unwrap();
        let e = ElementSpec::coset(CaseLabel::A2Adjoint, "w", TorusCoords::Native(vec![3, 1]));
        let v = e.to_json(&f);
        assert_eq!(v["torus"], json!([[3], [1]]));
        assert_eq!(ElementSpec::from_json(CaseLabel::A2Adjoint, &f, &v).unwrap(), e);
        let plain = json!({"sigma_power": 1, "weyl_id": "w", "torus": [3, 1]});
        assert_eq!(ElementSpec::from_json(CaseLabel::A2Adjoint, &f, &plain).unwrap(), e);
        let wrong = ElementSpec { case: CaseLabel::A3Induced, ..e };
        assert!(matches!(realize(&wrong, &rep), Err(SpectraError::CaseMismatch { .. })));
    }
}
