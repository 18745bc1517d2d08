//! JSON encodings: an element of a field with a parent is the array of its
//! parent-field coefficients (recursively); an element of a field without
//! a parent is its array of GF(p) coefficients, little-endian by degree.

use serde_json::{json, Value};

use super::field::{make_field, Field};
use super::{FieldElement, GaloisError};

fn code_to_json(f: &Field, code: u64) -> Value {
    let coeffs = f.coefficients(code);
    match f.parent() {
        Some(par) => Value::Array(coeffs.iter().map(|&c| code_to_json(par, c)).collect()),
        None => Value::Array(coeffs.iter().map(|&c| json!(c)).collect()),
    }
}

pub fn element_to_json(a: &FieldElement) -> Value {
    code_to_json(a.field(), a.code())
}

pub(crate) fn code_json(f: &Field, code: u64) -> Value {
    code_to_json(f, code)
}

fn code_from_json(f: &Field, v: &Value) -> Result<u64, GaloisError> {
    let arr = v
        .as_array()
        .ok_or_else(|| GaloisError::BadEncoding(format!("expected array, got {}", v)))?;
    if arr.len() > f.degree() as usize {
        return Err(GaloisError::BadEncoding(format!(
            "{} coefficients for a degree-{} field",
            arr.len(),
            f.degree()
        )));
    }
    let coeffs = match f.parent() {
        Some(par) => arr
            .iter()
            .map(|c| code_from_json(par, c))
            .collect::<Result<Vec<_>, _>>()?,
        None => arr
            .iter()
            .map(|c| {
                c.as_u64()
                    .filter(|&n| n < f.characteristic())
                    .ok_or_else(|| GaloisError::BadEncoding(format!("bad coefficient {}", c)))
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    Ok(f.from_coefficients(&coeffs))
}

/// Parses an element; a bare integer is accepted as a prime-field constant.
pub fn element_from_json(f: &Field, v: &Value) -> Result<FieldElement, GaloisError> {
    if let Some(n) = v.as_i64() {
        return Ok(FieldElement::from_int(f, n));
    }
    Ok(FieldElement::from_code(f, code_from_json(f, v)?))
}

pub fn field_to_json(f: &Field) -> Value {
    let modulus: Vec<Value> = match f.parent() {
        Some(par) => f.modulus().iter().map(|&c| code_to_json(par, c)).collect(),
        None => f.modulus().iter().map(|&c| json!(c)).collect(),
    };
    let mut obj = json!({
        "p": f.characteristic(),
        "k": f.total_degree(),
        "modulus": modulus,
    });
    if let Some(par) = f.parent() {
        obj["parent"] = field_to_json(par);
    }
    obj
}

/// Rebuilds a descriptor and checks the stored modulus is the canonical one.
pub fn field_from_json(v: &Value) -> Result<Field, GaloisError> {
    let p = v["p"]
        .as_u64()
        .ok_or_else(|| GaloisError::BadEncoding("missing p".into()))?;
    let k = v["k"]
        .as_u64()
        .ok_or_else(|| GaloisError::BadEncoding("missing k".into()))? as u32;
    let parent = match v.get("parent") {
        Some(pv) if !pv.is_null() => Some(field_from_json(pv)?),
        _ => None,
    };
    let f = make_field(p, k, parent.as_ref())?;
    if v.get("modulus").is_some_and(|m| *m != field_to_json(&f)["modulus"]) {
        return Err(GaloisError::BadEncoding("non-canonical modulus".into()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodings_nest_per_tower_level() {
        let gf7 = make_field(7, 1, None).unwrap();
        assert_eq!(element_to_json(&FieldElement::from_int(&gf7, 3)), json!([3]));
        let gf16 = make_field(2, 4, None).unwrap();
        let e = FieldElement::from_code(&gf16, 0b1011);
        assert_eq!(element_to_json(&e), json!([1, 1, 0, 1]));
        let tower = gf16.extension(3).unwrap();
        let t = FieldElement::from_code(&tower, 0b1011 + (1 << 8));
        assert_eq!(element_to_json(&t), json!([[1, 1, 0, 1], [0, 0, 0, 0], [1, 0, 0, 0]]));
        assert_eq!(element_from_json(&tower, &element_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn descriptor_roundtrip() {
        let gf16 = make_field(2, 4, None).unwrap();
        let tower = gf16.extension(3).unwrap();
        let v = field_to_json(&tower);
        assert_eq!(v["p"], 2);
        assert_eq!(v["k"], 12);
        assert_eq!(field_from_json(&v).unwrap(), tower);
    }
}
