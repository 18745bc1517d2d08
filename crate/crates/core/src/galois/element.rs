use std::fmt;

use super::field::{prime_power, Field};
use super::GaloisError;

/// An element of a finite field, as a field handle plus packed code.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i64),
}

impl FieldElement {
    /// Wraps a code; the caller guarantees `code < field.size()`.
    pub fn from_code(field: &Field, code: u64) -> Self {
        debug_assert!(code < field.size());
        FieldElement {
            field: field.clone(),
            code,
        }
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_code(field, 0)
    }

    pub fn one(field: &Field) -> Self {
        Self::from_code(field, 1)
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_code(field, field.from_int(n))
    }

    /// Element built from coefficient-field elements, low degree first.
    pub fn from_coefficients(field: &Field, coeffs: &[u64]) -> Result<Self, GaloisError> {
        if coeffs.len() > field.degree() as usize {
            return Err(GaloisError::BadEncoding("too many coefficients".into()));
        }
        let base = field.coeff_field().map_or(field.characteristic(), |c| c.size());
        if coeffs.iter().any(|&c| c >= base) {
            return Err(GaloisError::BadEncoding("coefficient out of range".into()));
        }
        Ok(Self::from_code(field, field.from_coefficients(coeffs)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    /// Coefficients over the coefficient field, low degree first.
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coefficients(self.code)
    }

    fn same(&self, other: &Self) -> Result<(), GaloisError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GaloisError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GaloisError> {
        self.same(other)?;
        Ok(Self::from_code(&self.field, self.field.add(self.code, other.code)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GaloisError> {
        self.same(other)?;
        Ok(Self::from_code(&self.field, self.field.sub(self.code, other.code)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GaloisError> {
        self.same(other)?;
        Ok(Self::from_code(&self.field, self.field.mul(self.code, other.code)))
    }

    pub fn div(&self, other: &Self) -> Result<Self, GaloisError> {
        self.same(other)?;
        let q = self
            .field
            .div(self.code, other.code)
            .ok_or(GaloisError::DivisionByZero)?;
        Ok(Self::from_code(&self.field, q))
    }

    pub fn neg(&self) -> Self {
        Self::from_code(&self.field, self.field.neg(self.code))
    }

    pub fn inv(&self) -> Result<Self, GaloisError> {
        let i = self.field.inv(self.code).ok_or(GaloisError::DivisionByZero)?;
        Ok(Self::from_code(&self.field, i))
    }

    /// Power with a signed exponent; negative exponents need a unit.
    pub fn pow(&self, e: i64) -> Result<Self, GaloisError> {
        let r = self
            .field
            .pow_signed(self.code, e)
            .ok_or(GaloisError::DivisionByZero)?;
        Ok(Self::from_code(&self.field, r))
    }

    /// Image in a field containing this one.
    pub fn embed(&self, target: &Field) -> Result<Self, GaloisError> {
        Ok(Self::from_code(target, target.embed_code(&self.field, self.code)?))
    }
}

/// Binary (or unary, for `Pow`) field arithmetic.
pub fn field_arith(
    a: &FieldElement,
    b: Option<&FieldElement>,
    op: ArithOp,
) -> Result<FieldElement, GaloisError> {
    let need = || b.ok_or(GaloisError::MissingOperand);
    match op {
        ArithOp::Add => a.add(need()?),
        ArithOp::Sub => a.sub(need()?),
        ArithOp::Mul => a.mul(need()?),
        ArithOp::Div => a.div(need()?),
        ArithOp::Pow(n) => a.pow(n),
    }
}

/// Smallest n >= 1 with a^n = 1.
pub fn element_order(a: &FieldElement) -> Result<u64, GaloisError> {
    a.field.order_of(a.code).ok_or(GaloisError::ZeroElement)
}

/// First element of order `|F| - 1` in canonical enumeration order.
pub fn primitive_element(f: &Field) -> FieldElement {
    FieldElement::from_code(f, f.primitive())
}

/// `a^q` for a power `q` of the characteristic.
pub fn frobenius_power(a: &FieldElement, q: u64) -> Result<FieldElement, GaloisError> {
    match prime_power(q) {
        Some((p, _)) if p == a.field.characteristic() => {
            Ok(FieldElement::from_code(&a.field, a.field.pow_exact(a.code, q)))
        }
        _ => Err(GaloisError::BadFrobeniusBase(q)),
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field.coeff_field() {
            None => write!(f, "{}", self.code),
            Some(_) => {
                let v = super::serial::element_to_json(self);
                write!(f, "{}", v)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;

    #[test]
    fn gf7_arithmetic() {
        let f = make_field(7, 1, None).unwrap();
        let three = FieldElement::from_int(&f, 3);
        let five = FieldElement::from_int(&f, 5);
        assert_eq!(field_arith(&three, Some(&five), ArithOp::Mul).unwrap().code(), 1);
        assert_eq!(field_arith(&three, None, ArithOp::Pow(-1)).unwrap().code(), 5);
        assert_eq!(
            three.div(&FieldElement::zero(&f)).unwrap_err(),
            GaloisError::DivisionByZero
        );
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = FieldElement::one(&make_field(5, 1, None).unwrap());
        let b = FieldElement::one(&make_field(7, 1, None).unwrap());
        assert_eq!(a.add(&b).unwrap_err(), GaloisError::FieldMismatch);
    }

    #[test]
    fn frobenius_fixes_gf16() {
        let f = make_field(2, 4, None).unwrap();
        for c in f.elements() {
            let a = FieldElement::from_code(&f, c);
            assert_eq!(frobenius_power(&a, 16).unwrap(), a);
        }
        let a = FieldElement::one(&f);
        assert_eq!(
            frobenius_power(&a, 6).unwrap_err(),
            GaloisError::BadFrobeniusBase(6)
        );
    }

    #[test]
    fn orders() {
        let f = make_field(7, 1, None).unwrap();
        assert_eq!(element_order(&FieldElement::from_int(&f, 3)).unwrap(), 6);
        assert_eq!(element_order(&FieldElement::one(&f)).unwrap(), 1);
        assert_eq!(
            element_order(&FieldElement::zero(&f)).unwrap_err(),
            GaloisError::ZeroElement
        );
        assert_eq!(primitive_element(&f).code(), 3);
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(primitive_element(&f2).code(), 1);
    }

    #[test]
    fn primitive_of_gf16_matches_enumeration_oracle() {
        let f = make_field(2, 4, None).unwrap();
        // oracle: walk the enumeration, count distinct powers
        let first = f
            .units()
            .find(|&a| {
                let mut seen = std::collections::HashSet::new();
                let mut x = 1u64;
                for _ in 0..15 {
                    x = f.mul(x, a);
                    seen.insert(x);
                }
                seen.len() == 15
            })
            .unwrap();
        let g = primitive_element(&f);
        assert_eq!(g.code(), first);
        assert_eq!(element_order(&g).unwrap(), 15);
    }

    #[test]
    fn frobenius_twice_in_cubic_extension() {
        let q = 4u64;
        let base = make_field(2, 2, None).unwrap();
        let ext = base.extension(3).unwrap();
        let y = primitive_element(&ext);
        assert_eq!(element_order(&y).unwrap(), q.pow(3) - 1);
        let twice = frobenius_power(&frobenius_power(&y, q).unwrap(), q).unwrap();
        assert_eq!(twice, y.pow((q * q) as i64).unwrap());
    }
}
