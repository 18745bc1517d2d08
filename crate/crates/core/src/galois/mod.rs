//! Exact arithmetic in GF(p), canonical towers GF(p^k), and polynomials
//! over them.

mod element;
mod field;
pub(crate) mod poly;
mod roots;
pub mod serial;

pub use element::{element_order, field_arith, frobenius_power, primitive_element, ArithOp, FieldElement};
pub use field::{make_field, prime_power, Field};
pub use poly::{poly_arith, PolyOp, PolyResult, Polynomial};
pub use roots::all_kth_roots;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("characteristic {0} is not prime")]
    CompositeCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("degree {degree} is not a multiple of the parent degree {parent_degree}")]
    NotAnExtension { parent_degree: u32, degree: u32 },
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("field has more than 2^64 elements")]
    TooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("{0} is not a power of the characteristic")]
    BadFrobeniusBase(u64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("binary operation needs a second operand")]
    MissingOperand,
    #[error("malformed encoding: {0}")]
    BadEncoding(String),
}
