//! Univariate polynomials over a [`Field`].
//!
//! The free functions work on little-endian coefficient slices of element
//! codes and are shared by field construction; [`Polynomial`] is the
//! public, field-carrying wrapper.

use std::fmt;

use super::field::{prime_factors, Field};
use super::{FieldElement, GaloisError};

pub(crate) fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn add(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.add(x, y)
        })
        .collect();
    trim(out)
}

pub(crate) fn sub(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.sub(x, y)
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(f: &Field, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(*b.last().unwrap()).unwrap();
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(*r.last().unwrap(), lead_inv);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = f.sub(r[shift + j], f.mul(c, bj));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    divrem(f, a, b).1
}

pub(crate) fn monic(f: &Field, a: &[u64]) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = f.inv(lead).unwrap();
            a.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

pub(crate) fn gcd(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub(crate) fn mulmod(f: &Field, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    rem(f, &mul(f, a, b), m)
}

/// `base^e mod m` by square-and-multiply.
pub(crate) fn powmod(f: &Field, base: &[u64], mut e: u128, m: &[u64]) -> Vec<u64> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn derivative(f: &Field, a: &[u64]) -> Vec<u64> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
        .collect();
    trim(out)
}

/// Rabin's irreducibility test for a monic polynomial over `f`.
pub(crate) fn is_irreducible(f: &Field, m: &[u64]) -> bool {
    let n = m.len() as u32 - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let q = f.size() as u128;
    let x = vec![0, 1];
    // x^(q^d) mod m, by repeated q-th powering
    let frob = |times: u32| -> Vec<u64> {
        let mut cur = x.clone();
        for _ in 0..times {
            cur = powmod(f, &cur, q, m);
        }
        cur
    };
    if sub(f, &frob(n), &x).iter().any(|&c| c != 0) {
        return false;
    }
    for r in prime_factors(n as u64) {
        let h = sub(f, &frob(n / r as u32), &x);
        if gcd(f, m, &h).len() != 1 {
            return false;
        }
    }
    true
}

/// A polynomial with coefficients in `field`, low degree first, trailing
/// zeros stripped. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(field: &Field, coeffs: Vec<u64>) -> Self {
        Polynomial {
            field: field.clone(),
            coeffs: trim(coeffs),
        }
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::new(field, vec![1])
    }

    pub fn x(field: &Field) -> Self {
        Self::new(field, vec![0, 1])
    }

    /// `x - c`.
    pub fn linear(field: &Field, c: u64) -> Self {
        Self::new(field, vec![field.neg(c), 1])
    }

    /// `x^k - c`.
    pub fn binomial(field: &Field, k: usize, c: u64) -> Self {
        let mut v = vec![0u64; k + 1];
        v[0] = field.neg(c);
        v[k] = field.add(v[k], 1);
        Self::new(field, v)
    }

    /// Product of linear factors over the given roots.
    pub fn from_roots(field: &Field, roots: &[u64]) -> Self {
        roots
            .iter()
            .fold(Self::one(field), |acc, &r| acc.mul(&Self::linear(field, r)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<(), GaloisError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GaloisError::FieldMismatch)
        }
    }

    /// Panics on a field mismatch; see [`Polynomial::try_add`].
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("polynomials over different fields")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, GaloisError> {
        self.check(other)?;
        Ok(Self::new(&self.field, add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other).expect("polynomials over different fields");
        Self::new(&self.field, sub(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("polynomials over different fields")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, GaloisError> {
        self.check(other)?;
        Ok(Self::new(&self.field, mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, c: u64) -> Self {
        let v = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Self::new(&self.field, v)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder with `deg r < deg g`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self), GaloisError> {
        self.check(g)?;
        if g.is_zero() {
            return Err(GaloisError::DivisionByZero);
        }
        let (q, r) = divrem(&self.field, &self.coeffs, &g.coeffs);
        Ok((Self::new(&self.field, q), Self::new(&self.field, r)))
    }

    /// Exact quotient, or `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        let (q, r) = self.divmod(g).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &Self) -> bool {
        !self.is_zero() && f.exact_div(self).is_some()
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, g: &Self) -> Result<Self, GaloisError> {
        self.check(g)?;
        Ok(Self::new(&self.field, gcd(&self.field, &self.coeffs, &g.coeffs)))
    }

    pub fn monic(&self) -> Self {
        Self::new(&self.field, monic(&self.field, &self.coeffs))
    }

    pub fn derivative(&self) -> Self {
        Self::new(&self.field, derivative(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// True iff the polynomial has no repeated root over the algebraic
    /// closure.
    pub fn is_squarefree(&self) -> Result<bool, GaloisError> {
        if self.is_zero() {
            return Err(GaloisError::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(true);
        }
        let d = self.derivative();
        if d.is_zero() {
            // f is a p-th power
            return Ok(false);
        }
        Ok(self.gcd(&d)?.is_constant())
    }

    /// Coefficient-wise image in a larger field.
    pub fn embed(&self, target: &Field) -> Result<Self, GaloisError> {
        let v = self
            .coeffs
            .iter()
            .map(|&c| target.embed_code(&self.field, c))
            .collect::<Result<_, _>>()?;
        Ok(Self::new(target, v))
    }

    /// Whether every coefficient lies in the subfield of order `q`.
    pub fn coefficients_in_subfield(&self, q: u64) -> bool {
        self.coeffs.iter().all(|&c| self.field.in_subfield(c, q))
    }

    /// The same polynomial over `sub`, when `sub` lies on this field's
    /// tower and contains every coefficient.
    pub fn restrict_to(&self, sub: &Field) -> Option<Self> {
        let ok = self.field.has_on_chain(sub)
            && self.coeffs.iter().all(|&c| c < sub.size() && self.field.in_subfield(c, sub.size()));
        ok.then(|| Self::new(sub, self.coeffs.clone()))
    }

    /// The polynomial g with g^p = self, when self has only p-th-power
    /// monomials.
    fn pth_root(&self) -> Self {
        let p = self.field.characteristic() as usize;
        let e = self.field.size() / self.field.characteristic();
        let v = self
            .coeffs
            .iter()
            .step_by(p)
            .map(|&c| self.field.pow_exact(c, e))
            .collect();
        Self::new(&self.field, v)
    }

    /// Squarefree decomposition: pairs `(g, m)` with `self` (made monic)
    /// equal to the product of `g^m`, each `g` squarefree.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Polynomial, u32)>, GaloisError> {
        if self.is_zero() {
            return Err(GaloisError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        sqf_into(&self.monic(), 1, &mut out);
        out.sort_by_key(|(_, m)| *m);
        Ok(out)
    }

    /// Largest multiplicity of any root over the algebraic closure
    /// (0 for constants).
    pub fn max_root_multiplicity(&self) -> Result<u32, GaloisError> {
        Ok(self
            .squarefree_decomposition()?
            .iter()
            .map(|(_, m)| *m)
            .max()
            .unwrap_or(0))
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_root_count(&self) -> Result<usize, GaloisError> {
        Ok(self
            .squarefree_decomposition()?
            .iter()
            .map(|(g, _)| g.degree().unwrap_or(0))
            .sum())
    }

    pub fn coefficient_elements(&self) -> Vec<FieldElement> {
        self.coeffs
            .iter()
            .map(|&c| FieldElement::from_code(&self.field, c))
            .collect()
    }
}

/// Operations accepted by [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    DivMod,
    Gcd,
    Derivative,
}

/// Result of [`poly_arith`]: a single polynomial, or quotient and remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyResult {
    Single(Polynomial),
    QuotRem(Polynomial, Polynomial),
}

pub fn poly_arith(f: &Polynomial, g: Option<&Polynomial>, op: PolyOp) -> Result<PolyResult, GaloisError> {
    let other = || g.ok_or(GaloisError::MissingOperand);
    Ok(match op {
        PolyOp::Add => PolyResult::Single(f.try_add(other()?)?),
        PolyOp::Mul => PolyResult::Single(f.try_mul(other()?)?),
        PolyOp::DivMod => {
            let (q, r) = f.divmod(other()?)?;
            PolyResult::QuotRem(q, r)
        }
        PolyOp::Gcd => PolyResult::Single(f.gcd(other()?)?),
        PolyOp::Derivative => PolyResult::Single(f.derivative()),
    })
}

fn sqf_into(f: &Polynomial, mult: u32, out: &mut Vec<(Polynomial, u32)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().characteristic() as u32;
    let d = f.derivative();
    if d.is_zero() {
        sqf_into(&f.pth_root(), mult * p, out);
        return;
    }
    let mut c = f.gcd(&d).unwrap();
    let mut w = f.exact_div(&c).unwrap();
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c).unwrap();
        let z = w.exact_div(&y).unwrap();
        if !z.is_constant() {
            out.push((z.monic(), i * mult));
        }
        i += 1;
        c = c.exact_div(&y).unwrap();
        w = y;
    }
    if !c.is_constant() {
        sqf_into(&c.pth_root(), mult * p, out);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = FieldElement::from_code(&self.field, c).to_string();
            match (i, c == 1) {
                (0, _) => write!(f, "{}", cs)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}*x", cs)?,
                (_, true) => write!(f, "x^{}", i)?,
                (_, false) => write!(f, "{}*x^{}", cs, i)?,
            }
        }
        Ok(())
    }
}
