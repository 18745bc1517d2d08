//! Field descriptors for GF(p) and canonical extension towers GF(p^k).
//!
//! Elements are handled as packed `u64` codes: the coefficient vector over
//! the coefficient field (the parent, or GF(p) for a plain extension) is
//! stored little-endian in base `|coefficient field|`. Because every level
//! uses the same packing, the code of an element is also its flattened
//! GF(p)-coefficient vector written in base p, and an element of a
//! subfield on the parent chain has the same code in every extension.
//!
//! Enumeration order ("rank") is lexicographic on coefficient vectors with
//! the constant coefficient most significant; all "first found" choices
//! (modulus, primitive element, canonical roots) refer to it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use super::poly;
use super::GaloisError;

/// Fields of at most this many elements get full addition and
/// multiplication tables.
const FULL_TABLE_LIMIT: u64 = 256;
/// Fields of at most this many elements get exp/log tables.
const LOG_TABLE_LIMIT: u64 = 1 << 16;

#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    id: u64,
    p: u64,
    total_degree: u32,
    degree: u32,
    size: u64,
    parent: Option<Field>,
    /// Coefficient field for the packed representation: the parent, or
    /// GF(p) for an extension given without a parent. `None` for GF(p).
    coeff: Option<Field>,
    coeff_size: u64,
    /// Monic modulus over the coefficient field, `degree + 1` codes.
    modulus: Vec<u64>,
    tables: Tables,
    primitive: OnceLock<u64>,
    order_factors: OnceLock<Vec<u64>>,
    embed_roots: Mutex<HashMap<u64, u64>>,
}

enum Tables {
    None,
    Full { add: Vec<u32>, mul: Vec<u32>, inv: Vec<u32> },
    Log { exp: Vec<u32>, log: Vec<u32> },
}

type FieldKey = (u64, u32, Option<u64>);

static FIELDS: LazyLock<Mutex<HashMap<FieldKey, Field>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static NEXT_ID: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(1);

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns the canonical field of `p^k` elements, optionally as an
/// extension of `parent`. Equal arguments always yield the same descriptor.
pub fn make_field(p: u64, k: u32, parent: Option<&Field>) -> Result<Field, GaloisError> {
    if !is_prime(p) {
        return Err(GaloisError::CompositeCharacteristic(p));
    }
    if k < 1 {
        return Err(GaloisError::DegreeZero);
    }
    if let Some(par) = parent {
        if par.characteristic() != p {
            return Err(GaloisError::FieldMismatch);
        }
        if k % par.total_degree() != 0 {
            return Err(GaloisError::NotAnExtension {
                parent_degree: par.total_degree(),
                degree: k,
            });
        }
    }
    let size = (p as u128).checked_pow(k).filter(|s| *s <= u64::MAX as u128);
    let size = size.ok_or(GaloisError::TooLarge)? as u64;

    let key: FieldKey = (p, k, parent.map(|f| f.0.id));
    if let Some(f) = FIELDS.lock().unwrap().get(&key) {
        return Ok(f.clone());
    }

    let (coeff, degree) = match parent {
        Some(par) => (Some(par.clone()), k / par.total_degree()),
        None if k == 1 => (None, 1),
        None => (Some(make_field(p, 1, None)?), k),
    };
    let modulus = match &coeff {
        None => vec![0, 1],
        Some(cf) => canonical_modulus(cf, degree),
    };
    let coeff_size = coeff.as_ref().map_or(p, |c| c.size());
    let mut inner = FieldInner {
        id: NEXT_ID.fetch_add(1, std::sync::atomic::Ordering::Relaxed),
        p,
        total_degree: k,
        degree,
        size,
        parent: parent.cloned(),
        coeff,
        coeff_size,
        modulus,
        tables: Tables::None,
        primitive: OnceLock::new(),
        order_factors: OnceLock::new(),
        embed_roots: Mutex::new(HashMap::new()),
    };
    inner.tables = build_tables(&inner);
    let field = Field(Arc::new(inner));

    let mut cache = FIELDS.lock().unwrap();
    Ok(cache.entry(key).or_insert(field).clone())
}

/// Lexicographically smallest monic irreducible of the given degree over
/// `cf`, coefficient tuples compared low degree first.
fn canonical_modulus(cf: &Field, degree: u32) -> Vec<u64> {
    if degree == 1 {
        return vec![0, 1];
    }
    let per = cf.size();
    let total = (per as u128).pow(degree);
    let mut r: u128 = 0;
    while r < total {
        let mut digits = vec![0u64; degree as usize];
        let mut rem = r;
        for i in (0..degree as usize).rev() {
            digits[i] = cf.from_rank((rem % per as u128) as u64);
            rem /= per as u128;
        }
        digits.push(1);
        if poly::is_irreducible(cf, &digits) {
            return digits;
        }
        r += 1;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn build_tables(f: &FieldInner) -> Tables {
    if f.size <= FULL_TABLE_LIMIT {
        let s = f.size as usize;
        let mut add = vec![0u32; s * s];
        let mut mul = vec![0u32; s * s];
        let mut inv = vec![0u32; s];
        for a in 0..s as u64 {
            for b in 0..s as u64 {
                add[a as usize * s + b as usize] = slow_add(f, a, b) as u32;
                let m = slow_mul(f, a, b);
                mul[a as usize * s + b as usize] = m as u32;
                if m == 1 {
                    inv[a as usize] = b as u32;
                }
            }
        }
        Tables::Full { add, mul, inv }
    } else if f.size <= LOG_TABLE_LIMIT {
        let g = first_primitive_slow(f);
        let n = (f.size - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; f.size as usize];
        let mut x = 1u64;
        for i in 0..n {
            exp[i] = x as u32;
            exp[i + n] = x as u32;
            log[x as usize] = i as u32;
            x = slow_mul(f, x, g);
        }
        Tables::Log { exp, log }
    } else {
        Tables::None
    }
}

fn slow_add(f: &FieldInner, mut a: u64, mut b: u64) -> u64 {
    if f.p == 2 {
        return a ^ b;
    }
    let (mut r, mut pw) = (0u64, 1u64);
    for _ in 0..f.total_degree {
        let d = ((a % f.p) + (b % f.p)) % f.p;
        r += d * pw;
        a /= f.p;
        b /= f.p;
        pw = pw.wrapping_mul(f.p);
    }
    r
}

fn slow_neg(f: &FieldInner, mut a: u64) -> u64 {
    if f.p == 2 {
        return a;
    }
    let (mut r, mut pw) = (0u64, 1u64);
    for _ in 0..f.total_degree {
        let d = (f.p - a % f.p) % f.p;
        r += d * pw;
        a /= f.p;
        pw = pw.wrapping_mul(f.p);
    }
    r
}

fn slow_mul(f: &FieldInner, a: u64, b: u64) -> u64 {
    match &f.coeff {
        None => ((a as u128 * b as u128) % f.p as u128) as u64,
        Some(cf) => {
            let da = unpack(a, f.coeff_size, f.degree);
            let db = unpack(b, f.coeff_size, f.degree);
            let prod = poly::mul(cf, &da, &db);
            let r = poly::rem(cf, &prod, &f.modulus);
            pack(&r, f.coeff_size)
        }
    }
}

fn slow_pow(f: &FieldInner, a: u64, mut e: u64) -> u64 {
    let (mut base, mut acc) = (a, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(f, acc, base);
        }
        base = slow_mul(f, base, base);
        e >>= 1;
    }
    acc
}

fn rank_to_code(f: &FieldInner, rank: u64) -> u64 {
    match &f.coeff {
        None => rank,
        Some(cf) => {
            let mut digits = vec![0u64; f.degree as usize];
            let mut rem = rank;
            for i in (0..f.degree as usize).rev() {
                digits[i] = cf.from_rank(rem % f.coeff_size);
                rem /= f.coeff_size;
            }
            pack(&digits, f.coeff_size)
        }
    }
}

fn first_primitive_slow(f: &FieldInner) -> u64 {
    let n = f.size - 1;
    let factors = prime_factors(n);
    (1..f.size)
        .map(|r| rank_to_code(f, r))
        .find(|&a| factors.iter().all(|&r| slow_pow(f, a, n / r) != 1))
        .expect("multiplicative group is cyclic")
}

pub(crate) fn unpack(mut code: u64, base: u64, len: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(len as usize);
    for _ in 0..len {
        out.push(code % base);
        code /= base;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub(crate) fn pack(digits: &[u64], base: u64) -> u64 {
    digits.iter().rev().fold(0u64, |acc, &d| acc * base + d)
}

impl Field {
    /// GF(q) for a prime power q, as a plain extension of the prime field.
    pub fn gf(q: u64) -> Result<Field, GaloisError> {
        let (p, k) = prime_power(q).ok_or(GaloisError::NotAPrimePower(q))?;
        make_field(p, k, None)
    }

    /// Extension of `self` of the given relative degree.
    pub fn extension(&self, relative_degree: u32) -> Result<Field, GaloisError> {
        make_field(self.characteristic(), self.total_degree() * relative_degree, Some(self))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Degree over the prime field.
    pub fn total_degree(&self) -> u32 {
        self.0.total_degree
    }

    /// Degree over the coefficient field (parent, or GF(p)).
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn size(&self) -> u64 {
        self.0.size
    }

    pub fn parent(&self) -> Option<&Field> {
        self.0.parent.as_ref()
    }

    pub(crate) fn coeff_field(&self) -> Option<&Field> {
        self.0.coeff.as_ref()
    }

    /// Monic modulus as coefficient-field codes, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub(crate) fn id(&self) -> u64 {
        self.0.id
    }

    pub fn prime_field(&self) -> Field {
        make_field(self.characteristic(), 1, None).expect("prime field")
    }

    #[inline]
    pub fn zero(&self) -> u64 {
        0
    }

    #[inline]
    pub fn one(&self) -> u64 {
        1
    }

    /// Image of an integer under Z -> GF(p) -> self.
    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.0.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.0.p == 2 {
            return a ^ b;
        }
        match &self.0.tables {
            Tables::Full { add, .. } => add[(a * self.0.size + b) as usize] as u64,
            _ if self.0.coeff.is_none() => {
                let s = a as u128 + b as u128;
                (s % self.0.p as u128) as u64
            }
            _ => slow_add(&self.0, a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if self.0.p == 2 {
            a
        } else if self.0.coeff.is_none() {
            (self.0.p - a) % self.0.p
        } else {
            slow_neg(&self.0, a)
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.0.tables {
            Tables::Full { mul, .. } => mul[(a * self.0.size + b) as usize] as u64,
            Tables::Log { exp, log } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize] as u64
                }
            }
            Tables::None => slow_mul(&self.0, a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(match &self.0.tables {
            Tables::Full { inv, .. } => inv[a as usize] as u64,
            Tables::Log { exp, log } => {
                let n = (self.0.size - 1) as u32;
                let l = log[a as usize];
                exp[((n - l) % n) as usize] as u64
            }
            Tables::None => slow_pow(&self.0, a, self.0.size - 2),
        })
    }

    pub fn div(&self, a: u64, b: u64) -> Option<u64> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^e` for a non-negative exponent.
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        if let Tables::Log { exp, log } = &self.0.tables {
            let n = self.0.size - 1;
            let l = (log[a as usize] as u128 * (e % n) as u128 % n as u128) as usize;
            return exp[l] as u64;
        }
        let e = e % (self.0.size - 1);
        let (mut base, mut acc, mut e) = (a, 1u64, e);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a signed exponent; `None` for zero to a negative power.
    pub fn pow_signed(&self, a: u64, e: i64) -> Option<u64> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            let n = self.size() - 1;
            let inv = self.inv(a)?;
            Some(self.pow(inv, e.unsigned_abs() % n))
        }
    }

    /// Position of `code` in the canonical enumeration.
    pub fn rank(&self, code: u64) -> u64 {
        match &self.0.coeff {
            None => code,
            Some(cf) => {
                let mut digits = unpack(code, self.0.coeff_size, self.0.degree);
                digits.resize(self.0.degree as usize, 0);
                digits
                    .iter()
                    .fold(0u64, |acc, &c| acc * self.0.coeff_size + cf.rank(c))
            }
        }
    }

    /// Element at position `rank` of the canonical enumeration.
    pub fn from_rank(&self, rank: u64) -> u64 {
        rank_to_code(&self.0, rank)
    }

    /// All element codes in canonical enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.size()).map(move |r| self.from_rank(r))
    }

    /// Nonzero element codes in canonical enumeration order.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (1..self.size()).map(move |r| self.from_rank(r))
    }

    pub(crate) fn group_order_factors(&self) -> &[u64] {
        self.0
            .order_factors
            .get_or_init(|| prime_factors(self.size() - 1))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut n = self.size() - 1;
        for &r in self.group_order_factors() {
            while n % r == 0 && self.pow(a, n / r) == 1 {
                n /= r;
            }
        }
        Some(n)
    }

    /// First element of full multiplicative order in enumeration order.
    pub fn primitive(&self) -> u64 {
        *self.0.primitive.get_or_init(|| match &self.0.tables {
            // the log tables are generated from the first primitive element
            Tables::Log { exp, .. } => exp[1] as u64,
            _ => {
                let n = self.size() - 1;
                let factors = self.group_order_factors().to_vec();
                self.units()
                    .find(|&a| factors.iter().all(|&r| self.pow(a, n / r) != 1))
                    .expect("multiplicative group is cyclic")
            }
        })
    }

    /// Coefficient-field codes of `a`, low degree first, length = degree.
    pub fn coefficients(&self, a: u64) -> Vec<u64> {
        let mut d = unpack(a, self.0.coeff_size, self.0.degree);
        d.resize(self.0.degree as usize, 0);
        d
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> u64 {
        pack(coeffs, self.0.coeff_size)
    }

    /// Whether `sub` sits on this field's coefficient chain, so that codes
    /// embed unchanged.
    pub(crate) fn has_on_chain(&self, sub: &Field) -> bool {
        if sub.total_degree() == 1 && sub.characteristic() == self.characteristic() {
            return true;
        }
        let mut cur = Some(self.clone());
        while let Some(f) = cur {
            if f == *sub {
                return true;
            }
            cur = f.0.coeff.clone();
        }
        false
    }

    /// Image of `code` (an element of `sub`) under the canonical embedding
    /// `sub -> self`.
    pub fn embed_code(&self, sub: &Field, code: u64) -> Result<u64, GaloisError> {
        if sub.characteristic() != self.characteristic()
            || self.total_degree() % sub.total_degree() != 0
        {
            return Err(GaloisError::FieldMismatch);
        }
        if self.has_on_chain(sub) {
            return Ok(code);
        }
        let cf = sub.coeff_field().expect("degree > 1 fields have a coefficient field");
        let root = self.embedding_root(sub)?;
        let coeffs = sub.coefficients(code);
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            let ec = self.embed_code(cf, c)?;
            acc = self.add(self.mul(acc, root), ec);
        }
        Ok(acc)
    }

    /// Smallest-rank root in `self` of the image of `sub`'s modulus.
    fn embedding_root(&self, sub: &Field) -> Result<u64, GaloisError> {
        if let Some(&r) = self.0.embed_roots.lock().unwrap().get(&sub.id()) {
            return Ok(r);
        }
        let cf = sub.coeff_field().expect("extension field");
        let image: Vec<u64> = sub
            .modulus()
            .iter()
            .map(|&c| self.embed_code(cf, c))
            .collect::<Result<_, _>>()?;
        let roots = super::roots::poly_roots(self, &image);
        let r = *roots.first().ok_or(GaloisError::FieldMismatch)?;
        self.0.embed_roots.lock().unwrap().insert(sub.id(), r);
        Ok(r)
    }

    /// Whether `a` lies in the subfield of order `q` (i.e. `a^q = a`).
    pub fn in_subfield(&self, a: u64, q: u64) -> bool {
        self.pow_exact(a, q) == a
    }

    /// `a^e` without reducing the exponent (valid for a = 0 too).
    pub(crate) fn pow_exact(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        self.pow(a, e)
    }
}

/// Splits a prime power into `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_factors(q)[0];
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.total_degree == other.0.total_degree
                && self.0.modulus == other.0.modulus
                && self.0.parent == other.0.parent)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}", self.0.p, self.0.total_degree)?;
        if let Some(par) = &self.0.parent {
            write!(f, " over {:?}", par)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.total_degree == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({})", self.0.size)
        }
    }
}
