use std::fmt;

use serde_json::{json, Value};

use super::LinalgError;
use crate::galois::serial::{element_from_json, element_to_json, field_from_json, field_to_json};
use crate::galois::{Field, FieldElement};

/// Dense row-major matrix of field-element codes.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::scalar(field, n, 1)
    }

    pub fn scalar(field: &Field, n: usize, c: u64) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn diagonal(field: &Field, diag: &[u64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn from_rows(field: &Field, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Matrix from small signed integers, reduced into the prime field.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&x| field.from_int(x))
            })
            .collect();
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Companion matrix of a monic polynomial given low degree first.
    pub fn companion(field: &Field, monic: &[u64]) -> Self {
        let n = monic.len() - 1;
        let mut m = Self::zeros(field, n, n);
        for i in 1..n {
            m.set(i, i - 1, 1);
        }
        for i in 0..n {
            m.set(i, n - 1, field.neg(monic[i]));
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::from_code(&self.field, self.get(i, j))
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn same_field(&self, other: &Self) -> Result<(), LinalgError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(LinalgError::FieldMismatch)
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = f.add(*o, f.mul(a, b));
                    }
                }
            }
        }
        Ok(Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    /// Panics on mismatched shapes or fields.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix product")
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = &self.field;
        Matrix {
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
            ..self.clone()
        }
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j) == 0))
    }

    /// The common diagonal value if this is a scalar matrix.
    pub fn scalar_value(&self) -> Option<u64> {
        if !self.is_square() || !self.is_diagonal() {
            return None;
        }
        let c = if self.rows == 0 { 1 } else { self.get(0, 0) };
        (0..self.rows).all(|i| self.get(i, i) == c).then_some(c)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(&self.field, rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn block_diagonal(blocks: &[&Matrix]) -> Result<Self, LinalgError> {
        let field = blocks.first().ok_or(LinalgError::Empty)?.field.clone();
        if blocks.iter().any(|b| b.field != field) {
            return Err(LinalgError::FieldMismatch);
        }
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(&field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(m)
    }

    /// Entrywise image in an extension field.
    pub fn embed(&self, target: &Field) -> Result<Self, LinalgError> {
        if *target == self.field {
            return Ok(self.clone());
        }
        let data = self
            .data
            .iter()
            .map(|&a| target.embed_code(&self.field, a))
            .collect::<Result<_, _>>()?;
        Ok(Matrix {
            field: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Entrywise map `a -> a^e`.
    pub fn map_pow(&self, e: u64) -> Self {
        let f = &self.field;
        Matrix {
            data: self.data.iter().map(|&a| f.pow(a, e)).collect(),
            ..self.clone()
        }
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let f = &self.field;
        let mut a = self.clone();
        let mut inv = Self::identity(f, n);
        for col in 0..n {
            let piv = (col..n).find(|&r| a.get(r, col) != 0).ok_or(LinalgError::Singular)?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let s = f.inv(a.get(col, col)).expect("nonzero pivot");
            a.scale_row(col, s);
            inv.scale_row(col, s);
            for r in 0..n {
                let c = a.get(r, col);
                if r != col && c != 0 {
                    let m = f.neg(c);
                    a.add_row_multiple(r, col, m);
                    inv.add_row_multiple(r, col, m);
                }
            }
        }
        Ok(inv)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, s: u64) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            self.set(r, j, self.field.mul(v, s));
        }
    }

    /// row[dst] += m * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, m: u64) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s != 0 {
                let v = self.get(dst, j);
                self.set(dst, j, self.field.add(v, self.field.mul(m, s)));
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .data
            .iter()
            .map(|&a| element_to_json(&FieldElement::from_code(&self.field, a)))
            .collect();
        json!({
            "field": field_to_json(&self.field),
            "rows": self.rows,
            "cols": self.cols,
            "entries": entries,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, LinalgError> {
        let field = field_from_json(&v["field"])?;
        let dim = |key: &str| {
            v[key]
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| LinalgError::BadEncoding(format!("missing {}", key)))
        };
        let (rows, cols) = (dim("rows")?, dim("cols")?);
        let entries = v["entries"]
            .as_array()
            .ok_or_else(|| LinalgError::BadEncoding("missing entries".into()))?;
        let data = entries
            .iter()
            .map(|e| element_from_json(&field, e).map(|x| x.code()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(&field, rows, cols, data)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;

    #[test]
    fn inverse_roundtrip() {
        let f = make_field(7, 1, None).unwrap();
        let m = Matrix::from_ints(&f, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 3));
        let sing = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse().unwrap_err(), LinalgError::Singular);
    }

    #[test]
    fn json_roundtrip() {
        let f = make_field(2, 4, None).unwrap();
        let m = Matrix::from_fn(&f, 2, 3, |i, j| ((i * 3 + j) % 16) as u64);
        let v = m.to_json();
        assert_eq!(v["rows"], 2);
        assert_eq!(Matrix::from_json(&v).unwrap(), m);
    }

    #[test]
    fn power_matches_repeated_product() {
        let f = make_field(5, 1, None).unwrap();
        let m = Matrix::from_ints(&f, &[&[1, 1], &[0, 2]]);
        assert_eq!(m.pow(3), m.mul(&m).mul(&m));
        assert_eq!(m.pow(0), Matrix::identity(&f, 2));
    }
}
