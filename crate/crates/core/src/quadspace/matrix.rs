//! Dense matrices and vectors over GF(2^e) with exact Gaussian elimination.
//!
//! Entries are stored as raw field bit masks; the owning `FieldSpec` does the
//! arithmetic. Shape and field mismatches between operands are programming
//! errors and panic, like indexing out of bounds.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::gfield::{FieldElem, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    entries: Vec<u16>,
}

impl Vector {
    pub fn zeros(field: FieldSpec, len: usize) -> Self {
        Self {
            field,
            entries: vec![0; len],
        }
    }

    pub fn unit(field: FieldSpec, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.entries[i] = 1;
        v
    }

    pub fn from_bits(field: FieldSpec, entries: Vec<u16>) -> Self {
        debug_assert!(entries.iter().all(|&b| (b as u32) < field.order()));
        Self { field, entries }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn bits(&self) -> &[u16] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> u16 {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, bits: u16) {
        self.entries[i] = bits;
    }

    pub fn elem(&self, i: usize) -> FieldElem {
        self.field
            .elem(self.entries[i] as u32)
            .expect("entry in range")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&b| b == 0)
    }

    pub fn scale(&self, c: u16) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|&x| self.field.mul_bits(c, x))
            .collect();
        Self {
            field: self.field,
            entries,
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: u16, other: &Vector) -> Self {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&x, &y)| x ^ self.field.mul_bits(c, y))
            .collect();
        Self {
            field: self.field,
            entries,
        }
    }

    /// Concatenation, used for block-diagonal embeddings.
    pub fn concat(&self, other: &Vector) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self {
            field: self.field,
            entries,
        }
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        self.axpy(1, rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> u16,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds from row-major bit masks; `None` if ragged or out of range.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u16>]) -> Option<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let data: Vec<u16> = rows.iter().flatten().copied().collect();
        if data.iter().any(|&b| b as u32 >= field.order()) {
            return None;
        }
        Some(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(field, rows, columns.len(), |i, j| columns[j].get(i))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, bits: u16) {
        self.data[i * self.cols + j] = bits;
    }

    pub fn elem(&self, i: usize, j: usize) -> FieldElem {
        self.field
            .elem(self.get(i, j) as u32)
            .expect("entry in range")
    }

    pub fn data(&self) -> &[u16] {
        &self.data
    }

    pub fn row_bits(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_bits(self.field, (0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&b| b == 0)
    }

    pub fn trace(&self) -> u16 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| acc ^ self.get(i, i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn scale(&self, c: u16) -> Self {
        let data = self
            .data
            .iter()
            .map(|&x| self.field.mul_bits(c, x))
            .collect();
        Self {
            data,
            ..self.clone()
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = self.field;
        let entries = (0..self.rows)
            .map(|i| {
                self.row_bits(i)
                    .iter()
                    .zip(v.bits())
                    .fold(0u16, |acc, (&a, &b)| acc ^ f.mul_bits(a, b))
            })
            .collect();
        Vector::from_bits(f, entries)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Block-diagonal matrix diag(self, other).
    pub fn block_diag(&self, other: &Matrix) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(self.field, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j)
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols)
            } else {
                0
            }
        })
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = f.inv_bits(self.get(row, col)).expect("pivot is nonzero");
            for j in col..self.cols {
                let x = self.get(row, j);
                self.set(row, j, f.mul_bits(inv, x));
            }
            for r in 0..self.rows {
                let c = self.get(r, col);
                if r == row || c == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let x = self.get(r, j) ^ f.mul_bits(c, self.get(row, j));
                    self.set(r, j, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space {x : self x = 0}, one vector per free
    /// column in increasing column order.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = Vector::zeros(self.field, self.cols);
                v.set(free, 1);
                for (row, &p) in pivots.iter().enumerate() {
                    // char 2: -a = a
                    v.set(p, r.get(row, free));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                1
            } else {
                0
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(self.field, n, n, |i, j| r.get(i, n + j)))
    }

    /// Row-major hex strings, one per entry.
    pub fn to_hex_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row_bits(i).iter().map(|b| format!("{b:x}")).collect())
            .collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            field: self.field.to_string(),
            rows: self.rows,
            cols: self.cols,
            entries: self.to_hex_rows(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        out.data[i * rhs.cols + j] ^= f.mul_bits(a, b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a ^ b)
            .collect();
        Matrix {
            data,
            ..self.clone()
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row_bits(i).iter().map(|b| format!("{b:x}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Serialized matrix: field header plus row-major hex entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub field: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Option<Matrix> {
        let field: FieldSpec = self.field.parse().ok()?;
        let rows: Option<Vec<Vec<u16>>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| u16::from_str_radix(s, 16).ok()).collect())
            .collect();
        let m = Matrix::from_rows(field, &rows?)?;
        (m.rows == self.rows && m.cols == self.cols).then_some(m)
    }
}
