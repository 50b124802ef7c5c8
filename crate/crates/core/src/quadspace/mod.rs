//! Quadratic-form spaces over GF(2^e).
//!
//! A space is stored through the upper-triangular coefficient matrix of its
//! quadratic form, Q(x) = sum_{i<=j} upper[i][j] x_i x_j. The polar form
//! <v,w> = Q(v+w) + Q(v) + Q(w) has Gram matrix upper + upper^T, which is
//! alternating in characteristic 2.
//!
//! Identities such as "Q(gv) = Q(v) for all v" or "<xv,v> = 0 for all v"
//! are imposed coefficient-wise on a basis, so they hold as polynomial
//! identities and not merely at the finitely many points of a small field.

mod matrix;
mod witt;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gfield::{FieldElem, FieldError, FieldSpec};

pub use matrix::{Matrix, MatrixJson, Vector};
pub use witt::WittDecomposition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {dim} does not match space kind {kind}")]
    ParityMismatch { kind: SpaceKind, dim: usize },
    #[error("quadratic form is degenerate")]
    Degenerate,
    #[error("transvection needs Q(v) != 0")]
    SingularVector,
    #[error("matrix does not preserve the quadratic form")]
    NotOrthogonal,
    #[error("matrix is not square")]
    NotSquare,
    #[error("Witt decomposition failed: {0}")]
    Witt(String),
}

/// Isometry type of a non-degenerate space over a finite field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    /// Odd dimension 2n+1 (defective).
    Odd,
    /// Dimension 2n, Witt index n.
    Plus,
    /// Dimension 2n, Witt index n-1.
    Minus,
}

impl SpaceKind {
    pub fn admits_dim(&self, dim: usize) -> bool {
        match self {
            SpaceKind::Odd => dim % 2 == 1,
            SpaceKind::Plus | SpaceKind::Minus => dim.is_multiple_of(2) && dim > 0,
        }
    }

    pub fn is_defective(&self) -> bool {
        *self == SpaceKind::Odd
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::Odd => "odd",
            SpaceKind::Plus => "plus",
            SpaceKind::Minus => "minus",
        })
    }
}

impl FromStr for SpaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "odd" => Ok(SpaceKind::Odd),
            "plus" | "+" => Ok(SpaceKind::Plus),
            "minus" | "-" => Ok(SpaceKind::Minus),
            _ => Err(format!(
                "unknown space kind '{s}' (expected odd, plus or minus)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSpace {
    field: FieldSpec,
    upper: Matrix,
    gram: Matrix,
}

impl QuadSpace {
    /// Builds the space with Q(x) = sum_{i,j} coeffs[i][j] x_i x_j. Entries
    /// below the diagonal are folded into the upper triangle.
    pub fn from_coefficients(coeffs: &Matrix) -> Result<Self, SpaceError> {
        if !coeffs.is_square() {
            return Err(SpaceError::NotSquare);
        }
        let field = coeffs.field();
        let n = coeffs.rows();
        let upper = Matrix::from_fn(field, n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => coeffs.get(i, j) ^ coeffs.get(j, i),
            std::cmp::Ordering::Equal => coeffs.get(i, i),
            std::cmp::Ordering::Greater => 0,
        });
        let gram = Matrix::from_fn(field, n, n, |i, j| {
            if i == j {
                0
            } else {
                upper.get(i.min(j), i.max(j))
            }
        });
        Ok(Self { field, upper, gram })
    }

    /// Space with prescribed values Q(b_i) on the diagonal and <b_i, b_j>
    /// above it.
    pub fn from_values(
        field: FieldSpec,
        q_values: &[u16],
        pairing: impl Fn(usize, usize) -> u16,
    ) -> Self {
        let n = q_values.len();
        let upper = Matrix::from_fn(field, n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => pairing(i, j),
            std::cmp::Ordering::Equal => q_values[i],
            std::cmp::Ordering::Greater => 0,
        });
        Self::from_coefficients(&upper).expect("square by construction")
    }

    /// The standard non-degenerate space of the given kind and dimension:
    /// hyperbolic planes x_{2i-1} x_{2i}, completed by x_N^2 (odd) or by the
    /// anisotropic plane x^2 + xy + delta y^2 (minus).
    pub fn standard(kind: SpaceKind, dim: usize, field: FieldSpec) -> Result<Self, SpaceError> {
        if !kind.admits_dim(dim) {
            return Err(SpaceError::ParityMismatch { kind, dim });
        }
        let mut upper = Matrix::zeros(field, dim, dim);
        let planes = match kind {
            SpaceKind::Odd | SpaceKind::Plus => dim / 2,
            SpaceKind::Minus => dim / 2 - 1,
        };
        for p in 0..planes {
            upper.set(2 * p, 2 * p + 1, 1);
        }
        match kind {
            SpaceKind::Odd => upper.set(dim - 1, dim - 1, 1),
            SpaceKind::Plus => {}
            SpaceKind::Minus => {
                let delta = field.find_delta().bits();
                upper.set(dim - 2, dim - 2, 1);
                upper.set(dim - 2, dim - 1, 1);
                upper.set(dim - 1, dim - 1, delta);
            }
        }
        Self::from_coefficients(&upper)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.upper.rows()
    }

    pub fn upper(&self) -> &Matrix {
        &self.upper
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn check_len(&self, v: &Vector) -> Result<(), SpaceError> {
        if v.len() != self.dim() {
            return Err(SpaceError::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        if v.field() != self.field {
            return Err(FieldError::Mismatch(self.field, v.field()).into());
        }
        Ok(())
    }

    /// Q on raw coordinates.
    pub fn q_bits(&self, v: &[u16]) -> u16 {
        let f = self.field;
        let n = self.dim();
        let mut acc = 0u16;
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            let mut row = 0u16;
            for j in i..n {
                let c = self.upper.get(i, j);
                if c != 0 && v[j] != 0 {
                    row ^= f.mul_bits(c, v[j]);
                }
            }
            acc ^= f.mul_bits(v[i], row);
        }
        acc
    }

    /// Polar form on raw coordinates.
    pub fn bilinear_bits(&self, v: &[u16], w: &[u16]) -> u16 {
        let f = self.field;
        let n = self.dim();
        let mut acc = 0u16;
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            let mut row = 0u16;
            for j in 0..n {
                let c = self.gram.get(i, j);
                if c != 0 && w[j] != 0 {
                    row ^= f.mul_bits(c, w[j]);
                }
            }
            acc ^= f.mul_bits(v[i], row);
        }
        acc
    }

    pub fn q_eval(&self, v: &Vector) -> Result<FieldElem, SpaceError> {
        self.check_len(v)?;
        Ok(self.field.elem(self.q_bits(v.bits()) as u32)?)
    }

    pub fn bilinear(&self, v: &Vector, w: &Vector) -> Result<FieldElem, SpaceError> {
        self.check_len(v)?;
        self.check_len(w)?;
        Ok(self
            .field
            .elem(self.bilinear_bits(v.bits(), w.bits()) as u32)?)
    }

    /// Basis of V^perp, the kernel of the Gram matrix.
    pub fn radical(&self) -> Vec<Vector> {
        self.gram.kernel()
    }

    pub fn is_defective(&self) -> bool {
        !self.radical().is_empty()
    }

    /// V != 0, dim V^perp <= 1 and Q nonzero on the nonzero radical vectors.
    /// Q restricted to the radical is additive and semilinear, so for a
    /// 1-dimensional radical it suffices to test the basis vector.
    pub fn is_nondegenerate(&self) -> bool {
        if self.dim() == 0 {
            return false;
        }
        match self.radical().as_slice() {
            [] => true,
            [r] => self.q_bits(r.bits()) != 0,
            _ => false,
        }
    }

    pub fn orthogonal_sum(&self, other: &QuadSpace) -> Result<QuadSpace, SpaceError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch(self.field, other.field).into());
        }
        Self::from_coefficients(&self.upper.block_diag(&other.upper))
    }

    /// The space with quadratic form y -> Q(P y).
    pub fn pullback(&self, p: &Matrix) -> QuadSpace {
        let cols: Vec<Vector> = (0..p.cols()).map(|j| p.column(j)).collect();
        let m = cols.len();
        let q_values: Vec<u16> = cols.iter().map(|c| self.q_bits(c.bits())).collect();
        Self::from_values(self.field, &q_values[..m], |i, j| {
            self.bilinear_bits(cols[i].bits(), cols[j].bits())
        })
    }

    /// Greedy Witt decomposition into hyperbolic planes plus a leftover.
    pub fn witt_decomposition(&self) -> Result<WittDecomposition, SpaceError> {
        if !self.is_nondegenerate() {
            return Err(SpaceError::Degenerate);
        }
        witt::decompose(self)
    }

    pub fn witt_type(&self) -> Result<SpaceKind, SpaceError> {
        Ok(self.witt_decomposition()?.kind)
    }

    /// Change of basis P (columns in this space's coordinates) such that
    /// Q(P y) is the standard form of the same kind.
    pub fn standard_basis(&self) -> Result<(SpaceKind, Matrix), SpaceError> {
        let wd = self.witt_decomposition()?;
        let p = wd.standard_basis(self)?;
        Ok((wd.kind, p))
    }

    /// t_v : w -> w + (<w,v>/Q(v)) v.
    pub fn transvection(&self, v: &Vector) -> Result<Matrix, SpaceError> {
        self.check_len(v)?;
        let f = self.field;
        let qv = self.q_bits(v.bits());
        let c = f.inv_bits(qv).ok_or(SpaceError::SingularVector)?;
        let n = self.dim();
        // u_j = <b_j, v>
        let u: Vec<u16> = (0..n)
            .map(|j| self.bilinear_bits(Vector::unit(f, n, j).bits(), v.bits()))
            .collect();
        Ok(Matrix::from_fn(f, n, n, |i, j| {
            let base = (i == j) as u16;
            base ^ f.mul_bits(c, f.mul_bits(v.get(i), u[j]))
        }))
    }

    /// Q(g b_i) = Q(b_i) and <g b_i, g b_j> = <b_i, b_j> on the basis, with
    /// g invertible.
    pub fn is_orthogonal(&self, g: &Matrix) -> bool {
        let n = self.dim();
        if g.rows() != n || g.cols() != n || g.field() != self.field {
            return false;
        }
        let cols: Vec<Vector> = (0..n).map(|j| g.column(j)).collect();
        for i in 0..n {
            if self.q_bits(cols[i].bits()) != self.upper.get(i, i) {
                return false;
            }
            for j in i + 1..n {
                if self.bilinear_bits(cols[i].bits(), cols[j].bits()) != self.gram.get(i, j) {
                    return false;
                }
            }
        }
        g.rank() == n
    }

    /// Dickson invariant rank(g + 1) mod 2.
    pub fn dickson(&self, g: &Matrix) -> Result<u8, SpaceError> {
        if !self.is_orthogonal(g) {
            return Err(SpaceError::NotOrthogonal);
        }
        Ok(dickson_rank(g))
    }

    /// Basis of o(V): matrices x with <x b_i, b_i> = 0, <x b_i, b_j> =
    /// <x b_j, b_i> for i < j, and trace(x) = 0.
    pub fn lie_algebra_basis(&self) -> Result<Vec<Matrix>, SpaceError> {
        if !self.is_nondegenerate() {
            return Err(SpaceError::Degenerate);
        }
        let n = self.dim();
        let f = self.field;
        let g = &self.gram;
        // unknown x[k][i] sits in column k*n + i
        let var = |k: usize, i: usize| k * n + i;
        let mut rows: Vec<Vec<u16>> = Vec::new();
        for i in 0..n {
            let mut row = vec![0u16; n * n];
            for k in 0..n {
                row[var(k, i)] ^= g.get(k, i);
            }
            rows.push(row);
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut row = vec![0u16; n * n];
                for k in 0..n {
                    row[var(k, i)] ^= g.get(k, j);
                    row[var(k, j)] ^= g.get(k, i);
                }
                rows.push(row);
            }
        }
        let mut trace = vec![0u16; n * n];
        for i in 0..n {
            trace[var(i, i)] = 1;
        }
        rows.push(trace);
        let system = Matrix::from_rows(f, &rows).expect("rectangular system");
        Ok(system
            .kernel()
            .into_iter()
            .map(|v| Matrix::from_fn(f, n, n, |i, j| v.get(var(i, j))))
            .collect())
    }

    /// Whether x lies in o(V) (coefficient-wise test of the defining
    /// conditions).
    pub fn in_lie_algebra(&self, x: &Matrix) -> bool {
        let n = self.dim();
        if x.rows() != n || x.cols() != n || x.field() != self.field {
            return false;
        }
        let f = self.field;
        let pair = |i: usize, j: usize| -> u16 {
            // <x b_i, b_j>
            (0..n).fold(0, |acc, k| {
                acc ^ f.mul_bits(x.get(k, i), self.gram.get(k, j))
            })
        };
        for i in 0..n {
            if pair(i, i) != 0 {
                return false;
            }
            for j in i + 1..n {
                if pair(i, j) != pair(j, i) {
                    return false;
                }
            }
        }
        x.trace() == 0
    }
}

/// rank(g + 1) mod 2.
pub fn dickson_rank(g: &Matrix) -> u8 {
    let id = Matrix::identity(g.field(), g.rows());
    ((g + &id).rank() % 2) as u8
}

/// x^N = 0, tested with ceil(log2 N) squarings.
pub fn is_nilpotent(x: &Matrix) -> bool {
    if !x.is_square() {
        return false;
    }
    let n = x.rows();
    let mut p = x.clone();
    let mut reach = 1usize;
    while reach < n {
        p = &p * &p;
        reach *= 2;
    }
    p.is_zero()
}
