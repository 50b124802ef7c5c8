//! Form modules (V, T): a quadratic space with a nilpotent T in o(V).
//!
//! The invariants computed here are the Jordan type of T, the index
//! function chi(m) = min{k >= 0 : T^m v = 0 implies Q(T^k v) = 0}, and the
//! symbol assembling both. "Q(T^k v) = 0 for all v in ker T^m" is tested as
//! an identity over the algebraic closure: the quadratic form v -> Q(T^k v)
//! must vanish on a basis of the kernel together with its polar form.

mod indecomposable;
mod partition;
mod symbol;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gfield::{FieldElem, FieldError};
use crate::quadspace::{is_nilpotent, Matrix, QuadSpace, SpaceError, SpaceKind, Vector};

pub use indecomposable::{
    blocks_for_symbol, build_indecomposable, module_from_symbol, IndecompSpec, Indecomposable,
};
pub use partition::{partitions, Partition, Partitions};
pub use symbol::{
    count_all_half, enumerate_symbols, symbols_of_partition, FqOrbitCounts, Symbol, SymbolError,
    SymbolTerm, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("endomorphism is not nilpotent")]
    NotNilpotent,
    #[error("endomorphism is not in o(V)")]
    NotInLieAlgebra,
    #[error("form module is degenerate")]
    Degenerate,
    #[error("indecomposable parameters out of range: {0}")]
    OutOfRange(String),
    #[error("variant mask has length {got}, expected {expected}")]
    MaskLength { expected: usize, got: usize },
    #[error("synthesized module has symbol {got}, expected {expected}")]
    RoundTrip { expected: Symbol, got: Symbol },
    #[error("generators violate the indecomposable constraints: {0}")]
    Constraint(String),
}

impl From<FieldError> for ModuleError {
    fn from(e: FieldError) -> Self {
        ModuleError::Space(e.into())
    }
}

/// A truncated element sum_n c_n t^{-n} of the dual module E (or of E_0
/// when only even n occur).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffProfile {
    coeffs: BTreeMap<u32, FieldElem>,
    even_only: bool,
}

impl CoeffProfile {
    pub fn new(even_only: bool) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            even_only,
        }
    }

    /// c t^{-n}.
    pub fn monomial(n: u32, c: FieldElem, even_only: bool) -> Self {
        let mut p = Self::new(even_only);
        p.set(n, c);
        p
    }

    pub fn set(&mut self, n: u32, c: FieldElem) {
        assert!(
            !self.even_only || n.is_multiple_of(2),
            "odd exponent in an E_0 profile"
        );
        if c.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, c);
        }
    }

    pub fn coeff(&self, n: u32) -> Option<FieldElem> {
        self.coeffs.get(&n).copied()
    }

    pub fn is_even_only(&self) -> bool {
        self.even_only
    }

    /// 1 + max{n : c_n != 0}; 0 for the zero profile.
    pub fn mu(&self) -> u32 {
        self.coeffs.keys().next_back().map_or(0, |&n| n + 1)
    }
}

/// chi at each distinct Jordan part.
pub type IndexFn = BTreeMap<u32, u32>;

/// Which branch of the indecomposable constraints holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbstractCase {
    /// mu(v_2) = mu(Phi) = mu(v_1) and mu(Psi_i) <= 2m - 1.
    EqualHeights,
    /// mu(v_2) = mu(Phi) = mu(v_1) - 1 and mu(Psi_1) = 2m - 1 > mu(Psi_2).
    DropByOne,
}

impl fmt::Display for AbstractCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbstractCase::EqualHeights => "case (i)",
            AbstractCase::DropByOne => "case (ii)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormModule {
    space: QuadSpace,
    t: Matrix,
}

impl FormModule {
    /// Requires T nilpotent and in o(V). The space may be degenerate; the
    /// symbol is only defined for non-degenerate ones.
    pub fn new(space: QuadSpace, t: Matrix) -> Result<Self, ModuleError> {
        if t.rows() != space.dim() || t.cols() != space.dim() {
            return Err(SpaceError::DimensionMismatch {
                expected: space.dim(),
                got: t.rows(),
            }
            .into());
        }
        if t.field() != space.field() {
            return Err(FieldError::Mismatch(space.field(), t.field()).into());
        }
        if !space.in_lie_algebra(&t) {
            return Err(ModuleError::NotInLieAlgebra);
        }
        if !is_nilpotent(&t) {
            return Err(ModuleError::NotNilpotent);
        }
        Ok(Self { space, t })
    }

    /// The zero endomorphism on `space`.
    pub fn zero(space: QuadSpace) -> Self {
        let n = space.dim();
        let t = Matrix::zeros(space.field(), n, n);
        Self { space, t }
    }

    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    pub fn endomorphism(&self) -> &Matrix {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Jordan type from the rank sequence: the number of parts >= j is
    /// rank(T^{j-1}) - rank(T^j).
    pub fn jordan_type(&self) -> Partition {
        let n = self.dim();
        let mut ranks = vec![n];
        let mut p = Matrix::identity(self.space.field(), n);
        while *ranks.last().unwrap() > 0 {
            p = &p * &self.t;
            ranks.push(p.rank());
        }
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for (j, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(j as u32 + 1, cnt - next));
        }
        Partition::new(parts)
    }

    /// chi(m) for any m >= 0.
    pub fn chi(&self, m: u32) -> u32 {
        let kernel = self.t.pow(m).kernel();
        let mut images = kernel;
        let mut k = 0;
        loop {
            let q_ok = images.iter().all(|v| self.space.q_bits(v.bits()) == 0);
            let polar_ok = q_ok
                && images.iter().enumerate().all(|(i, v)| {
                    images[i + 1..]
                        .iter()
                        .all(|w| self.space.bilinear_bits(v.bits(), w.bits()) == 0)
                });
            if polar_ok {
                return k;
            }
            images = images.iter().map(|v| self.t.apply(v)).collect();
            k += 1;
            debug_assert!(k as usize <= self.dim() + 1);
        }
    }

    /// chi at every distinct Jordan part.
    pub fn index_function(&self) -> IndexFn {
        self.jordan_type()
            .multiplicities()
            .into_iter()
            .map(|(part, _)| (part, self.chi(part)))
            .collect()
    }

    pub fn symbol(&self) -> Result<Symbol, ModuleError> {
        if !self.space.is_nondegenerate() {
            return Err(ModuleError::Degenerate);
        }
        let terms = self
            .jordan_type()
            .multiplicities()
            .into_iter()
            .map(|(part, mult)| SymbolTerm {
                part,
                chi: self.chi(part),
                mult,
            })
            .collect();
        Ok(Symbol::new(terms)?)
    }

    /// Block-diagonal sum.
    pub fn orthogonal_sum(&self, other: &FormModule) -> Result<FormModule, ModuleError> {
        let space = self.space.orthogonal_sum(&other.space)?;
        let t = self.t.block_diag(&other.t);
        Ok(Self { space, t })
    }

    /// The conjugate of T in the standard space of the same kind, together
    /// with that kind.
    pub fn to_standard(&self) -> Result<(SpaceKind, Matrix), ModuleError> {
        let (kind, p) = self.space.standard_basis()?;
        let p_inv = p.inverse().ok_or(SpaceError::Degenerate)?;
        Ok((kind, &(&p_inv * &self.t) * &p))
    }

    /// mu(v) = min{k : T^k v = 0}.
    pub fn height(&self, v: &Vector) -> u32 {
        let mut w = v.clone();
        let mut k = 0;
        while !w.is_zero() {
            w = self.t.apply(&w);
            k += 1;
        }
        k
    }

    /// phi(v, w) = sum_n <T^n v, w> t^{-n}.
    pub fn phi(&self, v: &Vector, w: &Vector) -> CoeffProfile {
        let f = self.space.field();
        let mut out = CoeffProfile::new(false);
        let mut x = v.clone();
        let mut n = 0;
        while !x.is_zero() {
            let c = self.space.bilinear_bits(x.bits(), w.bits());
            out.set(n, f.elem(c as u32).expect("in range"));
            x = self.t.apply(&x);
            n += 1;
        }
        out
    }

    /// psi(v) = sum_n Q(T^n v) t^{-2n}.
    pub fn psi(&self, v: &Vector) -> CoeffProfile {
        let f = self.space.field();
        let mut out = CoeffProfile::new(true);
        let mut x = v.clone();
        let mut n = 0;
        while !x.is_zero() {
            out.set(
                2 * n,
                f.elem(self.space.q_bits(x.bits()) as u32)
                    .expect("in range"),
            );
            x = self.t.apply(&x);
            n += 1;
        }
        out
    }

    /// Checks that V = A v_1 + A v_2 (direct) with mu(v_1) >= mu(v_2), and
    /// classifies (m', Phi, Psi_1, Psi_2) into one of the two admissible
    /// cases.
    pub fn check_abstract_constraints(
        &self,
        v1: &Vector,
        v2: &Vector,
    ) -> Result<AbstractCase, ModuleError> {
        let m = self.height(v1);
        let m2 = self.height(v2);
        if m < m2 {
            return Err(ModuleError::Constraint(format!(
                "mu(v_1) = {m} < mu(v_2) = {m2}"
            )));
        }
        let mut chain = Vec::new();
        for (v, h) in [(v1, m), (v2, m2)] {
            let mut x = v.clone();
            for _ in 0..h {
                chain.push(x.clone());
                x = self.t.apply(&x);
            }
        }
        let n = self.dim();
        if chain.len() != n || Matrix::from_columns(self.space.field(), n, &chain).rank() != n {
            return Err(ModuleError::Constraint(
                "v_1, v_2 do not generate V freely".into(),
            ));
        }
        let phi = self.phi(v1, v2).mu();
        let psi1 = self.psi(v1).mu();
        let psi2 = self.psi(v2).mu();
        if m2 == m && phi == m && psi1 < 2 * m && psi2 < 2 * m {
            Ok(AbstractCase::EqualHeights)
        } else if m >= 1 && m2 == m - 1 && phi == m - 1 && psi1 == 2 * m - 1 && psi2 < psi1 {
            Ok(AbstractCase::DropByOne)
        } else {
            Err(ModuleError::Constraint(format!(
                "m = {m}, m' = {m2}, mu(Phi) = {phi}, mu(Psi_1) = {psi1}, mu(Psi_2) = {psi2}"
            )))
        }
    }
}
