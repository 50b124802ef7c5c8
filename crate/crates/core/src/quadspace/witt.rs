use super::{Matrix, QuadSpace, SpaceError, SpaceKind, Vector};

/// Exhaustive singular-vector search is used while q^d stays below this.
const EXHAUSTIVE_LIMIT_BITS: u32 = 24;

/// Hyperbolic pairs (e_i, f_i) with Q(e_i) = Q(f_i) = 0 and <e_i, f_i> = 1,
/// mutually orthogonal, plus the anisotropic leftover (empty, a defective
/// line, or an anisotropic plane). All vectors are in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittDecomposition {
    pub kind: SpaceKind,
    pub hyperbolic_pairs: Vec<(Vector, Vector)>,
    pub anisotropic: Vec<Vector>,
}

impl WittDecomposition {
    /// Witt index.
    pub fn index(&self) -> usize {
        self.hyperbolic_pairs.len()
    }

    /// Columns e_1, f_1, ..., followed by the leftover normalized to the
    /// standard coordinates: Q(r) = 1 for the defective line, and
    /// Q(u) = 1, <u,w> = 1, Q(w) = delta for the anisotropic plane.
    pub(super) fn standard_basis(&self, space: &QuadSpace) -> Result<Matrix, SpaceError> {
        let f = space.field();
        let mut cols: Vec<Vector> = Vec::with_capacity(space.dim());
        for (e, h) in &self.hyperbolic_pairs {
            cols.push(e.clone());
            cols.push(h.clone());
        }
        match self.anisotropic.as_slice() {
            [] => {}
            [r] => {
                let a = space.q_bits(r.bits());
                let s = f.inv_bits(f.sqrt_bits(a)).ok_or(SpaceError::Degenerate)?;
                cols.push(r.scale(s));
            }
            [b1, b2] => {
                let a = space.q_bits(b1.bits());
                let s = f
                    .inv_bits(f.sqrt_bits(a))
                    .ok_or_else(|| SpaceError::Witt("isotropic leftover".into()))?;
                let u = b1.scale(s);
                let p = space.bilinear_bits(u.bits(), b2.bits());
                let w = b2.scale(f.inv_bits(p).ok_or(SpaceError::Degenerate)?);
                let delta = f.find_delta().bits();
                let qw = space.q_bits(w.bits());
                let c = (0..f.order() as u16)
                    .find(|&c| qw ^ f.mul_bits(c, c) ^ c == delta)
                    .ok_or_else(|| {
                        SpaceError::Witt("leftover plane is not of minus type".into())
                    })?;
                let w = w.axpy(c, &u);
                cols.push(u);
                cols.push(w);
            }
            _ => return Err(SpaceError::Witt("leftover of dimension > 2".into())),
        }
        Ok(Matrix::from_columns(f, space.dim(), &cols))
    }
}

/// Reduces a spanning list to a basis (nonzero rows of the RREF).
fn basis_of(space: &QuadSpace, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let f = space.field();
    let rows: Vec<Vec<u16>> = vectors.iter().map(|v| v.bits().to_vec()).collect();
    let m = Matrix::from_rows(f, &rows).expect("equal lengths");
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| Vector::from_bits(f, r.row_bits(i).to_vec()))
        .collect()
}

fn combine(space: &QuadSpace, basis: &[Vector], coeffs: &[u16]) -> Vector {
    let mut v = Vector::zeros(space.field(), space.dim());
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            v = v.axpy(c, b);
        }
    }
    v
}

/// First nonzero singular vector of span(basis) in lexicographic order of
/// coefficient tuples.
fn singular_exhaustive(space: &QuadSpace, basis: &[Vector]) -> Option<Vector> {
    let q = space.field().order() as u64;
    let d = basis.len();
    let total = q.pow(d as u32);
    let mut coeffs = vec![0u16; d];
    for idx in 1..total {
        let mut rest = idx;
        for slot in coeffs.iter_mut().rev() {
            *slot = (rest % q) as u16;
            rest /= q;
        }
        let v = combine(space, basis, &coeffs);
        if space.q_bits(v.bits()) == 0 {
            return Some(v);
        }
    }
    None
}

/// Constructive singular-vector search for large q^d.
fn singular_constructive(space: &QuadSpace, basis: &[Vector]) -> Option<Vector> {
    let f = space.field();
    if let Some(b) = basis.iter().find(|b| space.q_bits(b.bits()) == 0) {
        return Some(b.clone());
    }
    // a pair v, w with <v, w> = 1
    let (v, w) = basis.iter().enumerate().find_map(|(i, v)| {
        basis[i + 1..].iter().find_map(|w| {
            let p = space.bilinear_bits(v.bits(), w.bits());
            f.inv_bits(p).map(|inv| (v.clone(), w.scale(inv)))
        })
    })?;
    for a in 0..f.order() as u16 {
        let x = w.axpy(a, &v);
        if space.q_bits(x.bits()) == 0 {
            return Some(x);
        }
    }
    // span(v, w) is anisotropic; combine with a vector orthogonal to it
    let u = basis.iter().find_map(|b| {
        let u = b
            .axpy(space.bilinear_bits(b.bits(), w.bits()), &v)
            .axpy(space.bilinear_bits(b.bits(), v.bits()), &w);
        (!u.is_zero()).then_some(u)
    })?;
    let c = space.q_bits(u.bits());
    if c == 0 {
        return Some(u);
    }
    let qw = space.q_bits(w.bits());
    let s = f.sqrt_bits(f.mul_bits(c, f.inv_bits(qw)?));
    Some(u.axpy(s, &w))
}

fn find_singular(space: &QuadSpace, basis: &[Vector]) -> Option<Vector> {
    let e = space.field().degree();
    if (basis.len() as u32) * e <= EXHAUSTIVE_LIMIT_BITS {
        singular_exhaustive(space, basis)
    } else {
        singular_constructive(space, basis)
    }
}

pub(super) fn decompose(space: &QuadSpace) -> Result<WittDecomposition, SpaceError> {
    let f = space.field();
    let n = space.dim();
    let mut basis: Vec<Vector> = (0..n).map(|i| Vector::unit(f, n, i)).collect();
    let mut pairs = Vec::new();
    while basis.len() >= 2 {
        let Some(v) = find_singular(space, &basis) else {
            break;
        };
        let (b, p) = basis
            .iter()
            .find_map(|b| {
                let p = space.bilinear_bits(v.bits(), b.bits());
                (p != 0).then_some((b, p))
            })
            .ok_or(SpaceError::Degenerate)?;
        let w = b.scale(f.inv_bits(p).expect("nonzero"));
        let w = w.axpy(space.q_bits(w.bits()), &v);
        debug_assert_eq!(space.q_bits(w.bits()), 0);
        let projected: Vec<Vector> = basis
            .iter()
            .map(|b| {
                b.axpy(space.bilinear_bits(b.bits(), w.bits()), &v)
                    .axpy(space.bilinear_bits(b.bits(), v.bits()), &w)
            })
            .collect();
        basis = basis_of(space, &projected);
        pairs.push((v, w));
    }
    let kind = match basis.len() {
        0 => SpaceKind::Plus,
        1 if space.q_bits(basis[0].bits()) != 0 => SpaceKind::Odd,
        2 => SpaceKind::Minus,
        d => {
            return Err(SpaceError::Witt(format!(
                "anisotropic leftover of dimension {d}"
            )))
        }
    };
    Ok(WittDecomposition {
        kind,
        hyperbolic_pairs: pairs,
        anisotropic: basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::FieldSpec;

    #[test]
    fn constructive_agrees_with_exhaustive_kind() {
        for e in [1, 2, 3] {
            let f = FieldSpec::standard(e).unwrap();
            for (kind, n) in [
                (SpaceKind::Plus, 6),
                (SpaceKind::Minus, 6),
                (SpaceKind::Odd, 5),
                (SpaceKind::Minus, 2),
            ] {
                let v = QuadSpace::standard(kind, n, f).unwrap();
                let basis: Vec<Vector> = (0..n).map(|i| Vector::unit(f, n, i)).collect();
                let ex = singular_exhaustive(&v, &basis);
                let co = singular_constructive(&v, &basis);
                assert_eq!(ex.is_some(), co.is_some());
                if let Some(x) = co {
                    assert!(!x.is_zero());
                    assert_eq!(v.q_bits(x.bits()), 0);
                }
            }
        }
    }

    #[test]
    fn large_field_uses_constructive_path() {
        let f = FieldSpec::standard(13).unwrap();
        for (kind, n) in [
            (SpaceKind::Plus, 4),
            (SpaceKind::Minus, 4),
            (SpaceKind::Odd, 5),
        ] {
            let v = QuadSpace::standard(kind, n, f).unwrap();
            let wd = v.witt_decomposition().unwrap();
            assert_eq!(wd.kind, kind);
            let p = wd.standard_basis(&v).unwrap();
            assert_eq!(v.pullback(&p), v);
        }
    }
}
