//! Generating sets for O(V) acting on o(V) by conjugation.

use super::engine::{Dense, Key, PackedTransvection, Packer};
use crate::quadspace::{dickson_rank, Matrix, QuadSpace, Vector};

/// One generator with its Dickson invariant.
#[derive(Clone, Debug)]
pub(crate) enum Generator {
    Transvection(PackedTransvection),
    Element { g: Dense, g_inv: Dense, dickson: u8 },
}

impl Generator {
    pub fn dickson(&self) -> u8 {
        match self {
            Generator::Transvection(_) => 1,
            Generator::Element { dickson, .. } => *dickson,
        }
    }

    #[inline]
    pub fn conjugate(&self, packer: &Packer, x: Key) -> Key {
        match self {
            Generator::Transvection(t) => packer.conj_transvection(t, x),
            Generator::Element { g, g_inv, .. } => packer.sandwich(g, x, g_inv),
        }
    }
}

/// All vectors of F_q^n in lexicographic order of their digit strings.
pub(crate) fn all_vectors(space: &QuadSpace) -> impl Iterator<Item = Vec<u16>> + '_ {
    let n = space.dim();
    let q = space.field().order() as u64;
    (0..q.pow(n as u32)).map(move |mut idx| {
        let mut v = vec![0u16; n];
        for slot in v.iter_mut().rev() {
            *slot = (idx % q) as u16;
            idx /= q;
        }
        v
    })
}

/// The transvections t_v, one per line spanned by a vector with Q(v) != 0
/// outside the radical (radical vectors give the identity).
pub(crate) fn transvections(space: &QuadSpace) -> Vec<Generator> {
    let f = space.field();
    all_vectors(space)
        .filter(|v| {
            // first nonzero coordinate equal to 1 picks one vector per line
            v.iter().find(|&&x| x != 0) == Some(&1) && space.q_bits(v) != 0
        })
        .map(|v| {
            let vec = Vector::from_bits(f, v);
            let w = space.gram().apply(&vec);
            (vec, w)
        })
        .filter(|(_, w)| !w.is_zero())
        .map(|(vec, w)| {
            let a = f.inv_bits(space.q_bits(vec.bits())).expect("Q(v) != 0");
            Generator::Transvection(PackedTransvection::new(vec.bits(), w.bits(), a))
        })
        .collect()
}

/// Every element of O(V), by assigning images of the basis vectors one at a
/// time subject to Q(g b_j) = Q(b_j) and <g b_i, g b_j> = <b_i, b_j>.
pub fn orthogonal_group(space: &QuadSpace) -> Vec<Matrix> {
    let n = space.dim();
    let f = space.field();
    let candidates: Vec<Vec<u16>> = all_vectors(space).collect();
    let q_of: Vec<u16> = candidates.iter().map(|v| space.q_bits(v)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    fn extend(
        space: &QuadSpace,
        candidates: &[Vec<u16>],
        q_of: &[u16],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Matrix>,
    ) {
        let n = space.dim();
        let f = space.field();
        let j = chosen.len();
        if j == n {
            let cols: Vec<Vector> = chosen
                .iter()
                .map(|&i| Vector::from_bits(f, candidates[i].clone()))
                .collect();
            let g = Matrix::from_columns(f, n, &cols);
            if g.rank() == n {
                out.push(g);
            }
            return;
        }
        let target_q = space.upper().get(j, j);
        for (idx, v) in candidates.iter().enumerate() {
            if q_of[idx] != target_q {
                continue;
            }
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(i, &c)| space.bilinear_bits(&candidates[c], v) == space.gram().get(i, j));
            if fits {
                chosen.push(idx);
                extend(space, candidates, q_of, chosen, out);
                chosen.pop();
            }
        }
    }
    extend(space, &candidates, &q_of, &mut chosen, &mut out);
    debug_assert!(out.iter().all(|g| g.field() == f));
    out
}

pub(crate) fn group_generators(space: &QuadSpace, packer: &Packer) -> Vec<Generator> {
    orthogonal_group(space)
        .into_iter()
        .map(|g| {
            let g_inv = g.inverse().expect("orthogonal maps are invertible");
            Generator::Element {
                g: packer.dense(packer.pack(&g)),
                g_inv: packer.dense(packer.pack(&g_inv)),
                dickson: dickson_rank(&g),
            }
        })
        .collect()
}
