//! Packed small matrices over GF(2^e), e <= 4, N <= 8.
//!
//! Entry (r, c) occupies e bits at offset (8r + c)e of a u128, so addition
//! is XOR and, over GF(2), row r is byte r of the low u64.

use crate::gfield::FieldSpec;
use crate::quadspace::Matrix;

pub(crate) type Key = u128;

pub(crate) const MAX_N: usize = 8;
pub(crate) const MAX_DEGREE: u32 = 4;

/// Dense scratch form, index 8r + c.
pub(crate) type Dense = [u8; 64];

#[derive(Clone, Debug)]
pub(crate) struct Packer {
    pub n: usize,
    pub e: u32,
    field: FieldSpec,
    entry_mask: u128,
    mul: Vec<u8>,
    squarings: u32,
}

impl Packer {
    /// None when N or q are outside the packed range.
    pub fn new(field: FieldSpec, n: usize) -> Option<Self> {
        let e = field.degree();
        if n == 0 || n > MAX_N || e > MAX_DEGREE || (8 * (n - 1) + n) as u32 * e > 128 {
            return None;
        }
        let q = field.order() as usize;
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                mul[a * q + b] = field.mul_bits(a as u16, b as u16) as u8;
            }
        }
        let squarings = usize::BITS - (n - 1).leading_zeros();
        Some(Self {
            n,
            e,
            field,
            entry_mask: (1u128 << e) - 1,
            mul,
            squarings,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    fn shift(&self, r: usize, c: usize) -> u32 {
        (8 * r + c) as u32 * self.e
    }

    #[inline]
    pub fn get(&self, k: Key, r: usize, c: usize) -> u8 {
        ((k >> self.shift(r, c)) & self.entry_mask) as u8
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[((a as usize) << self.e) | b as usize]
    }

    pub fn pack(&self, m: &Matrix) -> Key {
        debug_assert_eq!(m.rows(), self.n);
        let mut k = 0;
        for r in 0..self.n {
            for c in 0..self.n {
                k |= (m.get(r, c) as u128) << self.shift(r, c);
            }
        }
        k
    }

    pub fn unpack(&self, k: Key) -> Matrix {
        Matrix::from_fn(self.field, self.n, self.n, |r, c| self.get(k, r, c) as u16)
    }

    pub fn dense(&self, k: Key) -> Dense {
        let mut d = [0u8; 64];
        for r in 0..self.n {
            for c in 0..self.n {
                d[8 * r + c] = self.get(k, r, c);
            }
        }
        d
    }

    pub fn from_dense(&self, d: &Dense) -> Key {
        let mut k = 0;
        for r in 0..self.n {
            for c in 0..self.n {
                k |= (d[8 * r + c] as u128) << self.shift(r, c);
            }
        }
        k
    }

    pub fn scale(&self, c: u8, k: Key) -> Key {
        let mut d = self.dense(k);
        for x in d.iter_mut() {
            *x = self.mul(c, *x);
        }
        self.from_dense(&d)
    }

    pub fn mul_dense(&self, a: &Dense, b: &Dense) -> Dense {
        let n = self.n;
        let mut out = [0u8; 64];
        for i in 0..n {
            for j in 0..n {
                let x = a[8 * i + j];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    out[8 * i + c] ^= self.mul(x, b[8 * j + c]);
                }
            }
        }
        out
    }

    /// x^(2^s) = 0 with 2^s >= N.
    pub fn is_nilpotent(&self, k: Key) -> bool {
        if self.e == 1 {
            let mut x = k as u64;
            for _ in 0..self.squarings {
                if x == 0 {
                    return true;
                }
                x = mul_gf2(x, x, self.n);
            }
            return x == 0;
        }
        let mut d = self.dense(k);
        for _ in 0..self.squarings {
            d = self.mul_dense(&d, &d);
        }
        d.iter().all(|&x| x == 0)
    }

    /// g x h for dense g, h.
    pub fn sandwich(&self, g: &Dense, x: Key, h: &Dense) -> Key {
        let x = self.dense(x);
        self.from_dense(&self.mul_dense(&self.mul_dense(g, &x), h))
    }

    /// t x t for the transvection t = 1 + a v w^T.
    pub fn conj_transvection(&self, t: &PackedTransvection, x: Key) -> Key {
        let n = self.n;
        if self.e == 1 {
            let x = x as u64;
            let (v, w) = (t.v_bits, t.w_bits);
            let mut u = 0u64;
            let mut s = 0u8;
            for r in 0..n {
                let row = (x >> (8 * r)) as u8;
                if w >> r & 1 == 1 {
                    u ^= row as u64;
                }
                s |= (((row & v).count_ones() & 1) as u8) << r;
            }
            let c = (u as u8 & v).count_ones() & 1 == 1;
            let mut y = x;
            for r in 0..n {
                let mut delta = 0u8;
                if v >> r & 1 == 1 {
                    delta ^= u as u8;
                    if c {
                        delta ^= w;
                    }
                }
                if s >> r & 1 == 1 {
                    delta ^= w;
                }
                y ^= (delta as u64) << (8 * r);
            }
            return y as Key;
        }
        let d = self.dense(x);
        let (v, w, a) = (&t.v, &t.w, t.a);
        let mut u = [0u8; 8];
        let mut s = [0u8; 8];
        for r in 0..n {
            for col in 0..n {
                let e = d[8 * r + col];
                u[col] ^= self.mul(w[r], e);
                s[r] ^= self.mul(e, v[col]);
            }
        }
        let c = (0..n).fold(0, |acc, i| acc ^ self.mul(u[i], v[i]));
        let a2c = self.mul(self.mul(a, a), c);
        let mut out = d;
        for r in 0..n {
            let av = self.mul(a, v[r]);
            let as_ = self.mul(a, s[r]);
            let a2cv = self.mul(a2c, v[r]);
            for col in 0..n {
                out[8 * r + col] ^=
                    self.mul(av, u[col]) ^ self.mul(as_, w[col]) ^ self.mul(a2cv, w[col]);
            }
        }
        self.from_dense(&out)
    }
}

/// 1 + a v w^T in packed-friendly form.
#[derive(Clone, Debug)]
pub(crate) struct PackedTransvection {
    pub v: [u8; 8],
    pub w: [u8; 8],
    pub a: u8,
    pub v_bits: u8,
    pub w_bits: u8,
}

impl PackedTransvection {
    pub fn new(v: &[u16], w: &[u16], a: u16) -> Self {
        let mut pv = [0u8; 8];
        let mut pw = [0u8; 8];
        let (mut vb, mut wb) = (0u8, 0u8);
        for i in 0..v.len() {
            pv[i] = v[i] as u8;
            pw[i] = w[i] as u8;
            vb |= ((v[i] & 1) as u8) << i;
            wb |= ((w[i] & 1) as u8) << i;
        }
        Self {
            v: pv,
            w: pw,
            a: a as u8,
            v_bits: vb,
            w_bits: wb,
        }
    }
}

/// Product of byte-row GF(2) matrices.
#[inline]
pub(crate) fn mul_gf2(a: u64, b: u64, n: usize) -> u64 {
    let mut out = 0u64;
    for i in 0..n {
        let mut bits = (a >> (8 * i)) & 0xff;
        let mut acc = 0u64;
        while bits != 0 {
            let j = bits.trailing_zeros();
            acc ^= (b >> (8 * j)) & 0xff;
            bits &= bits - 1;
        }
        out |= acc << (8 * i);
    }
    out
}
