//! Exact arithmetic in GF(2^e) for 1 <= e <= 16.
//!
//! Elements are polynomials over GF(2) of degree < e, stored as bit masks
//! (bit i is the coefficient of g^i) and reduced modulo a fixed irreducible
//! polynomial. Enumeration order is the numeric order of the bit masks, so
//! 0 comes first and 1 second.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

/// Environment variable overriding the default modulus table.
pub const FIELD_TABLE_ENV: &str = "NILP2_FIELD_TABLE";

/// Default moduli (Conway polynomials over GF(2)), indexed by degree - 1.
/// Bit i of each entry is the coefficient of t^i.
const DEFAULT_MODULI: [u32; 16] = [
    0x3,     // t + 1
    0x7,     // t^2 + t + 1
    0xb,     // t^3 + t + 1
    0x13,    // t^4 + t + 1
    0x25,    // t^5 + t^2 + 1
    0x5b,    // t^6 + t^4 + t^3 + t + 1
    0x83,    // t^7 + t + 1
    0x11d,   // t^8 + t^4 + t^3 + t^2 + 1
    0x211,   // t^9 + t^4 + 1
    0x46f,   // t^10 + t^6 + t^5 + t^3 + t^2 + t + 1
    0x805,   // t^11 + t^2 + 1
    0x10eb,  // t^12 + t^7 + t^6 + t^5 + t^3 + t + 1
    0x201b,  // t^13 + t^4 + t^3 + t + 1
    0x40a9,  // t^14 + t^7 + t^5 + t^3 + 1
    0x8035,  // t^15 + t^5 + t^4 + t^2 + 1
    0x1002d, // t^16 + t^5 + t^3 + t^2 + 1
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("extension degree {0} outside supported range 1..={MAX_DEGREE}")]
    Capacity(u32),
    #[error("modulus {modulus:#x} does not have degree {degree}")]
    ModulusDegree { degree: u32, modulus: u32 },
    #[error("modulus {0:#x} is reducible over GF(2)")]
    Reducible(u32),
    #[error("incompatible fields: {0} vs {1}")]
    Mismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element bits {bits:#x} out of range for {field}")]
    OutOfRange { bits: u32, field: FieldSpec },
    #[error("malformed field description: {0}")]
    Parse(String),
}

fn poly_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Remainder of `a` modulo `m` in GF(2)[t].
fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

/// Irreducibility by trial division against every polynomial of degree
/// 1..=deg/2 (a proper factor of smaller degree always exists otherwise).
fn is_irreducible(modulus: u32) -> bool {
    let m = modulus as u64;
    let deg = poly_degree(m);
    if deg < 1 {
        return false;
    }
    for d in 1..=(deg / 2) {
        for low in 0u64..(1 << d) {
            let divisor = (1u64 << d) | low;
            if poly_rem(m, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// A finite field GF(2^e) given by its irreducible modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    degree: u32,
    modulus: u32,
}

impl FieldSpec {
    /// Validates `modulus` (degree `degree`, irreducible) and builds the field.
    pub fn new(degree: u32, modulus: u32) -> Result<Self, FieldError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(FieldError::Capacity(degree));
        }
        if poly_degree(modulus as u64) != degree as i32 {
            return Err(FieldError::ModulusDegree { degree, modulus });
        }
        if !is_irreducible(modulus) {
            return Err(FieldError::Reducible(modulus));
        }
        Ok(Self { degree, modulus })
    }

    /// The field with the shipped default modulus of the given degree.
    pub fn standard(degree: u32) -> Result<Self, FieldError> {
        ModulusTable::default().field(degree)
    }

    /// Field with `q` elements, `q` a power of two.
    pub fn with_order(q: u32) -> Result<Self, FieldError> {
        if !q.is_power_of_two() || q < 2 {
            return Err(FieldError::Parse(format!("q={q} is not a power of 2")));
        }
        Self::standard(q.trailing_zeros())
    }

    pub fn gf2() -> Self {
        Self {
            degree: 1,
            modulus: 0x3,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, 2^e.
    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            bits: 0,
            field: *self,
        }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem {
            bits: 1,
            field: *self,
        }
    }

    /// The element whose bit mask is `bits`.
    pub fn elem(&self, bits: u32) -> Result<FieldElem, FieldError> {
        if bits >= self.order() {
            return Err(FieldError::OutOfRange { bits, field: *self });
        }
        Ok(FieldElem {
            bits: bits as u16,
            field: *self,
        })
    }

    /// The generator class g (t mod modulus). Equals 1 in GF(2).
    pub fn generator(&self) -> FieldElem {
        FieldElem {
            bits: self.reduce(2) as u16,
            field: *self,
        }
    }

    /// All 2^e elements, 0 first and 1 second.
    pub fn all_elements(&self) -> Vec<FieldElem> {
        (0..self.order())
            .map(|b| FieldElem {
                bits: b as u16,
                field: *self,
            })
            .collect()
    }

    fn reduce(&self, p: u64) -> u32 {
        poly_rem(p, self.modulus as u64) as u32
    }

    // Raw bit-level arithmetic used by the matrix and oracle layers.

    #[inline]
    pub fn add_bits(&self, a: u16, b: u16) -> u16 {
        a ^ b
    }

    #[inline]
    pub fn mul_bits(&self, a: u16, b: u16) -> u16 {
        if self.degree == 1 {
            return a & b;
        }
        let mut acc: u32 = 0;
        let mut a = a as u32;
        let mut b = b as u32;
        let top = 1u32 << self.degree;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc as u16
    }

    pub fn pow_bits(&self, a: u16, mut exp: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_bits(acc, base);
            }
            base = self.mul_bits(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via x^(2^e - 2); `None` for zero.
    pub fn inv_bits(&self, a: u16) -> Option<u16> {
        if a == 0 {
            None
        } else {
            Some(self.pow_bits(a, (self.order() - 2) as u64))
        }
    }

    /// Square root: the inverse of Frobenius, x^(2^(e-1)).
    pub fn sqrt_bits(&self, a: u16) -> u16 {
        let mut x = a;
        for _ in 1..self.degree {
            x = self.mul_bits(x, x);
        }
        x
    }

    /// Absolute trace sum_{i<e} x^(2^i), always 0 or 1.
    pub fn trace_bits(&self, a: u16) -> u16 {
        let mut acc = 0u16;
        let mut x = a;
        for _ in 0..self.degree {
            acc ^= x;
            x = self.mul_bits(x, x);
        }
        debug_assert!(acc <= 1);
        acc
    }

    /// The least element (in enumeration order) outside {x + x^2}.
    ///
    /// An element lies outside the Artin-Schreier image exactly when its
    /// absolute trace is 1. For e <= 8 the answer is re-checked against the
    /// image computed exhaustively.
    pub fn find_delta(&self) -> FieldElem {
        let delta = (1..self.order() as u16)
            .find(|&b| self.trace_bits(b) == 1)
            .expect("trace is surjective onto GF(2)");
        if self.degree <= 8 {
            let hit = (0..self.order() as u16).any(|x| x ^ self.mul_bits(x, x) == delta);
            assert!(
                !hit,
                "trace-1 element {delta:#x} lies in the image of x + x^2"
            );
        }
        FieldElem {
            bits: delta,
            field: *self,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q=2^{},mod={:x}", self.degree, self.modulus)
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    /// Parses the `q=2^e,mod=<hex>` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::Parse(s.to_string());
        let (q, m) = s.split_once(',').ok_or_else(bad)?;
        let e = q.strip_prefix("q=2^").ok_or_else(bad)?;
        let m = m.strip_prefix("mod=").ok_or_else(bad)?;
        let degree: u32 = e.parse().map_err(|_| bad())?;
        let modulus = u32::from_str_radix(m.trim_start_matches("0x"), 16).map_err(|_| bad())?;
        Self::new(degree, modulus)
    }
}

/// Per-degree modulus choices. The default is the shipped Conway table;
/// an override may be supplied as `e=hex` entries separated by commas or
/// whitespace, e.g. `2=7,3=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusTable {
    moduli: BTreeMap<u32, u32>,
}

impl Default for ModulusTable {
    fn default() -> Self {
        let moduli = DEFAULT_MODULI
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u32 + 1, m))
            .collect();
        Self { moduli }
    }
}

impl ModulusTable {
    /// Default table with the entries of `text` overriding it. Every
    /// override is validated for degree and irreducibility.
    pub fn parse(text: &str) -> Result<Self, FieldError> {
        let mut table = Self::default();
        for entry in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if entry.is_empty() {
                continue;
            }
            let (e, m) = entry
                .split_once('=')
                .ok_or_else(|| FieldError::Parse(entry.to_string()))?;
            let degree: u32 = e
                .trim()
                .parse()
                .map_err(|_| FieldError::Parse(entry.to_string()))?;
            let modulus = u32::from_str_radix(m.trim().trim_start_matches("0x"), 16)
                .map_err(|_| FieldError::Parse(entry.to_string()))?;
            FieldSpec::new(degree, modulus)?;
            table.moduli.insert(degree, modulus);
        }
        Ok(table)
    }

    /// Reads `NILP2_FIELD_TABLE` if set, else the default table.
    pub fn from_env() -> Result<Self, FieldError> {
        match std::env::var(FIELD_TABLE_ENV) {
            Ok(text) => Self::parse(&text),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn field(&self, degree: u32) -> Result<FieldSpec, FieldError> {
        let modulus = *self
            .moduli
            .get(&degree)
            .ok_or(FieldError::Capacity(degree))?;
        FieldSpec::new(degree, modulus)
    }

    pub fn field_with_order(&self, q: u32) -> Result<FieldSpec, FieldError> {
        if !q.is_power_of_two() || q < 2 {
            return Err(FieldError::Parse(format!("q={q} is not a power of 2")));
        }
        self.field(q.trailing_zeros())
    }
}

/// An element of GF(2^e), tagged with its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    bits: u16,
    field: FieldSpec,
}

impl FieldElem {
    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.field != other.field {
            Err(FieldError::Mismatch(self.field, other.field))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            field: self.field,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(Self {
            bits: self.field.mul_bits(self.bits, other.bits),
            field: self.field,
        })
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        let bits = self
            .field
            .inv_bits(self.bits)
            .ok_or(FieldError::DivisionByZero)?;
        Ok(Self {
            bits,
            field: self.field,
        })
    }

    pub fn square(&self) -> Self {
        Self {
            bits: self.field.mul_bits(self.bits, self.bits),
            field: self.field,
        }
    }

    pub fn sqrt(&self) -> Self {
        Self {
            bits: self.field.sqrt_bits(self.bits),
            field: self.field,
        }
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self {
            bits: self.field.pow_bits(self.bits, exp),
            field: self.field,
        }
    }

    /// Absolute trace down to GF(2), returned as 0 or 1.
    pub fn abs_trace(&self) -> u8 {
        self.field.trace_bits(self.bits) as u8
    }
}

impl fmt::Display for FieldElem {
    /// Polynomial in the generator class g, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for i in (0..self.field.degree).rev() {
            if self.bits >> i & 1 == 1 {
                terms.push(match i {
                    0 => "1".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{i}"),
                });
            }
        }
        write!(f, "{}", terms.join("+"))
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn elem_strategy() -> impl Strategy<Value = (u32, u16, u16, u16)> {
        (4u32..=16).prop_flat_map(|e| {
            let max = ((1u32 << e) - 1) as u16;
            (Just(e), 0..=max, 0..=max, 0..=max)
        })
    }

    proptest! {
        #[test]
        fn field_axioms_sampled((e, a, b, c) in elem_strategy()) {
            let f = FieldSpec::standard(e).unwrap();
            let (x, y, z) = (f.elem(a as u32).unwrap(), f.elem(b as u32).unwrap(), f.elem(c as u32).unwrap());
            prop_assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(),
                x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), f.one());
            }
            // Frobenius is additive.
            prop_assert_eq!(x.add(&y).unwrap().square(), x.square().add(&y.square()).unwrap());
        }

        #[test]
        fn trace_is_linear((e, a, b, _c) in elem_strategy()) {
            let f = FieldSpec::standard(e).unwrap();
            let (x, y) = (f.elem(a as u32).unwrap(), f.elem(b as u32).unwrap());
            prop_assert_eq!(x.add(&y).unwrap().abs_trace(), x.abs_trace() ^ y.abs_trace());
            prop_assert_eq!(x.square().abs_trace(), x.abs_trace());
        }
    }
}
