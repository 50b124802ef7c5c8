//! The normalized indecomposable form modules over F_q and synthesis of a
//! representative module from a symbol.
//!
//! Each indecomposable is A v_1 + A v_2 on the basis
//! (v_1, T v_1, ..., T^{mu_1 - 1} v_1, v_2, ..., T^{mu_2 - 1} v_2), T the shift,
//! with the form read off the profiles:
//!
//! - Q(T^a v_i) is the coefficient of t^{-2a} in psi(v_i),
//! - <T^a v_1, T^b v_2> is the coefficient of t^{-(a+b)} in phi(v_1, v_2),
//! - <T^a v_i, T^b v_i> = 0, forced by <Tw, w> = 0 and self-adjointness.

use std::fmt;

use super::{CoeffProfile, FormModule, ModuleError, Symbol};
use crate::gfield::FieldSpec;
use crate::quadspace::{Matrix, QuadSpace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndecompSpec {
    /// W_l^0(m), floor((m+1)/2) <= l <= m.
    W0 { l: u32, m: u32 },
    /// W_l^delta(m), (m+1)/2 <= l <= m.
    WDelta { l: u32, m: u32 },
    /// D(m), m >= 1.
    D { m: u32 },
}

impl IndecompSpec {
    pub fn validate(&self) -> Result<(), ModuleError> {
        let bad = |msg: String| Err(ModuleError::OutOfRange(msg));
        match *self {
            IndecompSpec::W0 { l, m } => {
                if m == 0 || l < m.div_ceil(2) || l > m {
                    return bad(format!(
                        "W0 needs floor((m+1)/2) <= l <= m, got l={l}, m={m}"
                    ));
                }
            }
            IndecompSpec::WDelta { l, m } => {
                if m >= 1 && m % 2 == 0 && 2 * l == m {
                    return bad(format!(
                        "Wdelta boundary case l = m/2 = {l} is excluded by the strict bound (m+1)/2 <= l"
                    ));
                }
                if m == 0 || 2 * l < m + 1 || l > m {
                    return bad(format!("Wdelta needs (m+1)/2 <= l <= m, got l={l}, m={m}"));
                }
            }
            IndecompSpec::D { m } => {
                if m == 0 {
                    return bad("D needs m >= 1".into());
                }
            }
        }
        Ok(())
    }

    /// (mu(v_1), mu(v_2)).
    pub fn heights(&self) -> (u32, u32) {
        match *self {
            IndecompSpec::W0 { m, .. } | IndecompSpec::WDelta { m, .. } => (m, m),
            IndecompSpec::D { m } => (m, m - 1),
        }
    }

    pub fn dim(&self) -> usize {
        let (a, b) = self.heights();
        (a + b) as usize
    }

    /// (psi(v_1), psi(v_2), phi(v_1, v_2)).
    pub fn profiles(&self, field: FieldSpec) -> (CoeffProfile, CoeffProfile, CoeffProfile) {
        let one = field.one();
        match *self {
            IndecompSpec::W0 { l, m } => (
                CoeffProfile::monomial(2 * l - 2, one, true),
                CoeffProfile::new(true),
                CoeffProfile::monomial(m - 1, one, false),
            ),
            IndecompSpec::WDelta { l, m } => (
                CoeffProfile::monomial(2 * l - 2, one, true),
                CoeffProfile::monomial(2 * m - 2 * l, field.find_delta(), true),
                CoeffProfile::monomial(m - 1, one, false),
            ),
            IndecompSpec::D { m } => {
                // t^{2-m} has a positive exponent when m = 1; v_2 is then 0
                // and phi vanishes.
                let phi = if m >= 2 {
                    CoeffProfile::monomial(m - 2, one, false)
                } else {
                    CoeffProfile::new(false)
                };
                (
                    CoeffProfile::monomial(2 * m - 2, one, true),
                    CoeffProfile::new(true),
                    phi,
                )
            }
        }
    }
}

impl fmt::Display for IndecompSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndecompSpec::W0 { l, m } => write!(f, "W0_{l}({m})"),
            IndecompSpec::WDelta { l, m } => write!(f, "Wd_{l}({m})"),
            IndecompSpec::D { m } => write!(f, "D({m})"),
        }
    }
}

/// A constructed indecomposable with its designated generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indecomposable {
    pub spec: IndecompSpec,
    pub module: FormModule,
    pub v1: Vector,
    pub v2: Vector,
}

/// The module A v_1 + A v_2 with heights (m1, m2) whose form is read off
/// the given profiles.
fn module_from_profiles(
    field: FieldSpec,
    (m1, m2): (u32, u32),
    psi1: &CoeffProfile,
    psi2: &CoeffProfile,
    phi: &CoeffProfile,
) -> Result<FormModule, ModuleError> {
    let (m1, m2) = (m1 as usize, m2 as usize);
    let n = m1 + m2;
    // basis index -> (generator, power of T)
    let label = |i: usize| if i < m1 { (0, i) } else { (1, i - m1) };
    let bits = |c: Option<crate::gfield::FieldElem>| c.map_or(0, |x| x.bits());
    let q_values: Vec<u16> = (0..n)
        .map(|i| match label(i) {
            (0, a) => bits(psi1.coeff(2 * a as u32)),
            (_, a) => bits(psi2.coeff(2 * a as u32)),
        })
        .collect();
    let space = QuadSpace::from_values(field, &q_values, |i, j| match (label(i), label(j)) {
        ((0, a), (1, b)) => bits(phi.coeff((a + b) as u32)),
        _ => 0,
    });
    let t = Matrix::from_fn(field, n, n, |r, c| {
        let same_chain = (r < m1) == (c < m1);
        (same_chain && r == c + 1) as u16
    });
    FormModule::new(space, t)
}

pub fn build_indecomposable(
    spec: IndecompSpec,
    field: FieldSpec,
) -> Result<Indecomposable, ModuleError> {
    spec.validate()?;
    let (psi1, psi2, phi) = spec.profiles(field);
    let (m1, m2) = spec.heights();
    let module = module_from_profiles(field, (m1, m2), &psi1, &psi2, &phi)?;
    let n = spec.dim();
    let v1 = Vector::unit(field, n, 0);
    let v2 = if m2 > 0 {
        Vector::unit(field, n, m1 as usize)
    } else {
        Vector::zeros(field, n)
    };
    Ok(Indecomposable {
        spec,
        module,
        v1,
        v2,
    })
}

/// The indecomposable blocks of the representative of `symbol` selected by
/// `mask`: one D block for the odd-multiplicity parts (D(m) for {m, m-1},
/// D(1) for {1}), then mult/2 copies of W^0_chi(lambda) per remaining part,
/// with one copy switched to W^delta at each masked toggle position.
pub fn blocks_for_symbol(symbol: &Symbol, mask: &[bool]) -> Result<Vec<IndecompSpec>, ModuleError> {
    symbol.validate()?;
    let positions = symbol.toggle_positions(!symbol.is_defective());
    if mask.len() != positions.len() {
        return Err(ModuleError::MaskLength {
            expected: positions.len(),
            got: mask.len(),
        });
    }
    let terms = symbol.terms();
    let mut remaining: Vec<u32> = terms.iter().map(|t| t.mult).collect();
    let mut blocks = Vec::new();
    let odd = symbol.odd_parts();
    if let Some(&top) = odd.first() {
        blocks.push(IndecompSpec::D { m: top });
        for (i, t) in terms.iter().enumerate() {
            if odd.contains(&t.part) {
                remaining[i] -= 1;
            }
        }
    }
    for (i, t) in terms.iter().enumerate() {
        debug_assert_eq!(remaining[i] % 2, 0);
        let copies = remaining[i] / 2;
        let toggled = positions.iter().zip(mask).any(|(&p, &on)| on && p == i);
        if toggled && copies == 0 {
            return Err(ModuleError::Constraint(format!(
                "toggle at part {} has no W block",
                t.part
            )));
        }
        for c in 0..copies {
            blocks.push(if toggled && c == 0 {
                IndecompSpec::WDelta {
                    l: t.chi,
                    m: t.part,
                }
            } else {
                IndecompSpec::W0 {
                    l: t.chi,
                    m: t.part,
                }
            });
        }
    }
    Ok(blocks)
}

/// Synthesizes a module with the given symbol; the all-false mask gives the
/// canonical representative. The result is re-checked by recomputing its
/// symbol.
pub fn module_from_symbol(
    symbol: &Symbol,
    field: FieldSpec,
    mask: &[bool],
) -> Result<FormModule, ModuleError> {
    let blocks = blocks_for_symbol(symbol, mask)?;
    let mut iter = blocks.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| ModuleError::OutOfRange("empty symbol".into()))?;
    let mut module = build_indecomposable(first, field)?.module;
    for spec in iter {
        module = module.orthogonal_sum(&build_indecomposable(spec, field)?.module)?;
    }
    let got = module.symbol()?;
    if &got != symbol {
        return Err(ModuleError::RoundTrip {
            expected: symbol.clone(),
            got,
        });
    }
    Ok(module)
}
