//! Partition counts, closed-form orbit counts and the Springer cardinality
//! check.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::formmodule::{enumerate_symbols, SymbolError};

/// Memoized p(k) and p_2(k).
#[derive(Clone, Debug)]
pub struct CountTable {
    p: Vec<BigUint>,
    p2: Vec<BigUint>,
}

impl CountTable {
    /// Tables for 0 <= k <= max.
    pub fn new(max: usize) -> Self {
        let mut p: Vec<BigUint> = Vec::with_capacity(max + 1);
        p.push(BigUint::from(1u32));
        // Euler's pentagonal recurrence
        for n in 1..=max as i64 {
            let mut plus = BigUint::zero();
            let mut minus = BigUint::zero();
            for k in 1i64.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let g2 = k * (3 * k + 1) / 2;
                let target = if k % 2 == 1 { &mut plus } else { &mut minus };
                *target += &p[(n - g1) as usize];
                if g2 <= n {
                    *target += &p[(n - g2) as usize];
                }
            }
            p.push(plus - minus);
        }
        let p2 = (0..=max)
            .map(|k| (0..=k).map(|j| &p[j] * &p[k - j]).sum())
            .collect();
        Self { p, p2 }
    }

    pub fn max(&self) -> usize {
        self.p.len() - 1
    }

    pub fn p(&self, k: usize) -> &BigUint {
        &self.p[k]
    }

    pub fn p2(&self, k: usize) -> &BigUint {
        &self.p2[k]
    }
}

const DEFAULT_TABLE_MAX: usize = 60;

fn default_table() -> &'static CountTable {
    static TABLE: OnceLock<CountTable> = OnceLock::new();
    TABLE.get_or_init(|| CountTable::new(DEFAULT_TABLE_MAX))
}

fn with_table<R>(k: usize, f: impl FnOnce(&CountTable) -> R) -> R {
    if k <= DEFAULT_TABLE_MAX {
        f(default_table())
    } else {
        f(&CountTable::new(k))
    }
}

/// Number of partitions of k.
pub fn p(k: usize) -> BigUint {
    with_table(k, |t| t.p(k).clone())
}

/// Number of pairs of partitions (alpha, beta) with |alpha| + |beta| = k.
pub fn p2(k: usize) -> BigUint {
    with_table(k, |t| t.p2(k).clone())
}

/// The orthogonal groups whose nilpotent orbits are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    /// O_{2n+1}(F_q).
    B,
    /// O^+_{2n}(F_q).
    Dplus,
    /// O^-_{2n}(F_q).
    Dminus,
    /// SO^+_{2n}(F_q).
    SOplus,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 4] = [
        GroupFamily::B,
        GroupFamily::Dplus,
        GroupFamily::Dminus,
        GroupFamily::SOplus,
    ];

    pub fn dim(&self, n: u32) -> u32 {
        match self {
            GroupFamily::B => 2 * n + 1,
            _ => 2 * n,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupFamily::B => "B",
            GroupFamily::Dplus => "Dplus",
            GroupFamily::Dminus => "Dminus",
            GroupFamily::SOplus => "SOplus",
        })
    }
}

impl FromStr for GroupFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupFamily::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown group family {s:?}, expected B, Dplus, Dminus or SOplus")
            })
    }
}

/// Root system type for the Weyl-group side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
    D,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        })
    }
}

impl FromStr for LieType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            _ => Err(format!("unknown type {s:?}, expected B, C or D")),
        }
    }
}

/// x / 2, asserting exactness.
fn halve(x: BigUint) -> BigUint {
    assert!((&x % 2u32).is_zero(), "non-integral count {x}/2");
    x / 2u32
}

/// (p_2(n), p(n/2)) with p(n/2) = 0 for odd n.
fn pair(n: usize) -> (BigUint, BigUint) {
    with_table(n, |t| {
        (
            t.p2(n).clone(),
            if n.is_multiple_of(2) {
                t.p(n / 2).clone()
            } else {
                BigUint::zero()
            },
        )
    })
}

/// Number of nilpotent orbits of the family's group on its Lie algebra over
/// F_q, from the closed forms.
pub fn orbit_count(family: GroupFamily, n: u32) -> BigUint {
    let (p2n, ph) = pair(n as usize);
    match family {
        GroupFamily::B => p2n,
        GroupFamily::Dplus => halve(p2n + ph),
        GroupFamily::Dminus => halve(p2n - ph),
        GroupFamily::SOplus => halve(p2n + 3u32 * ph),
    }
}

/// The same count summed symbol by symbol over the per-symbol predictions.
pub fn symbol_census(family: GroupFamily, n: u32) -> Result<BigUint, SymbolError> {
    let dim = family.dim(n);
    let mut total = BigUint::zero();
    for s in enumerate_symbols(dim, family == GroupFamily::B)? {
        let c = s.fq_orbit_counts()?;
        total += match family {
            GroupFamily::B => c.odd,
            GroupFamily::Dplus => c.plus,
            GroupFamily::Dminus => c.minus,
            GroupFamily::SOplus => c.plus * if s.all_half() { 2 } else { 1 },
        };
    }
    Ok(total)
}

/// Pairs (orbit, irreducible equivariant local system), counted as the
/// large-q orbit count of the adjoint-type group.
pub fn local_system_census(ty: LieType, n: u32) -> BigUint {
    match ty {
        LieType::B | LieType::C => orbit_count(GroupFamily::B, n),
        LieType::D => orbit_count(GroupFamily::SOplus, n),
    }
}

/// Number of irreducible representations of the Weyl group of rank r,
/// from bipartitions: ordered pairs for B and C, unordered pairs for D with
/// the pairs {alpha, alpha} counted twice.
pub fn weyl_irrep_count(ty: LieType, r: u32) -> BigUint {
    let r = r as usize;
    with_table(r, |t| {
        let ordered: BigUint = (0..=r).map(|j| t.p(j) * t.p(r - j)).sum();
        match ty {
            LieType::B | LieType::C => ordered,
            LieType::D => {
                let diagonal = if r.is_multiple_of(2) {
                    t.p(r / 2).clone()
                } else {
                    BigUint::zero()
                };
                let unordered = halve(ordered + &diagonal);
                unordered + diagonal
            }
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerVerdict {
    pub ty: LieType,
    pub rank: u32,
    pub weyl: BigUint,
    pub local_systems: BigUint,
    /// The orbit side recomputed from symbols (B and D only).
    pub symbol_path: Option<BigUint>,
}

impl SpringerVerdict {
    pub fn pass(&self) -> bool {
        self.weyl == self.local_systems && self.symbol_path.as_ref().is_none_or(|s| *s == self.weyl)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "type": self.ty.to_string(),
            "rank": self.rank,
            "weyl_irreps": big_json(&self.weyl),
            "local_systems": big_json(&self.local_systems),
            "symbol_path": self.symbol_path.as_ref().map(big_json),
            "pass": self.pass(),
        })
    }
}

pub fn springer_cardinality_check(ty: LieType, r: u32) -> Result<SpringerVerdict, SymbolError> {
    let symbol_path = match ty {
        LieType::B => Some(symbol_census(GroupFamily::B, r)?),
        LieType::D => Some(symbol_census(GroupFamily::SOplus, r)?),
        LieType::C => None,
    };
    Ok(SpringerVerdict {
        ty,
        rank: r,
        weyl: weyl_irrep_count(ty, r),
        local_systems: local_system_census(ty, r),
        symbol_path,
    })
}

/// A JSON number when it fits in u64, a decimal string otherwise.
pub fn big_json(x: &BigUint) -> Value {
    x.to_u64()
        .map_or_else(|| Value::String(x.to_string()), Value::from)
}

/// One row of a count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub family: GroupFamily,
    pub n: u32,
    pub formula: BigUint,
    pub symbols: BigUint,
}

impl CountRow {
    pub fn compute(family: GroupFamily, n: u32) -> Result<Self, SymbolError> {
        Ok(Self {
            family,
            n,
            formula: orbit_count(family, n),
            symbols: symbol_census(family, n)?,
        })
    }

    pub fn agree(&self) -> bool {
        self.formula == self.symbols
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.to_string(),
            "n": self.n,
            "orbit_count": big_json(&self.formula),
            "symbol_census": big_json(&self.symbols),
            "agreement": self.agree(),
        })
    }
}

pub fn rows_to_tsv(rows: &[CountRow]) -> String {
    let mut out = String::from("family\tn\torbit_count\tsymbol_census\tagreement\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.family,
            r.n,
            r.formula,
            r.symbols,
            r.agree()
        ));
    }
    out
}

pub fn rows_to_json(rows: &[CountRow]) -> Value {
    Value::Array(rows.iter().map(CountRow::to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_values() {
        assert_eq!(p(4), n(5));
        assert_eq!(p2(2), n(5));
        assert_eq!(p2(0), n(1));
        assert_eq!(p(0), n(1));
        assert_eq!(p(60), n(966467));
        assert_eq!(p(100), n(190569292));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(orbit_count(GroupFamily::B, 2), n(5));
        assert_eq!(orbit_count(GroupFamily::Dplus, 2), n(3));
        assert_eq!(orbit_count(GroupFamily::Dminus, 2), n(2));
        assert_eq!(orbit_count(GroupFamily::SOplus, 2), n(4));
        assert_eq!(orbit_count(GroupFamily::Dplus, 3), n(5));
        assert_eq!(orbit_count(GroupFamily::Dminus, 3), n(5));
    }

    #[test]
    fn symbol_path() {
        assert_eq!(symbol_census(GroupFamily::B, 3).unwrap(), n(10));
        assert_eq!(symbol_census(GroupFamily::Dplus, 2).unwrap(), n(3));
        assert_eq!(symbol_census(GroupFamily::SOplus, 2).unwrap(), n(4));
    }

    #[test]
    fn weyl_and_local_systems() {
        assert_eq!(weyl_irrep_count(LieType::B, 2), n(5));
        assert_eq!(weyl_irrep_count(LieType::D, 2), n(4));
        assert_eq!(weyl_irrep_count(LieType::C, 3), n(10));
        assert_eq!(local_system_census(LieType::B, 2), n(5));
        assert_eq!(local_system_census(LieType::D, 2), n(4));
        assert_eq!(local_system_census(LieType::D, 3), n(5));
        let v = springer_cardinality_check(LieType::D, 4).unwrap();
        assert_eq!(v.weyl, n(13));
        assert!(v.pass());
    }

    #[test]
    fn parsing_and_emitters() {
        assert_eq!(
            "soplus".parse::<GroupFamily>().unwrap(),
            GroupFamily::SOplus
        );
        assert!("E".parse::<LieType>().is_err());
        let rows = vec![CountRow::compute(GroupFamily::B, 1).unwrap()];
        assert_eq!(
            rows_to_tsv(&rows),
            "family\tn\torbit_count\tsymbol_census\tagreement\nB\t1\t2\t2\ttrue\n"
        );
        assert_eq!(
            rows_to_json(&rows).to_string(),
            r#"[{"family":"B","n":1,"orbit_count":2,"symbol_census":2,"agreement":true}]"#
        );
    }
}
