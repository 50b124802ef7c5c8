//! Symbols (lambda)_chi^m, their validity conditions, enumeration, and the
//! F_q splitting counts.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::partition::{partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("cannot parse symbol '{input}': {reason}")]
    Parse { input: String, reason: String },
    #[error("parts must be strictly decreasing and positive with positive multiplicities")]
    Malformed,
    #[error("invalid symbol {symbol}: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid {
        symbol: String,
        violations: Vec<Violation>,
    },
    #[error("dimension {dim} has the wrong parity for a {} space", if *.defective { "defective" } else { "non-defective" })]
    Parity { dim: u32, defective: bool },
}

/// One group (lambda)_chi^m of a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymbolTerm {
    pub part: u32,
    pub chi: u32,
    pub mult: u32,
}

impl SymbolTerm {
    pub fn new(part: u32, chi: u32, mult: u32) -> Self {
        Self { part, chi, mult }
    }

    /// chi = lambda / 2.
    pub fn is_half(&self) -> bool {
        2 * self.chi == self.part
    }
}

/// A failed validity condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// chi(lambda_i) < chi(lambda_{i+1}).
    ChiIncreases { part: u32, next: u32 },
    /// lambda_i - chi(lambda_i) < lambda_{i+1} - chi(lambda_{i+1}).
    CoindexIncreases { part: u32, next: u32 },
    /// chi outside [lambda/2, lambda].
    ChiOutOfRange { part: u32, chi: u32 },
    /// odd multiplicity with chi != lambda.
    OddMultiplicityChi { part: u32, chi: u32 },
    /// the odd-multiplicity parts are not {m, m-1} with m >= 1.
    OddPartSet { parts: Vec<u32> },
}

impl Violation {
    /// Which of the four conditions (1-based) this belongs to.
    pub fn condition(&self) -> u8 {
        match self {
            Violation::ChiIncreases { .. } | Violation::CoindexIncreases { .. } => 1,
            Violation::ChiOutOfRange { .. } => 2,
            Violation::OddMultiplicityChi { .. } => 3,
            Violation::OddPartSet { .. } => 4,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ChiIncreases { part, next } => {
                write!(f, "condition (i) violated: chi({part}) < chi({next})")
            }
            Violation::CoindexIncreases { part, next } => {
                write!(
                    f,
                    "condition (i) violated: {part} - chi({part}) < {next} - chi({next})"
                )
            }
            Violation::ChiOutOfRange { part, chi } => {
                write!(
                    f,
                    "condition (ii) violated: chi({part}) = {chi} not in [{part}/2, {part}]"
                )
            }
            Violation::OddMultiplicityChi { part, chi } => {
                write!(f, "condition (iii) violated: part {part} has odd multiplicity but chi = {chi} != {part}")
            }
            Violation::OddPartSet { parts } => {
                let list: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "condition (iv) violated: odd-multiplicity parts {{{}}} are not of the form {{m, m-1}}", list.join(", "))
            }
        }
    }
}

/// Parts with odd multiplicity are empty, {1}, or {m, m-1} with m >= 2.
fn odd_part_set_ok(odd: &[u32]) -> bool {
    match odd {
        [] => true,
        [p] => *p == 1,
        [a, b] => *a == *b + 1,
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    terms: Vec<SymbolTerm>,
}

impl Symbol {
    /// Checks structure only (strictly decreasing positive parts, positive
    /// multiplicities); validity is a separate question.
    pub fn new(terms: Vec<SymbolTerm>) -> Result<Self, SymbolError> {
        let ok = terms.iter().all(|t| t.part >= 1 && t.mult >= 1)
            && terms.windows(2).all(|w| w[0].part > w[1].part);
        if !ok {
            return Err(SymbolError::Malformed);
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[SymbolTerm] {
        &self.terms
    }

    pub fn dim(&self) -> u32 {
        self.terms.iter().map(|t| t.part * t.mult).sum()
    }

    pub fn is_defective(&self) -> bool {
        self.dim() % 2 == 1
    }

    pub fn partition(&self) -> Partition {
        Partition::from_multiplicities(self.terms.iter().map(|t| (t.part, t.mult)))
    }

    /// Parts of odd multiplicity, descending.
    pub fn odd_parts(&self) -> Vec<u32> {
        self.terms
            .iter()
            .filter(|t| t.mult % 2 == 1)
            .map(|t| t.part)
            .collect()
    }

    /// chi(lambda_i) = lambda_i / 2 for every i.
    pub fn all_half(&self) -> bool {
        self.terms.iter().all(SymbolTerm::is_half)
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for w in self.terms.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a.chi < b.chi {
                out.push(Violation::ChiIncreases {
                    part: a.part,
                    next: b.part,
                });
            }
            if (a.part as i64 - a.chi as i64) < (b.part as i64 - b.chi as i64) {
                out.push(Violation::CoindexIncreases {
                    part: a.part,
                    next: b.part,
                });
            }
        }
        for t in &self.terms {
            if 2 * t.chi < t.part || t.chi > t.part {
                out.push(Violation::ChiOutOfRange {
                    part: t.part,
                    chi: t.chi,
                });
            }
        }
        for t in &self.terms {
            if t.mult % 2 == 1 && t.chi != t.part {
                out.push(Violation::OddMultiplicityChi {
                    part: t.part,
                    chi: t.chi,
                });
            }
        }
        let odd = self.odd_parts();
        if !odd_part_set_ok(&odd) {
            out.push(Violation::OddPartSet { parts: odd });
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn validate(&self) -> Result<(), SymbolError> {
        let violations = self.violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(SymbolError::Invalid {
                symbol: self.to_string(),
                violations,
            })
        }
    }

    /// Indices i (0-based) with chi_i + chi_{i+1} <= lambda_i and
    /// chi_i != lambda_i / 2. With `include_last`, i ranges over all terms
    /// and chi past the end is 0; otherwise the last term is skipped.
    pub fn toggle_positions(&self, include_last: bool) -> Vec<usize> {
        let k = self.terms.len();
        let upto = if include_last { k } else { k.saturating_sub(1) };
        (0..upto)
            .filter(|&i| {
                let t = self.terms[i];
                let next_chi = self.terms.get(i + 1).map_or(0, |n| n.chi);
                t.chi + next_chi <= t.part && !t.is_half()
            })
            .collect()
    }

    /// (n_1, n_2).
    pub fn splitting_counts(&self) -> Result<(u32, u32), SymbolError> {
        self.validate()?;
        Ok((
            self.toggle_positions(false).len() as u32,
            self.toggle_positions(true).len() as u32,
        ))
    }

    /// Number of F_q-classes in the class over the algebraic closure:
    /// 2^{n_1} (defective) or 2^{n_2} (non-defective).
    pub fn fq_class_count(&self) -> Result<u64, SymbolError> {
        let (n1, n2) = self.splitting_counts()?;
        Ok(if self.is_defective() {
            1 << n1
        } else {
            1 << n2
        })
    }

    /// Orbit counts in the odd, plus and minus spaces of this dimension.
    pub fn fq_orbit_counts(&self) -> Result<FqOrbitCounts, SymbolError> {
        let (n1, n2) = self.splitting_counts()?;
        Ok(if self.is_defective() {
            FqOrbitCounts {
                odd: 1 << n1,
                plus: 0,
                minus: 0,
            }
        } else if self.all_half() {
            FqOrbitCounts {
                odd: 0,
                plus: 1,
                minus: 0,
            }
        } else {
            debug_assert!(n2 >= 1);
            let each = 1u64 << (n2 - 1);
            FqOrbitCounts {
                odd: 0,
                plus: each,
                minus: each,
            }
        })
    }
}

/// Per-space orbit counts of one symbol over F_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FqOrbitCounts {
    pub odd: u64,
    pub plus: u64,
    pub minus: u64,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            write!(f, "({})_{}", t.part, t.chi)?;
            if t.mult != 1 {
                write!(f, "^{}", t.mult)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Symbol {
    type Err = SymbolError;

    /// Parses `(3)_2^2(1)_1`: groups `(lambda)_chi` with optional `^m`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| SymbolError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let bytes = s.as_bytes();
        let mut pos = 0;
        let number = |pos: &mut usize| -> Option<u32> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos].parse().ok()
        };
        let mut terms = Vec::new();
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(err("expected '('"));
            }
            pos += 1;
            let part = number(&mut pos).ok_or_else(|| err("expected part"))?;
            if bytes.get(pos) != Some(&b')') {
                return Err(err("expected ')'"));
            }
            pos += 1;
            if bytes.get(pos) != Some(&b'_') {
                return Err(err("expected '_'"));
            }
            pos += 1;
            let chi = number(&mut pos).ok_or_else(|| err("expected index value"))?;
            let mult = if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                number(&mut pos).ok_or_else(|| err("expected multiplicity"))?
            } else {
                1
            };
            terms.push(SymbolTerm { part, chi, mult });
        }
        if terms.is_empty() {
            return Err(err("empty symbol"));
        }
        Symbol::new(terms)
    }
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Extends `prefix` by every admissible chi for term `i` onward, larger chi
/// first.
fn assign_chi(groups: &[(u32, u32)], prefix: &mut Vec<SymbolTerm>, out: &mut Vec<Symbol>) {
    let i = prefix.len();
    if i == groups.len() {
        out.push(Symbol {
            terms: prefix.clone(),
        });
        return;
    }
    let (part, mult) = groups[i];
    let (lo, hi) = if mult % 2 == 1 {
        (part, part)
    } else {
        (part.div_ceil(2), part)
    };
    for chi in (lo..=hi).rev() {
        if let Some(prev) = prefix.last() {
            if prev.chi < chi || prev.part - prev.chi < part - chi {
                continue;
            }
        }
        prefix.push(SymbolTerm { part, chi, mult });
        assign_chi(groups, prefix, out);
        prefix.pop();
    }
}

/// Every valid symbol of one partition.
pub fn symbols_of_partition(p: &Partition) -> Vec<Symbol> {
    let groups = p.multiplicities();
    let odd: Vec<u32> = groups
        .iter()
        .filter(|(_, m)| m % 2 == 1)
        .map(|(l, _)| *l)
        .collect();
    if !odd_part_set_ok(&odd) {
        return Vec::new();
    }
    let mut out = Vec::new();
    assign_chi(&groups, &mut Vec::with_capacity(groups.len()), &mut out);
    out
}

/// All valid symbols of total dimension `dim`: partitions in lex-descending
/// order, then chi assignments with larger values first.
pub fn enumerate_symbols(dim: u32, defective: bool) -> Result<Vec<Symbol>, SymbolError> {
    if (dim % 2 == 1) != defective || dim == 0 {
        return Err(SymbolError::Parity { dim, defective });
    }
    Ok(partitions(dim)
        .flat_map(|p| symbols_of_partition(&p))
        .collect())
}

/// Distinct symbols among `symbols` with every chi = lambda/2.
pub fn count_all_half(symbols: &[Symbol]) -> usize {
    symbols
        .iter()
        .filter(|s| s.all_half())
        .collect::<BTreeSet<_>>()
        .len()
}
