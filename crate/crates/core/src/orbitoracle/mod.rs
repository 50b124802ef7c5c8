//! Brute-force orbit oracle: the nilpotent elements of o(V)(F_q) for small
//! N and q, partitioned into O(V)- and SO(V)-orbits.
//!
//! Orbits are the connected components of the conjugation graph of a
//! generating set. SO-orbits come from the double cover whose states are
//! (x, parity): a generator g moves (x, p) to (g x g^-1, p + dickson(g)),
//! so (y, 0) is reachable from (x, 0) exactly when y = g x g^-1 for some g
//! of Dickson invariant 0.

mod engine;
mod group;

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::census::{big_json, orbit_count, GroupFamily};
use crate::formmodule::{enumerate_symbols, FormModule, ModuleError, Symbol};
use crate::gfield::FieldSpec;
use crate::quadspace::{is_nilpotent, Matrix, QuadSpace, SpaceError, SpaceKind};

use engine::{Key, Packer};
pub use group::orthogonal_group;
use group::Generator;

pub const DEFAULT_CAP_BITS: u32 = 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "capacity exceeded: o(V) has q^{dim} = 2^{required_bits} elements, budget is 2^{cap_bits}"
    )]
    Capacity {
        dim: usize,
        required_bits: u32,
        cap_bits: u32,
    },
    #[error("space is degenerate")]
    Degenerate,
    #[error("unsupported size: {0}")]
    Unsupported(String),
    #[error("{0} is not a nilpotent element of o(V)")]
    NotNilpotent(&'static str),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    O,
    SO,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::O => "O",
            GroupKind::SO => "SO",
        })
    }
}

impl FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O" | "o" => Ok(GroupKind::O),
            "SO" | "so" => Ok(GroupKind::SO),
            _ => Err(format!("unknown group {s:?}, expected O or SO")),
        }
    }
}

/// Which generating set of O(V) drives the orbit search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Generators {
    /// The full group for N <= 4, transvections otherwise.
    #[default]
    Auto,
    Transvections,
    FullGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// log2 of the largest o(V)(F_q) that may be scanned.
    pub cap_bits: u32,
    pub workers: usize,
    pub generators: Generators,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            cap_bits: DEFAULT_CAP_BITS,
            workers: 1,
            generators: Generators::Auto,
        }
    }
}

/// The nilpotent cone of o(V)(F_q), enumerated once.
pub struct Oracle {
    space: QuadSpace,
    kind: SpaceKind,
    packer: Packer,
    config: OracleConfig,
    elements: Vec<Key>,
    /// (key, position in `elements`) sorted by key.
    index: Vec<(Key, u32)>,
}

/// Per-element orbit labels; a label is the enumeration index of the first
/// element of its orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitLabels {
    pub o: Vec<u32>,
    /// Present for even N.
    pub so: Option<Vec<u32>>,
}

impl OrbitLabels {
    pub fn for_group(&self, group: GroupKind) -> &[u32] {
        match (group, &self.so) {
            (GroupKind::SO, Some(so)) => so,
            _ => &self.o,
        }
    }
}

fn check_capacity(space: &QuadSpace, cap_bits: u32) -> Result<(Vec<Matrix>, u32), OracleError> {
    let basis = space.lie_algebra_basis()?;
    let required_bits = basis.len() as u32 * space.field().degree();
    if required_bits > cap_bits {
        return Err(OracleError::Capacity {
            dim: basis.len(),
            required_bits,
            cap_bits,
        });
    }
    Ok((basis, required_bits))
}

fn packer_for(space: &QuadSpace) -> Result<Packer, OracleError> {
    Packer::new(space.field(), space.dim()).ok_or_else(|| {
        OracleError::Unsupported(format!(
            "N = {} over GF({}) exceeds the packed range",
            space.dim(),
            space.field().order()
        ))
    })
}

/// The nilpotent elements of o(V)(F_q) in enumeration order: coefficient
/// vectors over the o(V) basis read as base-q numbers, the first basis
/// element least significant. The zero matrix comes first.
pub fn enumerate_nilpotents(
    space: &QuadSpace,
    config: &OracleConfig,
) -> Result<Vec<Matrix>, OracleError> {
    let (basis, _) = check_capacity(space, config.cap_bits)?;
    let packer = packer_for(space)?;
    Ok(scan(&packer, &basis, config.workers)
        .into_iter()
        .map(|k| packer.unpack(k))
        .collect())
}

fn scan(packer: &Packer, basis: &[Matrix], workers: usize) -> Vec<Key> {
    let q = packer.field().order() as usize;
    let d = basis.len();
    // multiples[i][c] = c * basis[i]
    let multiples: Vec<Vec<Key>> = basis
        .iter()
        .map(|b| {
            let k = packer.pack(b);
            (0..q).map(|c| packer.scale(c as u8, k)).collect()
        })
        .collect();
    // fix the top `high` digits per chunk
    let mut high = 0;
    while high < d && q.pow(high as u32) < 64 * workers.max(1) {
        high += 1;
    }
    let low = d - high;
    let chunks = q.pow(high as u32);
    let scan_chunk = |chunk: usize| -> Vec<Key> {
        let mut base: Key = 0;
        let mut rest = chunk;
        for i in low..d {
            base ^= multiples[i][rest % q];
            rest /= q;
        }
        let mut digits = vec![0usize; low];
        let mut key = base;
        let mut out = Vec::new();
        loop {
            if packer.is_nilpotent(key) {
                out.push(key);
            }
            let mut i = 0;
            loop {
                if i == low {
                    return out;
                }
                let old = digits[i];
                let new = (old + 1) % q;
                key ^= multiples[i][old] ^ multiples[i][new];
                digits[i] = new;
                if new != 0 {
                    break;
                }
                i += 1;
            }
        }
    };
    run_chunks(chunks, workers, scan_chunk)
        .into_iter()
        .flatten()
        .collect()
}

/// Runs `f` over 0..chunks on `workers` threads, results in chunk order.
fn run_chunks<T: Send>(chunks: usize, workers: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let workers = workers.clamp(1, chunks.max(1));
    if workers == 1 {
        return (0..chunks).map(f).collect();
    }
    let per = chunks.div_ceil(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                s.spawn(move || {
                    (w * per..((w + 1) * per).min(chunks))
                        .map(f)
                        .collect::<Vec<T>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// The smaller root wins, so roots are component minima.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb as usize] = ra;
        } else if rb < ra {
            self.parent[ra as usize] = rb;
        }
    }
}

impl Oracle {
    pub fn new(space: QuadSpace, config: OracleConfig) -> Result<Self, OracleError> {
        if !space.is_nondegenerate() {
            return Err(OracleError::Degenerate);
        }
        let (basis, _) = check_capacity(&space, config.cap_bits)?;
        let kind = space.witt_type()?;
        let packer = packer_for(&space)?;
        let elements = scan(&packer, &basis, config.workers);
        let mut index: Vec<(Key, u32)> = elements
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i as u32))
            .collect();
        index.sort_unstable();
        Ok(Self {
            space,
            kind,
            packer,
            config,
            elements,
            index,
        })
    }

    /// The oracle on the standard space of the given kind.
    pub fn standard(
        kind: SpaceKind,
        dim: usize,
        field: FieldSpec,
        config: OracleConfig,
    ) -> Result<Self, OracleError> {
        Self::new(QuadSpace::standard(kind, dim, field)?, config)
    }

    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn nilpotent_count(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> Matrix {
        self.packer.unpack(self.elements[i])
    }

    fn lookup(&self, k: Key) -> Option<u32> {
        self.index
            .binary_search_by_key(&k, |&(key, _)| key)
            .ok()
            .map(|i| self.index[i].1)
    }

    pub fn index_of(&self, x: &Matrix) -> Option<usize> {
        if x.rows() != self.space.dim()
            || x.cols() != self.space.dim()
            || x.field() != self.space.field()
        {
            return None;
        }
        self.lookup(self.packer.pack(x)).map(|i| i as usize)
    }

    fn generators(&self, choice: Generators) -> Vec<Generator> {
        let full = match choice {
            Generators::Auto => self.space.dim() <= 4,
            Generators::FullGroup => true,
            Generators::Transvections => false,
        };
        if full {
            group::group_generators(&self.space, &self.packer)
        } else {
            group::transvections(&self.space)
        }
    }

    /// Whether parity is tracked (non-defective spaces only; in odd
    /// dimension O = SO).
    fn tracks_parity(&self) -> bool {
        self.kind != SpaceKind::Odd
    }

    /// Orbit labels under the generating set `choice`.
    pub fn labels_with(&self, choice: Generators) -> OrbitLabels {
        let gens = self.generators(choice);
        let m = self.elements.len();
        let cover = self.tracks_parity();
        let nodes = if cover { 2 * m } else { m };
        let workers = self.config.workers.max(1);
        let chunk_uf = |w: usize| -> UnionFind {
            let mut uf = UnionFind::new(nodes);
            let per = m.div_ceil(workers);
            for i in w * per..((w + 1) * per).min(m) {
                let x = self.elements[i];
                for g in &gens {
                    let j = self
                        .lookup(g.conjugate(&self.packer, x))
                        .expect("conjugate of a nilpotent is nilpotent");
                    let i = i as u32;
                    if cover {
                        let d = g.dickson() as u32;
                        uf.union(2 * i, 2 * j + d);
                        uf.union(2 * i + 1, 2 * j + (1 - d));
                    } else {
                        uf.union(i, j);
                    }
                }
            }
            uf
        };
        let mut parts = run_chunks(workers, workers, chunk_uf).into_iter();
        let mut uf = parts.next().expect("at least one worker");
        for mut other in parts {
            for x in 0..nodes as u32 {
                let r = other.find(x);
                if r != x {
                    uf.union(x, r);
                }
            }
        }
        if !cover {
            let o = (0..m as u32).map(|i| uf.find(i)).collect();
            return OrbitLabels { o, so: None };
        }
        // label each component by its first parity-0 node
        let mut first = vec![u32::MAX; nodes];
        let mut so = Vec::with_capacity(m);
        for j in 0..m as u32 {
            let r = uf.find(2 * j) as usize;
            if first[r] == u32::MAX {
                first[r] = j;
            }
            so.push(first[r]);
        }
        let o = (0..m as u32)
            .map(|j| {
                let other = first[uf.find(2 * j + 1) as usize];
                debug_assert_ne!(other, u32::MAX);
                so[j as usize].min(other)
            })
            .collect();
        OrbitLabels { o, so: Some(so) }
    }

    pub fn labels(&self) -> OrbitLabels {
        self.labels_with(self.config.generators)
    }

    pub fn symbol_of(&self, i: usize) -> Result<Symbol, OracleError> {
        Ok(FormModule::new(self.space.clone(), self.element(i))?.symbol()?)
    }

    /// The orbit census for `group` under the configured generators.
    pub fn census(&self, group: GroupKind) -> Result<OrbitCensus, OracleError> {
        let labels = self.labels();
        self.census_from_labels(group, &labels)
    }

    pub fn census_from_labels(
        &self,
        group: GroupKind,
        labels: &OrbitLabels,
    ) -> Result<OrbitCensus, OracleError> {
        let by = labels.for_group(group);
        let mut sizes: BTreeMap<u32, u64> = BTreeMap::new();
        for &l in by {
            *sizes.entry(l).or_default() += 1;
        }
        // an O-orbit splits when its SO labels differ from its O label set
        let mut split_of_o: BTreeMap<u32, bool> = BTreeMap::new();
        if let Some(so) = &labels.so {
            for (j, &o) in labels.o.iter().enumerate() {
                let e = split_of_o.entry(o).or_default();
                *e |= so[j] != o;
            }
        }
        let mut orbits = Vec::with_capacity(sizes.len());
        for (&rep, &size) in &sizes {
            let symbol = self.symbol_of(rep as usize)?;
            let o_label = labels.o[rep as usize];
            orbits.push(OrbitRecord {
                representative: self.element(rep as usize),
                size,
                symbol,
                so_split: split_of_o.get(&o_label).copied().unwrap_or(false),
            });
        }
        let group = if self.kind == SpaceKind::Odd {
            GroupKind::O
        } else {
            group
        };
        Ok(OrbitCensus {
            kind: self.kind,
            dim: self.space.dim(),
            field: self.space.field(),
            group,
            orbits,
            nilpotent_count: self.elements.len() as u64,
        })
    }

    /// Whether y is conjugate to x, by a search from x alone.
    pub fn conjugate(&self, x: &Matrix, y: &Matrix, group: GroupKind) -> Result<bool, OracleError> {
        let ix = self.index_of(x).ok_or(OracleError::NotNilpotent("x"))?;
        let iy = self.index_of(y).ok_or(OracleError::NotNilpotent("y"))?;
        let parity = group == GroupKind::SO && self.tracks_parity();
        let gens = self.generators(self.config.generators);
        let start = (self.elements[ix], 0u8);
        let goal = (self.elements[iy], 0u8);
        let mut seen: HashSet<(Key, u8)> = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((k, p)) = queue.pop_front() {
            if (k, p) == goal {
                return Ok(true);
            }
            for g in &gens {
                let next = (
                    g.conjugate(&self.packer, k),
                    if parity { p ^ g.dickson() } else { 0 },
                );
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        Ok(false)
    }
}

/// O(V)- or SO(V)-orbit partition of the nilpotent elements of o(V).
pub fn orbit_partition(
    space: &QuadSpace,
    group: GroupKind,
    config: &OracleConfig,
) -> Result<OrbitCensus, OracleError> {
    Oracle::new(space.clone(), *config)?.census(group)
}

/// Whether x and y lie in one orbit of `group`.
pub fn conjugacy_probe(
    space: &QuadSpace,
    x: &Matrix,
    y: &Matrix,
    group: GroupKind,
    config: &OracleConfig,
) -> Result<bool, OracleError> {
    check_capacity(space, config.cap_bits)?;
    for (name, m) in [("x", x), ("y", y)] {
        if !space.in_lie_algebra(m) || !is_nilpotent(m) {
            return Err(OracleError::NotNilpotent(name));
        }
    }
    // A search from x touches only its orbit; the full cone is still
    // enumerated so that lookups are shared with the census path.
    Oracle::new(space.clone(), *config)?.conjugate(x, y, group)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub representative: Matrix,
    pub size: u64,
    pub symbol: Symbol,
    /// The O-orbit containing this orbit splits into two SO-orbits.
    pub so_split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    pub kind: SpaceKind,
    pub dim: usize,
    pub field: FieldSpec,
    pub group: GroupKind,
    /// Ordered by the enumeration index of the representative.
    pub orbits: Vec<OrbitRecord>,
    pub nilpotent_count: u64,
}

impl OrbitCensus {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    /// The closed-form family counting these orbits; SO on a minus space is
    /// counted as O^- (no SO splitting is predicted there).
    pub fn family(&self) -> (GroupFamily, u32) {
        let n = (self.dim / 2) as u32;
        let fam = match (self.kind, self.group) {
            (SpaceKind::Odd, _) => GroupFamily::B,
            (SpaceKind::Plus, GroupKind::O) => GroupFamily::Dplus,
            (SpaceKind::Plus, GroupKind::SO) => GroupFamily::SOplus,
            (SpaceKind::Minus, _) => GroupFamily::Dminus,
        };
        (fam, n)
    }

    /// Orbit sizes grouped by symbol, symbols in order of first appearance.
    pub fn by_symbol(&self) -> Vec<(Symbol, Vec<u64>)> {
        let mut out: Vec<(Symbol, Vec<u64>)> = Vec::new();
        for o in &self.orbits {
            match out.iter_mut().find(|(s, _)| *s == o.symbol) {
                Some((_, sizes)) => sizes.push(o.size),
                None => out.push((o.symbol.clone(), vec![o.size])),
            }
        }
        out
    }

    pub fn to_json(&self, verdict: &CompareReport) -> Value {
        json!({
            "kind": self.kind.to_string(),
            "N": self.dim,
            "q": self.q(),
            "group": self.group.to_string(),
            "field": self.field.to_string(),
            "symbols": self.by_symbol().into_iter().map(|(s, sizes)| json!({
                "symbol": s.to_string(),
                "orbit_sizes": sizes,
            })).collect::<Vec<_>>(),
            "totals": {
                "nilpotents": self.nilpotent_count,
                "orbits": self.orbit_count(),
            },
            "verdict": verdict.to_json(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolComparison {
    pub symbol: Symbol,
    pub observed: u64,
    pub predicted: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    pub per_symbol: Vec<SymbolComparison>,
    pub observed_total: u64,
    pub predicted_total: u64,
    pub mismatches: Vec<String>,
}

impl CompareReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.pass(),
            "observed_orbits": self.observed_total,
            "predicted_orbits": self.predicted_total,
            "mismatches": self.mismatches,
        })
    }
}

/// Compares per-symbol orbit multiplicities, the SO-split flags and the
/// total against the predictions.
pub fn census_compare(census: &OrbitCensus) -> CompareReport {
    let mut mismatches = Vec::new();
    let observed: BTreeMap<Symbol, u64> = census
        .by_symbol()
        .into_iter()
        .map(|(s, sizes)| (s, sizes.len() as u64))
        .collect();
    let dim = census.dim as u32;
    let predicted_symbols =
        enumerate_symbols(dim, census.kind == SpaceKind::Odd).unwrap_or_default();
    let mut per_symbol = Vec::new();
    let mut all: Vec<Symbol> = predicted_symbols.clone();
    for s in observed.keys() {
        if !all.contains(s) {
            all.push(s.clone());
        }
    }
    for s in all {
        let predicted = match s.fq_orbit_counts() {
            Ok(c) => match (census.kind, census.group) {
                (SpaceKind::Odd, _) => c.odd,
                (SpaceKind::Plus, GroupKind::O) => c.plus,
                (SpaceKind::Plus, GroupKind::SO) => c.plus * if s.all_half() { 2 } else { 1 },
                (SpaceKind::Minus, _) => c.minus,
            },
            Err(_) => 0,
        };
        let obs = observed.get(&s).copied().unwrap_or(0);
        if obs != predicted {
            mismatches.push(format!("{s}: observed {obs} orbits, predicted {predicted}"));
        }
        if obs != 0 || predicted != 0 {
            per_symbol.push(SymbolComparison {
                symbol: s,
                observed: obs,
                predicted,
            });
        }
    }
    if census.kind != SpaceKind::Odd {
        for o in &census.orbits {
            let expect = census.kind == SpaceKind::Plus && o.symbol.all_half();
            if o.so_split != expect {
                mismatches.push(format!(
                    "{}: SO-split flag {} but predicted {}",
                    o.symbol, o.so_split, expect
                ));
            }
        }
    }
    let (family, n) = census.family();
    let formula = orbit_count(family, n);
    let observed_total = census.orbit_count() as u64;
    let predicted_total = big_json(&formula).as_u64().unwrap_or(u64::MAX);
    if observed_total != predicted_total {
        mismatches.push(format!(
            "total: observed {observed_total} orbits, {family}({n}) formula gives {formula}"
        ));
    }
    let size_sum: u64 = census.orbits.iter().map(|o| o.size).sum();
    if size_sum != census.nilpotent_count {
        mismatches.push(format!(
            "orbit sizes sum to {size_sum}, not {}",
            census.nilpotent_count
        ));
    }
    CompareReport {
        per_symbol,
        observed_total,
        predicted_total,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle(kind: SpaceKind, dim: usize) -> Oracle {
        Oracle::standard(kind, dim, FieldSpec::gf2(), OracleConfig::default()).unwrap()
    }

    #[test]
    fn o3_over_f2() {
        let o = oracle(SpaceKind::Odd, 3);
        assert_eq!(o.nilpotent_count(), 4);
        assert!(o.element(0).is_zero());
        let c = o.census(GroupKind::O).unwrap();
        let sizes: Vec<u64> = c.orbits.iter().map(|r| r.size).collect();
        assert_eq!(sizes, vec![1, 3]);
        assert!(census_compare(&c).pass());
    }

    #[test]
    fn plus4_o_and_so() {
        let o = oracle(SpaceKind::Plus, 4);
        let c = o.census(GroupKind::O).unwrap();
        assert_eq!(c.orbit_count(), 3);
        let so = o.census(GroupKind::SO).unwrap();
        assert_eq!(so.orbit_count(), 4);
        let split: Vec<String> = so
            .orbits
            .iter()
            .filter(|r| r.so_split)
            .map(|r| r.symbol.to_string())
            .collect();
        assert_eq!(split, vec!["(2)_1^2", "(2)_1^2"]);
        assert!(census_compare(&c).pass());
        assert!(census_compare(&so).pass());
    }

    #[test]
    fn capacity_and_degenerate() {
        let f = FieldSpec::gf2();
        let cfg = OracleConfig {
            cap_bits: 10,
            ..OracleConfig::default()
        };
        assert!(Oracle::standard(SpaceKind::Odd, 5, f, cfg).is_ok());
        assert!(matches!(
            Oracle::standard(SpaceKind::Odd, 7, f, cfg),
            Err(OracleError::Capacity {
                dim: 21,
                required_bits: 21,
                cap_bits: 10
            })
        ));
        let zero = QuadSpace::from_coefficients(&Matrix::zeros(f, 2, 2)).unwrap();
        assert!(matches!(
            Oracle::new(zero, OracleConfig::default()),
            Err(OracleError::Degenerate)
        ));
    }

    #[test]
    fn workers_do_not_change_results() {
        let f = FieldSpec::gf2();
        let one = Oracle::standard(SpaceKind::Minus, 6, f, OracleConfig::default()).unwrap();
        let four = Oracle::standard(
            SpaceKind::Minus,
            6,
            f,
            OracleConfig {
                workers: 4,
                ..OracleConfig::default()
            },
        )
        .unwrap();
        assert_eq!(one.elements, four.elements);
        assert_eq!(one.labels(), four.labels());
    }
}
