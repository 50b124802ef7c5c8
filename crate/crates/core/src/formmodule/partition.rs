use std::fmt;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts descending and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn from_multiplicities(groups: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let parts = groups
            .into_iter()
            .flat_map(|(part, mult)| std::iter::repeat_n(part, mult as usize))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// (part, multiplicity) pairs, parts strictly decreasing.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Iterator over the partitions of n in lexicographically decreasing order,
/// starting at (n) and ending at (1, ..., 1).
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition(cur.clone());
        // advance: decrement the last part > 1 and refill greedily
        let mut next = cur;
        let mut removed = 0u32;
        while let Some(&1) = next.last() {
            next.pop();
            removed += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            removed += 1;
            while removed > 0 {
                let take = removed.min(cap);
                next.push(take);
                removed -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

pub fn partitions(n: u32) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}
