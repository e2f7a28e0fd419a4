//! Finite unions of vertical intervals over a grid of columns and levels,
//! and the counting realizer: order `(p, q, y)` sorts by the number of
//! points `(x, y)` with `p ≤ x ≤ q`.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::extension::{topological_sort, LinearExtension, Realizer};
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    Closed,
    HalfOpen,
}

/// `{x} × [y, z]` or `{x} × [y, z)` on column index `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntervalBlock {
    pub kind: IntervalKind,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl IntervalBlock {
    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let end = match self.kind {
            IntervalKind::Closed => self.z + 1,
            IntervalKind::HalfOpen => self.z,
        };
        (self.y..end).map(move |l| (self.x, l))
    }
}

/// Preorder by the count of points `(x, y)` with `p ≤ x ≤ q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOrder {
    pub p: usize,
    pub q: usize,
    pub y: usize,
}

impl CountOrder {
    pub fn count(&self, points: &[(usize, usize)]) -> usize {
        points
            .iter()
            .filter(|&&(x, l)| l == self.y && self.p <= x && x <= self.q)
            .count()
    }
}

fn label(points: &[(usize, usize)]) -> String {
    let inner: Vec<String> = points.iter().map(|(x, y)| format!("({x},{y})")).collect();
    format!("{{{}}}", inner.join(","))
}

fn parse_label(s: &str) -> Option<Vec<(usize, usize)>> {
    let inner = s.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    for part in inner.split("),") {
        let part = part.strip_prefix('(')?.trim_end_matches(')');
        let (x, y) = part.split_once(',')?;
        out.push((x.parse().ok()?, y.parse().ok()?));
    }
    Some(out)
}

/// Every distinct union of at most `u` blocks over `grid` columns and `m`
/// levels (∅ included), ordered by strict inclusion. Elements are sorted by
/// size, then by their point lists.
pub fn interval_union_poset(grid: usize, m: usize, u: usize, count_cap: usize) -> Result<Poset> {
    let mut blocks: Vec<BitSet> = Vec::new();
    for x in 0..grid {
        for y in 0..m {
            for z in y..m {
                for kind in [IntervalKind::Closed, IntervalKind::HalfOpen] {
                    let b = IntervalBlock { kind, x, y, z };
                    blocks.push(BitSet::from_iter_with_len(grid * m, b.points().map(|(x, l)| x * m + l)));
                }
            }
        }
    }
    blocks.sort();
    blocks.dedup();

    let mut found: BTreeSet<BitSet> = BTreeSet::new();
    found.insert(BitSet::new(grid * m));
    let mut frontier: Vec<BitSet> = found.iter().cloned().collect();
    for _ in 0..u {
        let mut next = Vec::new();
        for s in &frontier {
            for b in &blocks {
                let mut t = s.clone();
                t.union_with(b);
                if !found.contains(&t) {
                    if found.len() >= count_cap {
                        return Err(Error::CapExceeded {
                            what: "interval unions",
                            actual: found.len() + 1,
                            cap: count_cap,
                        });
                    }
                    found.insert(t.clone());
                    next.push(t);
                }
            }
        }
        frontier = next;
    }

    let mut sets: Vec<Vec<(usize, usize)>> = found
        .iter()
        .map(|s| s.iter().map(|i| (i / m, i % m)).collect())
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let bits: Vec<BitSet> = sets
        .iter()
        .map(|s| BitSet::from_iter_with_len(grid * m, s.iter().map(|(x, l)| x * m + l)))
        .collect();
    Poset::from_fn(sets.len(), |i, j| i != j && bits[i].is_subset(&bits[j]))?
        .with_labels(sets.iter().map(|s| label(s)).collect())
}

/// One extension per `p ≤ q` and level `y`: ascending count, ties broken by
/// a fixed topological sort of the inclusion order.
pub fn interval_realizer(p: &Poset) -> Result<Realizer> {
    let labels = p
        .labels()
        .ok_or_else(|| Error::TypeMismatch("interval realizer needs point-set labels".into()))?;
    let sets = labels
        .iter()
        .map(|l| parse_label(l))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::TypeMismatch("labels are not point sets".into()))?;
    let grid = sets.iter().flatten().map(|&(x, _)| x + 1).max().unwrap_or(0);
    let m = sets.iter().flatten().map(|&(_, l)| l + 1).max().unwrap_or(0);
    let base = topological_sort(p);
    let mut extensions = Vec::new();
    for lo in 0..grid {
        for hi in lo..grid {
            for y in 0..m {
                let order = CountOrder { p: lo, q: hi, y };
                let mut ids: Vec<usize> = (0..p.len()).collect();
                ids.sort_by_key(|&i| (order.count(&sets[i]), base.position(i)));
                extensions.push(LinearExtension::new(ids)?);
            }
        }
    }
    if extensions.is_empty() {
        extensions.push(base);
    }
    Realizer::new(extensions)
}
