//! Finite strict partial orders stored as transitively closed bit matrices.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A finite strict partial order on `0..n`.
///
/// The relation is kept transitively closed, with both successor and
/// predecessor rows so that up-sets and down-sets are single lookups.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    succ: Vec<BitSet>,
    pred: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

impl Poset {
    /// Builds the transitive closure of `pairs` (read as `i < j`).
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![BitSet::new(n); n];
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::Bounds { index, n });
                }
            }
            succ[i].insert(j);
        }
        Self::close(n, succ)
    }

    /// Builds the closure of the relation `lt(i, j)` evaluated on all pairs.
    pub fn from_fn(n: usize, mut lt: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut succ = vec![BitSet::new(n); n];
        for (i, row) in succ.iter_mut().enumerate() {
            for j in 0..n {
                if lt(i, j) {
                    row.insert(j);
                }
            }
        }
        Self::close(n, succ)
    }

    pub fn antichain(n: usize) -> Self {
        Self::close(n, vec![BitSet::new(n); n]).expect("empty relation is acyclic")
    }

    fn close(n: usize, mut succ: Vec<BitSet>) -> Result<Self> {
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = succ[k].clone();
            for row in succ.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| succ[i].contains(i)) {
            return Err(Error::Cycle(i));
        }
        let mut pred = vec![BitSet::new(n); n];
        for (i, row) in succ.iter().enumerate() {
            for j in row.iter() {
                pred[j].insert(i);
            }
        }
        let p = Poset {
            n,
            succ,
            pred,
            labels: None,
        };
        debug_assert!(p.check_invariants());
        Ok(p)
    }

    /// Attaches one display label per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.succ[i].contains(j)
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    /// Strict successors of `i`.
    pub fn up(&self, i: usize) -> &BitSet {
        &self.succ[i]
    }

    /// Strict predecessors of `i`.
    pub fn down(&self, i: usize) -> &BitSet {
        &self.pred[i]
    }

    /// `{z : z ⪯ i}`.
    pub fn cone(&self, i: usize) -> BitSet {
        let mut s = self.pred[i].clone();
        s.insert(i);
        s
    }

    /// `{z : i ⪯ z}`.
    pub fn upper_cone(&self, i: usize) -> BitSet {
        let mut s = self.succ[i].clone();
        s.insert(i);
        s
    }

    /// Number of strictly comparable ordered pairs.
    pub fn relation_size(&self) -> usize {
        self.succ.iter().map(BitSet::count).sum()
    }

    /// All ordered pairs `(i, j)` with `i < j` in the order.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.succ.iter().enumerate() {
            out.extend(row.iter().map(|j| (i, j)));
        }
        out
    }

    /// Pairs `(i, j)` where `j` covers `i`, in lexicographic order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.succ[i].iter() {
                // j covers i iff no k with i < k < j
                let mut between = self.succ[i].clone();
                between.intersect_with(&self.pred[j]);
                if between.is_empty() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Ordered incomparable pairs; the result is symmetric.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.comparable(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Incomparable `(x, y)` with `down(x) ⊆ down(y)` and `up(y) ⊆ up(x)`.
    ///
    /// A family of linear extensions realizes the order as soon as each of
    /// these pairs is reversed (`y` placed below `x`) by some member.
    pub fn critical_pairs(&self) -> Vec<(usize, usize)> {
        self.incomparable_pairs()
            .into_iter()
            .filter(|&(x, y)| self.pred[x].is_subset(&self.pred[y]) && self.succ[y].is_subset(&self.succ[x]))
            .collect()
    }

    /// `max |{z : z ⪯ x}|`, or 0 for the empty poset.
    pub fn predecessor_bound(&self) -> usize {
        self.pred.iter().map(|p| p.count() + 1).max().unwrap_or(0)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.pred[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.succ[i].is_empty()).collect()
    }

    pub fn is_antichain(&self, elements: &[usize]) -> bool {
        elements.iter().enumerate().all(|(a, &x)| {
            elements[a + 1..]
                .iter()
                .all(|&y| x != y && !self.comparable(x, y))
        })
    }

    /// The suborder induced on `elements`, renumbered in the given order.
    pub fn induced(&self, elements: &[usize]) -> Result<Poset> {
        for &index in elements {
            if index >= self.n {
                return Err(Error::Bounds { index, n: self.n });
            }
        }
        let sub = Poset::from_fn(elements.len(), |a, b| self.lt(elements[a], elements[b]))?;
        match &self.labels {
            Some(l) => sub.with_labels(elements.iter().map(|&e| l[e].clone()).collect()),
            None => Ok(sub),
        }
    }

    /// The same ground set with the order reversed.
    pub fn dual(&self) -> Poset {
        let p = Poset {
            n: self.n,
            succ: self.pred.clone(),
            pred: self.succ.clone(),
            labels: self.labels.clone(),
        };
        debug_assert!(p.check_invariants());
        p
    }

    /// Irreflexivity, antisymmetry, transitivity, and row consistency.
    pub fn check_invariants(&self) -> bool {
        for i in 0..self.n {
            if self.succ[i].contains(i) {
                return false;
            }
            for j in self.succ[i].iter() {
                if self.succ[j].contains(i) || !self.pred[j].contains(i) {
                    return false;
                }
                if !self.succ[j].is_subset(&self.succ[i]) {
                    return false;
                }
            }
            if self.pred[i].count() != (0..self.n).filter(|&k| self.succ[k].contains(i)).count() {
                return false;
            }
        }
        true
    }
}

/// Formats a set of ids as `{a,b,c}` in increasing order.
pub fn set_label(items: impl IntoIterator<Item = usize>) -> String {
    let mut v: Vec<usize> = items.into_iter().collect();
    v.sort_unstable();
    let body: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(","))
}

/// Parses a `{a,b,c}` label back into a sorted id list.
pub fn parse_set_label(label: &str) -> Option<Vec<usize>> {
    let inner = label.trim().strip_prefix('{')?.strip_suffix('}')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    let mut v = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().ok())
        .collect::<Option<Vec<_>>>()?;
    v.sort_unstable();
    Some(v)
}
