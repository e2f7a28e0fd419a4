//! Linear extensions, realizers, and topological sorting.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Default element cap for exhaustive linear-extension enumeration.
pub const DEFAULT_EXTENSION_CAP: usize = 10;

/// A total order on `0..n`, listed from least to greatest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearExtension {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearExtension {
    /// `order[r]` is the element of rank `r`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (r, &e) in order.iter().enumerate() {
            if e >= n {
                return Err(Error::Bounds { index: e, n });
            }
            if pos[e] != usize::MAX {
                return Err(Error::Domain(format!("element {e} repeated in linear order")));
            }
            pos[e] = r;
        }
        Ok(LinearExtension { order, pos })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Rank of element `e`.
    #[inline]
    pub fn position(&self, e: usize) -> usize {
        self.pos[e]
    }

    #[inline]
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.pos[a] < self.pos[b]
    }

    /// First relation pair `(i, j)` of `p` that this order places backwards.
    pub fn first_violation(&self, p: &Poset) -> Option<(usize, usize)> {
        if self.len() != p.len() {
            return Some((0, 0));
        }
        for i in 0..p.len() {
            for j in p.up(i).iter() {
                if self.pos[j] < self.pos[i] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn extends(&self, p: &Poset) -> bool {
        self.first_violation(p).is_none()
    }
}

/// A non-empty family of linear orders on the same ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    extensions: Vec<LinearExtension>,
}

impl Realizer {
    pub fn new(extensions: Vec<LinearExtension>) -> Result<Self> {
        let Some(first) = extensions.first() else {
            return Err(Error::Domain("a realizer needs at least one linear order".into()));
        };
        let n = first.len();
        if let Some(bad) = extensions.iter().find(|e| e.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Realizer { extensions })
    }

    pub fn extensions(&self) -> &[LinearExtension] {
        &self.extensions
    }

    /// Number of linear orders in the family.
    pub fn size(&self) -> usize {
        self.extensions.len()
    }

    /// Ground-set size.
    pub fn ground_len(&self) -> usize {
        self.extensions[0].len()
    }
}

/// Kahn's algorithm over `lt(i, j)` rows; among available elements the one
/// with the smallest `key` goes first. Returns `None` on a cycle.
pub fn topological_sort_by_key<K: Ord>(
    n: usize,
    succ: &[BitSet],
    key: impl Fn(usize) -> K,
) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for row in succ {
        for j in row.iter() {
            indeg[j] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<(K, usize)>> = (0..n)
        .filter(|&i| indeg[i] == 0)
        .map(|i| Reverse((key(i), i)))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((_, i))) = heap.pop() {
        order.push(i);
        for j in succ[i].iter() {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                heap.push(Reverse((key(j), j)));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Topological sort of the poset, smallest id first.
pub fn topological_sort(p: &Poset) -> LinearExtension {
    let succ: Vec<BitSet> = (0..p.len()).map(|i| p.up(i).clone()).collect();
    let order = topological_sort_by_key(p.len(), &succ, |i| i).expect("posets are acyclic");
    LinearExtension::new(order).expect("topological sort is a permutation")
}

/// Streams every linear extension of `p` exactly once, in lexicographic
/// order of the element sequence.
pub fn linear_extensions(p: &Poset) -> Result<LinearExtensions> {
    linear_extensions_capped(p, DEFAULT_EXTENSION_CAP)
}

pub fn linear_extensions_capped(p: &Poset, cap: usize) -> Result<LinearExtensions> {
    let cap = cap.min(64);
    if p.len() > cap {
        return Err(Error::CapExceeded {
            what: "linear extension enumeration size",
            actual: p.len(),
            cap,
        });
    }
    let preds = (0..p.len())
        .map(|i| p.down(i).iter().fold(0u64, |m, j| m | (1 << j)))
        .collect();
    Ok(LinearExtensions {
        n: p.len(),
        preds,
        placed: 0,
        prefix: Vec::with_capacity(p.len()),
        next_try: vec![0; p.len() + 1],
        started: false,
        done: false,
    })
}

pub struct LinearExtensions {
    n: usize,
    preds: Vec<u64>,
    placed: u64,
    prefix: Vec<usize>,
    // smallest candidate still to try at each depth
    next_try: Vec<usize>,
    started: bool,
    done: bool,
}

impl LinearExtensions {
    fn available(&self, c: usize) -> bool {
        self.placed & (1 << c) == 0 && self.preds[c] & !self.placed == 0
    }

    /// Descends from the current prefix to the next complete order, or
    /// exhausts the search.
    fn advance(&mut self) -> bool {
        loop {
            let d = self.prefix.len();
            if d == self.n {
                return true;
            }
            let found = (self.next_try[d]..self.n).find(|&c| self.available(c));
            match found {
                Some(c) => {
                    self.next_try[d] = c + 1;
                    self.prefix.push(c);
                    self.placed |= 1 << c;
                    self.next_try[d + 1] = 0;
                }
                None => {
                    let Some(last) = self.prefix.pop() else {
                        return false;
                    };
                    self.placed &= !(1 << last);
                }
            }
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        if self.started {
            // step past the order emitted last time
            match self.prefix.pop() {
                Some(last) => self.placed &= !(1 << last),
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        if self.advance() {
            Some(LinearExtension::new(self.prefix.clone()).expect("valid permutation"))
        } else {
            self.done = true;
            None
        }
    }
}
