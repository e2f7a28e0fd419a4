//! Exact dimension by assigning critical pairs to colour classes.
//!
//! A class is feasible when the order plus the reversals assigned to it
//! (`y` below `x` for each critical pair `(x, y)`) stays acyclic; each class
//! is kept transitively closed so the test is a single bit lookup.

use crate::bitset::BitSet;
use crate::extension::{topological_sort_by_key, LinearExtension, Realizer};
use crate::poset::Poset;

use super::{Budget, Meter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Realizer),
    Infeasible,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimensionResult {
    Exact {
        dimension: usize,
        realizer: Realizer,
    },
    /// The budget ran out; `upper` is witnessed by `realizer`.
    Timeout {
        lower: usize,
        upper: usize,
        realizer: Realizer,
    },
}

#[derive(Clone)]
struct Class {
    succ: Vec<BitSet>,
    pred: Vec<BitSet>,
}

impl Class {
    fn from_poset(p: &Poset) -> Self {
        Class {
            succ: (0..p.len()).map(|i| p.up(i).clone()).collect(),
            pred: (0..p.len()).map(|i| p.down(i).clone()).collect(),
        }
    }

    #[inline]
    fn lt(&self, a: usize, b: usize) -> bool {
        self.succ[a].contains(b)
    }

    /// Can `y` be placed below `x` without a cycle?
    #[inline]
    fn can_reverse(&self, x: usize, y: usize) -> bool {
        !self.lt(x, y)
    }

    /// Adds `y < x` and restores transitive closure.
    fn reverse(&mut self, x: usize, y: usize) {
        let mut below = self.pred[y].clone();
        below.insert(y);
        let mut above = self.succ[x].clone();
        above.insert(x);
        for a in below.iter() {
            self.succ[a].union_with(&above);
        }
        for b in above.iter() {
            self.pred[b].union_with(&below);
        }
    }

    fn linearize(&self) -> LinearExtension {
        let order = topological_sort_by_key(self.succ.len(), &self.succ, |i| i).expect("class stays acyclic");
        LinearExtension::new(order).expect("permutation")
    }
}

enum Step {
    Found,
    Fail,
    Exhausted,
}

struct Search<'a> {
    pairs: &'a [(usize, usize)],
    k: usize,
    base: Class,
    classes: Vec<Class>,
    used: usize,
    done: Vec<bool>,
    meter: &'a mut Meter,
}

impl Search<'_> {
    fn solve(&mut self) -> Step {
        if self.meter.tick() {
            return Step::Exhausted;
        }
        let mut settled = Vec::new();
        let mut best: Option<(usize, usize)> = None;
        for idx in 0..self.pairs.len() {
            if self.done[idx] {
                continue;
            }
            let (x, y) = self.pairs[idx];
            if self.classes[..self.used].iter().any(|c| c.lt(y, x)) {
                self.done[idx] = true;
                settled.push(idx);
                continue;
            }
            let options = self.classes[..self.used]
                .iter()
                .filter(|c| c.can_reverse(x, y))
                .count()
                + usize::from(self.used < self.k);
            if options == 0 {
                self.unsettle(&settled);
                return Step::Fail;
            }
            if best.is_none_or(|(_, o)| options < o) {
                best = Some((idx, options));
            }
        }
        let Some((idx, _)) = best else {
            return Step::Found;
        };
        let (x, y) = self.pairs[idx];
        self.done[idx] = true;
        let open_new = self.used < self.k;
        for c in 0..self.used + usize::from(open_new) {
            let fresh = c == self.used;
            if !fresh && !self.classes[c].can_reverse(x, y) {
                continue;
            }
            let saved = self.classes[c].clone();
            if fresh {
                self.used += 1;
            }
            self.classes[c].reverse(x, y);
            match self.solve() {
                Step::Fail => {}
                other => return other,
            }
            self.classes[c] = saved;
            if fresh {
                self.used -= 1;
            }
        }
        self.done[idx] = false;
        self.unsettle(&settled);
        Step::Fail
    }

    fn unsettle(&mut self, settled: &[usize]) {
        for &i in settled {
            self.done[i] = false;
        }
    }

    fn realizer(&self) -> Realizer {
        let exts = (0..self.k)
            .map(|c| {
                if c < self.used {
                    self.classes[c].linearize()
                } else {
                    self.base.linearize()
                }
            })
            .collect();
        Realizer::new(exts).expect("k >= 1")
    }
}

fn search_with_meter(p: &Poset, k: usize, meter: &mut Meter) -> SearchOutcome {
    if k == 0 {
        return SearchOutcome::Infeasible;
    }
    let pairs = p.critical_pairs();
    let base = Class::from_poset(p);
    let mut s = Search {
        pairs: &pairs,
        k,
        classes: vec![base.clone(); k],
        base,
        used: 0,
        done: vec![false; pairs.len()],
        meter,
    };
    match s.solve() {
        Step::Found => SearchOutcome::Found(s.realizer()),
        Step::Fail => SearchOutcome::Infeasible,
        Step::Exhausted => SearchOutcome::BudgetExhausted,
    }
}

/// A realizer of exactly `k` extensions, or `None` if none exists.
pub fn dimension_search(p: &Poset, k: usize) -> Option<Realizer> {
    match dimension_search_with(p, k, &Budget::unlimited()) {
        SearchOutcome::Found(r) => Some(r),
        _ => None,
    }
}

pub fn dimension_search_with(p: &Poset, k: usize, budget: &Budget) -> SearchOutcome {
    search_with_meter(p, k, &mut budget.meter())
}

/// The order dimension (1 for posets with fewer than two elements).
pub fn exact_dimension(p: &Poset) -> usize {
    match exact_dimension_with(p, &Budget::unlimited()) {
        DimensionResult::Exact { dimension, .. } => dimension,
        DimensionResult::Timeout { .. } => unreachable!("unlimited budget"),
    }
}

/// Tries `k = 1, 2, ...` under a shared budget.
pub fn exact_dimension_with(p: &Poset, budget: &Budget) -> DimensionResult {
    let mut meter = budget.meter();
    let mut lower = 1;
    loop {
        match search_with_meter(p, lower, &mut meter) {
            SearchOutcome::Found(realizer) => {
                return DimensionResult::Exact {
                    dimension: lower,
                    realizer,
                }
            }
            SearchOutcome::Infeasible => lower += 1,
            SearchOutcome::BudgetExhausted => {
                let realizer = greedy_realizer(p);
                return DimensionResult::Timeout {
                    lower,
                    upper: realizer.size().max(lower),
                    realizer,
                };
            }
        }
    }
}

/// Upper bound: each pass reverses a maximal acyclic batch of the
/// critical pairs not yet reversed.
pub fn greedy_realizer(p: &Poset) -> Realizer {
    let pairs = p.critical_pairs();
    let mut covered = vec![false; pairs.len()];
    let mut exts = Vec::new();
    loop {
        let mut class = Class::from_poset(p);
        for (idx, &(x, y)) in pairs.iter().enumerate() {
            if !covered[idx] && class.can_reverse(x, y) {
                class.reverse(x, y);
            }
        }
        let ext = class.linearize();
        for (idx, &(x, y)) in pairs.iter().enumerate() {
            if ext.precedes(y, x) {
                covered[idx] = true;
            }
        }
        exts.push(ext);
        if covered.iter().all(|&c| c) {
            break;
        }
    }
    Realizer::new(exts).expect("at least one pass")
}
