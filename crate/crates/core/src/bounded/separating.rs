use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::Poset;

use super::cover::first_cover;
use super::cover_free::{build_cover_free, CoverFreeFamily};

/// Maps `f_α : P → {0,1}` stored as their supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingFamily {
    ground: usize,
    functions: Vec<BitSet>,
    c: usize,
}

impl SeparatingFamily {
    pub fn new(ground: usize, functions: Vec<BitSet>, c: usize) -> Result<Self> {
        if let Some(f) = functions.iter().find(|f| f.capacity() != ground) {
            return Err(Error::SizeMismatch {
                expected: ground,
                found: f.capacity(),
            });
        }
        Ok(SeparatingFamily { ground, functions, c })
    }

    pub fn size(&self) -> usize {
        self.functions.len()
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn functions(&self) -> &[BitSet] {
        &self.functions
    }

    pub fn value(&self, alpha: usize, x: usize) -> bool {
        self.functions[alpha].contains(x)
    }

    /// Least `α` with `f_α''A = {0}` and `f_α(y) = 1`.
    pub fn separator(&self, a: &[usize], y: usize) -> Option<usize> {
        self.functions
            .iter()
            .position(|f| f.contains(y) && a.iter().all(|&x| !f.contains(x)))
    }

    /// `T_x = {α : f_α(x) = 1}` for every element.
    fn columns(&self) -> Vec<BitSet> {
        (0..self.ground)
            .map(|x| BitSet::from_iter_with_len(self.size(), (0..self.size()).filter(|&a| self.functions[a].contains(x))))
            .collect()
    }
}

/// `(s, H)` with `s` a finite subset of the cover-free ground and `H` a set
/// of subsets of `s`; `h_ξ(s, H) = 1` iff `E_ξ ∩ s ∈ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SHPair {
    pub s: Vec<usize>,
    pub h: Vec<Vec<usize>>,
}

impl SHPair {
    pub fn value(&self, e: &BitSet) -> bool {
        let trace: Vec<usize> = self.s.iter().copied().filter(|&a| e.contains(a)).collect();
        self.h.contains(&trace)
    }
}

/// Functions `h_ξ(s, H)` for every singleton `s = {a}` and both
/// non-trivial `H`, constant functions dropped.
pub fn sh_separating_family(e: &CoverFreeFamily) -> (SeparatingFamily, Vec<SHPair>) {
    let n = e.len();
    let mut pairs = Vec::new();
    let mut functions = Vec::new();
    for a in 0..e.ground_size() {
        for h in [vec![vec![a]], vec![vec![]]] {
            let pair = SHPair { s: vec![a], h };
            let support = BitSet::from_iter_with_len(n, (0..n).filter(|&xi| pair.value(&e.sets()[xi])));
            // constant 1 can only separate a point from ∅, which matters for n = 1
            let constant = support.is_empty() || (n > 1 && support.count() == n);
            if !constant {
                pairs.push(pair);
                functions.push(support);
            }
        }
    }
    (
        SeparatingFamily {
            ground: n,
            functions,
            c: e.c(),
        },
        pairs,
    )
}

/// `f_α(x_ξ) = 1` iff `α ∈ E_ξ` over a c-cover-free family on the elements.
pub fn separating_family(p: &Poset, c: usize, seed: u64) -> Result<(SeparatingFamily, CoverFreeFamily)> {
    let n = p.len();
    let e = build_cover_free(n, c.max(1), seed)?;
    let functions = (0..e.ground_size())
        .map(|alpha| BitSet::from_iter_with_len(n, (0..n).filter(|&xi| e.sets()[xi].contains(alpha))))
        .collect();
    Ok((SeparatingFamily { ground: n, functions, c }, e))
}

/// Counts of enumerated sets `A` above which [`verify_separating`] stops
/// enumerating and switches to the exact cover search.
pub const SEPARATING_ENUM_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    Ok,
    /// No function sends `a` to 0 and `y` to 1.
    Fails { a: Vec<usize>, y: usize },
}

impl Separation {
    pub fn is_ok(&self) -> bool {
        matches!(self, Separation::Ok)
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
}

/// Checks every `A` of size `min(c, n-1)` against every `y ∉ A`; smaller
/// `A` follow since a separator for a superset also works for a subset.
pub fn verify_separating(f: &SeparatingFamily) -> Separation {
    let n = f.ground;
    if n == 0 {
        return Separation::Ok;
    }
    let size = f.c.min(n - 1);
    let cols = f.columns();
    if binomial(n, size) <= SEPARATING_ENUM_CAP {
        enumerate(f, &cols, size)
    } else {
        match first_cover(&cols, size, &mut u64::MAX.clone()).expect("unbounded search decides") {
            None => Separation::Ok,
            Some((a, y)) => Separation::Fails { a, y },
        }
    }
}

fn enumerate(f: &SeparatingFamily, cols: &[BitSet], size: usize) -> Separation {
    let n = f.ground;
    let k = f.size();
    // zero[depth] = functions vanishing on the first `depth` chosen elements
    let mut zero = vec![BitSet::full(k); size + 1];
    let mut chosen = Vec::with_capacity(size);
    fn rec(
        start: usize,
        n: usize,
        size: usize,
        cols: &[BitSet],
        zero: &mut Vec<BitSet>,
        chosen: &mut Vec<usize>,
    ) -> Option<(Vec<usize>, usize)> {
        let depth = chosen.len();
        if depth == size {
            let z = &zero[depth];
            return (0..n)
                .find(|y| !chosen.contains(y) && !cols[*y].intersects(z))
                .map(|y| (chosen.clone(), y));
        }
        for x in start..n {
            let mut next = zero[depth].clone();
            next.difference_with(&cols[x]);
            zero[depth + 1] = next;
            chosen.push(x);
            let found = rec(x + 1, n, size, cols, zero, chosen);
            chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    match rec(0, n, size, cols, &mut zero, &mut chosen) {
        None => Separation::Ok,
        Some((a, y)) => Separation::Fails { a, y },
    }
}
