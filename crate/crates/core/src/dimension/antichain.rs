//! Strongly independent antichains and the dimension lower bound they give.
//!
//! `S` is strongly independent when for every `T ⊊ S` and `x ∈ S \ T` some
//! upper bound `y` of `T` satisfies `x ⋠ y`. Such an `S` forces dimension at
//! least `|S|`.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::{parse_set_label, set_label, Poset};

use super::Budget;

pub const DEFAULT_SI_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub subset: Vec<usize>,
    pub excluded: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyIndependentAntichain {
    elements: Vec<usize>,
    witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceCheck {
    Independent(StronglyIndependentAntichain),
    NotAntichain(usize, usize),
    NoWitness { subset: Vec<usize>, excluded: usize },
}

impl IndependenceCheck {
    pub fn is_independent(&self) -> bool {
        matches!(self, IndependenceCheck::Independent(_))
    }
}

/// Common upper bounds of `t` (inclusive), i.e. `{y : ∀ s ∈ t, s ⪯ y}`.
fn upper_bounds(p: &Poset, t: impl IntoIterator<Item = usize>) -> BitSet {
    let mut ub = BitSet::full(p.len());
    for s in t {
        ub.intersect_with(&p.upper_cone(s));
    }
    ub
}

fn witness_for(p: &Poset, t: &[usize], x: usize) -> Option<usize> {
    let mut ub = upper_bounds(p, t.iter().copied());
    ub.difference_with(&p.upper_cone(x));
    ub.first()
}

pub fn is_strongly_independent(p: &Poset, s: &[usize]) -> Result<IndependenceCheck> {
    if s.len() > DEFAULT_SI_CAP {
        return Err(Error::CapExceeded {
            what: "strong-independence set size",
            actual: s.len(),
            cap: DEFAULT_SI_CAP,
        });
    }
    for &index in s {
        if index >= p.len() {
            return Err(Error::Bounds { index, n: p.len() });
        }
    }
    let mut elements = s.to_vec();
    elements.sort_unstable();
    for (a, &x) in elements.iter().enumerate() {
        for &y in &elements[a + 1..] {
            if x == y || p.comparable(x, y) {
                return Ok(IndependenceCheck::NotAntichain(x, y));
            }
        }
    }
    let m = elements.len();
    let mut witnesses = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize == m {
            continue;
        }
        let subset: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| elements[i]).collect();
        for (i, &excluded) in elements.iter().enumerate() {
            if mask >> i & 1 == 1 {
                continue;
            }
            match witness_for(p, &subset, excluded) {
                Some(bound) => witnesses.push(Witness {
                    subset: subset.clone(),
                    excluded,
                    bound,
                }),
                None => return Ok(IndependenceCheck::NoWitness { subset, excluded }),
            }
        }
    }
    Ok(IndependenceCheck::Independent(StronglyIndependentAntichain {
        elements,
        witnesses,
    }))
}

impl StronglyIndependentAntichain {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// `siantichain <m>` followed by one `T={ids} x=<id> y=<id>` line per
    /// `(T, x)`.
    pub fn to_text(&self) -> String {
        let mut out = format!("siantichain {}\n", self.elements.len());
        for w in &self.witnesses {
            writeln!(out, "T={} x={} y={}", set_label(w.subset.iter().copied()), w.excluded, w.bound).unwrap();
        }
        out
    }

    /// Parses a certificate; the element set is recovered from the lines.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, head) = lines.next().ok_or_else(|| Error::parse(0, "empty certificate"))?;
        let m: usize = head
            .strip_prefix("siantichain ")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| Error::parse(line_no, "expected `siantichain <m>`"))?;
        let mut witnesses = Vec::new();
        let mut elements = Vec::new();
        for (line_no, l) in lines {
            let mut parts = l.split_whitespace();
            let field = |part: Option<&str>, key: &str| -> Result<String> {
                part.and_then(|s| s.strip_prefix(key))
                    .map(str::to_string)
                    .ok_or_else(|| Error::parse(line_no, format!("expected `{key}...`")))
            };
            let subset = parse_set_label(&field(parts.next(), "T=")?)
                .ok_or_else(|| Error::parse(line_no, "bad subset"))?;
            let excluded: usize = field(parts.next(), "x=")?
                .parse()
                .map_err(|_| Error::parse(line_no, "bad x"))?;
            let bound: usize = field(parts.next(), "y=")?
                .parse()
                .map_err(|_| Error::parse(line_no, "bad y"))?;
            elements.extend(subset.iter().copied());
            elements.push(excluded);
            witnesses.push(Witness {
                subset,
                excluded,
                bound,
            });
        }
        elements.sort_unstable();
        elements.dedup();
        if elements.len() != m && !(m <= 1 && witnesses.is_empty()) {
            return Err(Error::SizeMismatch {
                expected: m,
                found: elements.len(),
            });
        }
        Ok(StronglyIndependentAntichain { elements, witnesses })
    }

    /// Re-checks every witness against `p` and that all `(T, x)` are covered.
    pub fn verify(&self, p: &Poset) -> bool {
        let m = self.elements.len();
        if m > DEFAULT_SI_CAP || self.elements.iter().any(|&e| e >= p.len()) || !p.is_antichain(&self.elements) {
            return false;
        }
        for w in &self.witnesses {
            if w.bound >= p.len()
                || !w.subset.iter().all(|&t| p.le(t, w.bound))
                || p.le(w.excluded, w.bound)
            {
                return false;
            }
        }
        let expected: usize = m * (1usize << m.saturating_sub(1)); // Σ_T |S \ T| over T ⊊ S
        let mut seen: Vec<(Vec<usize>, usize)> = self
            .witnesses
            .iter()
            .map(|w| (w.subset.clone(), w.excluded))
            .filter(|(t, x)| !t.contains(x) && t.iter().all(|e| self.elements.contains(e)) && self.elements.contains(x))
            .collect();
        seen.sort();
        seen.dedup();
        seen.len() == expected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: usize,
    /// The strongly independent antichain behind `value` (size ≥ 2), or empty.
    pub antichain: Vec<usize>,
    pub timed_out: bool,
}

/// Largest strongly independent antichain of size at most `max_size`
/// found by backtracking; 1 if none of size ≥ 2 exists.
pub fn antichain_lower_bound(p: &Poset, max_size: usize, budget: &Budget) -> LowerBound {
    let mut meter = budget.meter();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let candidates: Vec<usize> = (0..p.len()).collect();
    extend(p, max_size.min(DEFAULT_SI_CAP), &candidates, &mut current, &mut best, &mut meter);
    let found = best.len() >= 2;
    LowerBound {
        value: if found { best.len() } else { 1 },
        antichain: if found { best } else { Vec::new() },
        timed_out: meter.exhausted(),
    }
}

fn extend(
    p: &Poset,
    max_size: usize,
    candidates: &[usize],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    meter: &mut super::Meter,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if best.len() >= max_size || current.len() + candidates.len() <= best.len() {
        return;
    }
    for (i, &c) in candidates.iter().enumerate() {
        if meter.tick() {
            return;
        }
        if current.len() + (candidates.len() - i) <= best.len() {
            return;
        }
        current.push(c);
        if maximal_subsets_witnessed(p, current) {
            let rest: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&d| !p.comparable(c, d))
                .collect();
            extend(p, max_size, &rest, current, best, meter);
        }
        current.pop();
        if best.len() >= max_size {
            return;
        }
    }
}

/// Strong independence reduces to the maximal `T = S \ {x}`: any witness
/// for a set also serves its subsets.
fn maximal_subsets_witnessed(p: &Poset, s: &[usize]) -> bool {
    (0..s.len()).all(|skip| {
        let t: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &e)| e).collect();
        witness_for(p, &t, s[skip]).is_some()
    })
}
