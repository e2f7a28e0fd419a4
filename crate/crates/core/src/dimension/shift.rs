//! Triple colourings extracted from candidate realizers of the order of
//! subsets of size at most two, and the monochromatic-shift refuter.
//!
//! For `α < β < γ` the colour is the least index `ι` whose linear order puts
//! `{α,γ}` below `{β}`. A quadruple `α < β < γ < δ` with
//! `c(α,β,γ) = c(β,γ,δ) = ι` closes the cycle
//! `{γ} < {α,γ} < {β} < {β,δ} < {γ}` in order `ι`, so no family producing it
//! can consist of linear extensions of inclusion.

use std::fmt;

use crate::error::{Error, Result};
use crate::extension::Realizer;
use crate::poset::{parse_set_label, Poset};

use super::verify_realizer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftColoring {
    ground: usize,
    colors: usize,
    table: Vec<Option<usize>>,
}

impl ShiftColoring {
    /// Builds a colouring from `color(α, β, γ)` for every `α < β < γ < ground`.
    pub fn from_fn(
        ground: usize,
        colors: usize,
        mut color: impl FnMut(usize, usize, usize) -> Option<usize>,
    ) -> Self {
        let mut table = vec![None; ground * ground * ground];
        for a in 0..ground {
            for b in a + 1..ground {
                for c in b + 1..ground {
                    table[(a * ground + b) * ground + c] = color(a, b, c).filter(|&i| i < colors);
                }
            }
        }
        ShiftColoring { ground, colors, table }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    /// Colour of the triple `a < b < c`.
    pub fn color(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        assert!(a < b && b < c && c < self.ground, "triple must be increasing and in range");
        self.table[(a * self.ground + b) * self.ground + c]
    }

    pub fn is_total(&self) -> bool {
        (0..self.ground).all(|a| {
            (a + 1..self.ground).all(|b| (b + 1..self.ground).all(|c| self.color(a, b, c).is_some()))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftWitness {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub color: usize,
}

impl fmt::Display for ShiftWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "shiftwitness {} {} {} {} {}",
            self.alpha, self.beta, self.gamma, self.delta, self.color
        )
    }
}

impl ShiftWitness {
    pub fn parse(text: &str) -> Result<Self> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 6 || toks[0] != "shiftwitness" {
            return Err(Error::parse(1, "expected `shiftwitness <α> <β> <γ> <δ> <ι>`"));
        }
        let v = toks[1..]
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(1, format!("bad id `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(ShiftWitness {
            alpha: v[0],
            beta: v[1],
            gamma: v[2],
            delta: v[3],
            color: v[4],
        })
    }

    /// Checks the two pattern conditions directly in the candidate family.
    pub fn holds_in(&self, p: &Poset, r: &Realizer) -> Result<bool> {
        let index = SubsetIndex::new(p)?;
        let Some(e) = r.extensions().get(self.color) else {
            return Ok(false);
        };
        if !(self.alpha < self.beta && self.beta < self.gamma && self.gamma < self.delta && self.delta < index.ground) {
            return Ok(false);
        }
        Ok(e.precedes(index.pair(self.alpha, self.gamma), index.single(self.beta))
            && e.precedes(index.pair(self.beta, self.delta), index.single(self.gamma)))
    }
}

/// Locates `{α}` and `{α,β}` among the labels of a subsets poset.
struct SubsetIndex {
    ground: usize,
    singles: Vec<usize>,
    pairs: Vec<usize>,
}

impl SubsetIndex {
    fn new(p: &Poset) -> Result<Self> {
        let labels = p
            .labels()
            .ok_or_else(|| Error::TypeMismatch("poset has no subset labels".into()))?;
        let sets = labels
            .iter()
            .map(|l| parse_set_label(l))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::TypeMismatch("labels are not finite sets".into()))?;
        let ground = sets.iter().filter(|s| s.len() == 1).count();
        let mut singles = vec![usize::MAX; ground];
        let mut pairs = vec![usize::MAX; ground * ground];
        for (id, s) in sets.iter().enumerate() {
            if s.iter().any(|&x| x >= ground) {
                return Err(Error::TypeMismatch(format!("label {{..}} of element {id} leaves the ground set")));
            }
            match s.as_slice() {
                [a] => singles[*a] = id,
                [a, b] => pairs[a * ground + b] = id,
                _ => {}
            }
        }
        if singles.contains(&usize::MAX)
            || (0..ground).any(|a| (a + 1..ground).any(|b| pairs[a * ground + b] == usize::MAX))
        {
            return Err(Error::TypeMismatch("poset lacks some singletons or pairs".into()));
        }
        Ok(SubsetIndex { ground, singles, pairs })
    }

    fn single(&self, a: usize) -> usize {
        self.singles[a]
    }

    fn pair(&self, a: usize, b: usize) -> usize {
        self.pairs[a.min(b) * self.ground + a.max(b)]
    }
}

/// Colouring from a verified realizer; total by construction.
pub fn shift_coloring(p: &Poset, r: &Realizer) -> Result<ShiftColoring> {
    let verdict = verify_realizer(p, r)?;
    if !verdict.is_ok() {
        return Err(Error::InvalidRealizer(verdict.to_string()));
    }
    shift_coloring_unchecked(p, r)
}

/// Colouring from an arbitrary family of orders; triples no order colours
/// are left undefined.
pub fn shift_coloring_unchecked(p: &Poset, r: &Realizer) -> Result<ShiftColoring> {
    if r.ground_len() != p.len() {
        return Err(Error::SizeMismatch {
            expected: p.len(),
            found: r.ground_len(),
        });
    }
    let index = SubsetIndex::new(p)?;
    Ok(ShiftColoring::from_fn(index.ground, r.size(), |a, b, c| {
        r.extensions()
            .iter()
            .position(|e| e.precedes(index.pair(a, c), index.single(b)))
    }))
}

/// First `α < β < γ < δ` (lexicographically) with `c(α,β,γ) = c(β,γ,δ)`.
pub fn find_monochromatic_shift(c: &ShiftColoring) -> Option<ShiftWitness> {
    let n = c.ground();
    for alpha in 0..n {
        for beta in alpha + 1..n {
            for gamma in beta + 1..n {
                let Some(color) = c.color(alpha, beta, gamma) else {
                    continue;
                };
                for delta in gamma + 1..n {
                    if c.color(beta, gamma, delta) == Some(color) {
                        return Some(ShiftWitness {
                            alpha,
                            beta,
                            gamma,
                            delta,
                            color,
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::LinearExtension;
    use crate::poset::set_label;

    /// ∅, singletons, pairs of `0..n` with labels.
    fn subsets2(n: usize) -> Poset {
        let mut sets: Vec<Vec<usize>> = vec![vec![]];
        sets.extend((0..n).map(|a| vec![a]));
        for a in 0..n {
            for b in a + 1..n {
                sets.push(vec![a, b]);
            }
        }
        Poset::from_fn(sets.len(), |i, j| i != j && sets[i].iter().all(|x| sets[j].contains(x)))
            .unwrap()
            .with_labels(sets.iter().map(|s| set_label(s.iter().copied())).collect())
            .unwrap()
    }

    #[test]
    fn three_points_give_one_defined_triple() {
        let p = subsets2(3);
        let r = crate::dimension::dimension_search(&p, 3).unwrap();
        let c = shift_coloring(&p, &r).unwrap();
        assert!(c.color(0, 1, 2).is_some());
        assert!(c.is_total());
        assert_eq!(find_monochromatic_shift(&c), None);
    }

    #[test]
    fn four_points_coloring_within_range() {
        let p = subsets2(4);
        let k = crate::dimension::exact_dimension(&p);
        let r = crate::dimension::dimension_search(&p, k).unwrap();
        let c = shift_coloring(&p, &r).unwrap();
        assert!(c.is_total());
        for (a, b, cc) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            assert!(c.color(a, b, cc).unwrap() < k);
        }
        assert_eq!(find_monochromatic_shift(&c), None);
    }

    #[test]
    fn single_order_is_invalid() {
        let p = subsets2(3);
        let ext = crate::extension::topological_sort(&p);
        let r = Realizer::new(vec![ext]).unwrap();
        assert!(matches!(shift_coloring(&p, &r), Err(Error::InvalidRealizer(_))));
    }

    #[test]
    fn planted_constant_coloring_has_shift() {
        let c = ShiftColoring::from_fn(4, 1, |_, _, _| Some(0));
        let w = find_monochromatic_shift(&c).unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.delta, w.color), (0, 1, 2, 3, 0));
        assert_eq!(w.to_string(), "shiftwitness 0 1 2 3 0");
        assert_eq!(ShiftWitness::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn no_quadruple_on_three_points() {
        let c = ShiftColoring::from_fn(3, 1, |_, _, _| Some(0));
        assert_eq!(find_monochromatic_shift(&c), None);
    }

    #[test]
    fn witness_refutes_a_non_extension_family() {
        // one order on subsets of {0,1,2,3} placing every pair below every singleton
        let p = subsets2(4);
        let labels = p.labels().unwrap();
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&i| match parse_set_label(&labels[i]).unwrap().len() {
            0 => 0,
            2 => 1,
            _ => 2,
        });
        let r = Realizer::new(vec![LinearExtension::new(order).unwrap()]).unwrap();
        let c = shift_coloring_unchecked(&p, &r).unwrap();
        let w = find_monochromatic_shift(&c).unwrap();
        assert!(w.holds_in(&p, &r).unwrap());
        assert!(!crate::dimension::verify_realizer(&p, &r).unwrap().is_ok());
    }
}
