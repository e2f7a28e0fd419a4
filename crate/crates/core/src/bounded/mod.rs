//! Realizers for posets whose down-sets are small.
//!
//! A separating family for sets of size `c = predecessor_bound(P)` gives,
//! for `x ⋠ y`, some `f_α` vanishing on the cone of `y` with `f_α(x) = 1`.
//! Each `f_α` is turned into a linear extension that puts everything above
//! a 1-point after everything that is not.

mod cover;
mod cover_free;
mod separating;

pub use cover_free::{build_cover_free, verify_cover_free, CoverFreeFamily};
pub use separating::{
    separating_family, sh_separating_family, verify_separating, SHPair, SeparatingFamily, Separation,
    SEPARATING_ENUM_CAP,
};

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::extension::{topological_sort, topological_sort_by_key, LinearExtension, Realizer};
use crate::poset::{set_label, Poset};

/// `pos(x)`: some `u ⪯ x` has `f(u) = 1`.
pub fn flag_positive(p: &Poset, f: &BitSet) -> BitSet {
    let mut pos = BitSet::new(p.len());
    for u in f.iter() {
        pos.union_with(&p.upper_cone(u));
    }
    pos
}

/// All elements with `¬pos` first, then those with `pos`, each part in
/// smallest-id topological order.
pub fn linearize_from_flag(p: &Poset, f: &BitSet) -> LinearExtension {
    let pos = flag_positive(p, f);
    let succ: Vec<BitSet> = (0..p.len()).map(|i| p.up(i).clone()).collect();
    let order = topological_sort_by_key(p.len(), &succ, |i| (pos.contains(i), i)).expect("posets are acyclic");
    LinearExtension::new(order).expect("topological sort is a permutation")
}

#[derive(Clone, Debug)]
pub struct BoundedRealization {
    pub c: usize,
    pub seed: u64,
    pub cover_free: CoverFreeFamily,
    pub family: SeparatingFamily,
    pub realizer: Realizer,
}

impl BoundedRealization {
    pub fn size(&self) -> usize {
        self.realizer.size()
    }

    pub fn provenance(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "strategy bounded");
        let _ = writeln!(out, "seed {}", self.seed);
        let _ = writeln!(out, "c {}", self.c);
        let _ = writeln!(out, "m {}", self.cover_free.ground_size());
        for (xi, e) in self.cover_free.sets().iter().enumerate() {
            let _ = writeln!(out, "E {xi} {}", set_label(e.iter()));
        }
        for (alpha, f) in self.family.functions().iter().enumerate() {
            let bits: String = (0..self.family.ground())
                .map(|x| if f.contains(x) { '1' } else { '0' })
                .collect();
            let _ = writeln!(out, "f {alpha} {bits}");
        }
        out
    }
}

pub fn bounded_realizer(p: &Poset) -> Result<BoundedRealization> {
    bounded_realizer_with(p, None, 0)
}

/// `c` defaults to `predecessor_bound(P)`; larger values separate larger sets.
pub fn bounded_realizer_with(p: &Poset, c: Option<usize>, seed: u64) -> Result<BoundedRealization> {
    let c = c.unwrap_or_else(|| p.predecessor_bound()).max(1);
    let (family, cover_free) = separating_family(p, c, seed)?;
    let mut extensions: Vec<LinearExtension> = family.functions().iter().map(|f| linearize_from_flag(p, f)).collect();
    if extensions.is_empty() {
        extensions.push(topological_sort(p));
    }
    Ok(BoundedRealization {
        c,
        seed,
        cover_free,
        family,
        realizer: Realizer::new(extensions)?,
    })
}
