//! Named posets and seeded random instances.

mod interval;

pub use interval::{interval_realizer, interval_union_poset, CountOrder, IntervalBlock, IntervalKind};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::{set_label, Poset};

pub use crate::subsets::generate_subsets_poset;

/// Element counts above this are refused by the capped generators.
pub const DEFAULT_GENERATOR_CAP: usize = 4096;

pub fn chain(n: usize) -> Poset {
    Poset::from_fn(n, |i, j| i < j).expect("acyclic")
}

pub fn antichain(n: usize) -> Poset {
    Poset::antichain(n)
}

/// Poset on a list of distinct sets ordered by strict inclusion, labelled.
fn inclusion_poset(sets: &[Vec<usize>]) -> Poset {
    Poset::from_fn(sets.len(), |i, j| {
        sets[i].len() < sets[j].len() && sets[i].iter().all(|x| sets[j].contains(x))
    })
    .expect("inclusion is acyclic")
    .with_labels(sets.iter().map(|s| set_label(s.iter().copied())).collect())
    .expect("one label per set")
}

fn sort_sets(sets: &mut Vec<Vec<usize>>) {
    for s in sets.iter_mut() {
        s.sort_unstable();
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
}

/// All subsets of `0..a`.
pub fn boolean_lattice(a: usize) -> Result<Poset> {
    let count = 1usize.checked_shl(a as u32).filter(|_| a < usize::BITS as usize).unwrap_or(usize::MAX);
    if count > DEFAULT_GENERATOR_CAP {
        return Err(Error::CapExceeded {
            what: "boolean lattice",
            actual: count,
            cap: DEFAULT_GENERATOR_CAP,
        });
    }
    let mut sets: Vec<Vec<usize>> = (0..count).map(|m| (0..a).filter(|i| m >> i & 1 == 1).collect()).collect();
    sort_sets(&mut sets);
    Ok(inclusion_poset(&sets))
}

/// The 1- and (a-1)-subsets of `0..a` under inclusion.
pub fn standard_example(a: usize) -> Result<Poset> {
    if 2 * a > DEFAULT_GENERATOR_CAP {
        return Err(Error::CapExceeded {
            what: "standard example",
            actual: 2 * a,
            cap: DEFAULT_GENERATOR_CAP,
        });
    }
    let mut sets: Vec<Vec<usize>> = (0..a).map(|i| vec![i]).collect();
    sets.extend((0..a).map(|i| (0..a).filter(|&j| j != i).collect()));
    sort_sets(&mut sets);
    Ok(inclusion_poset(&sets))
}

/// Minimal elements `a_i`, maximal `b_j`, with `a_i < b_j` iff `i ≠ j`.
pub fn crown(n: usize) -> Result<Poset> {
    if 2 * n > DEFAULT_GENERATOR_CAP {
        return Err(Error::CapExceeded {
            what: "crown",
            actual: 2 * n,
            cap: DEFAULT_GENERATOR_CAP,
        });
    }
    Ok(Poset::from_fn(2 * n, |i, j| i < n && j >= n && j - n != i).expect("bipartite"))
}

/// Singletons `{α}` and the sets `[0,β) ∖ {α}` for `α < n`, `β ≤ n`,
/// without ∅, under inclusion.
pub fn higuchi_poset(n: usize) -> Result<Poset> {
    if n < 2 {
        return Err(Error::Domain(format!("higuchi_poset needs n >= 2, got {n}")));
    }
    if n * (n + 2) > DEFAULT_GENERATOR_CAP {
        return Err(Error::CapExceeded {
            what: "higuchi poset",
            actual: n * (n + 2),
            cap: DEFAULT_GENERATOR_CAP,
        });
    }
    let mut sets: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
    for a in 0..n {
        for b in 0..=n {
            sets.push((0..b).filter(|&g| g != a).collect());
        }
    }
    sets.retain(|s| !s.is_empty());
    sort_sets(&mut sets);
    Ok(inclusion_poset(&sets))
}

/// Edges `i < j` are drawn with probability `density`, in order of `j`
/// then `i`, and skipped when the cone of `j` would outgrow
/// `predecessor_cap` elements.
pub fn random_poset(n: usize, density: f64, predecessor_cap: Option<usize>, seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = predecessor_cap.unwrap_or(usize::MAX);
    // cones[j] = {i : i ⪯ j}
    let mut cones: Vec<BitSet> = (0..n).map(|j| BitSet::from_iter_with_len(n, [j])).collect();
    for j in 0..n {
        for i in 0..j {
            let draw: f64 = rng.gen();
            if draw >= density || cones[j].contains(i) {
                continue;
            }
            let mut grown = cones[j].clone();
            grown.union_with(&cones[i]);
            if grown.count() <= cap {
                cones[j] = grown;
            }
        }
    }
    Poset::from_fn(n, |a, b| a != b && cones[b].contains(a)).expect("edges go upward in id")
}
