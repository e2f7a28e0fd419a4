//! Exact search for a small cover of one set by others.

use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum CoverSearch {
    /// Indices of at most `c` other sets whose union contains the target.
    Covered(Vec<usize>),
    Uncoverable,
    Undecided,
}

/// Is `sets[target]` contained in the union of at most `c` of the other sets?
/// `budget` bounds the number of search nodes across calls.
pub(crate) fn find_cover(sets: &[BitSet], target: usize, c: usize, budget: &mut u64) -> CoverSearch {
    let points: Vec<usize> = sets[target].iter().collect();
    if points.is_empty() {
        return CoverSearch::Covered(Vec::new());
    }
    // other sets restricted to the target's points
    let mut masks: Vec<(usize, BitSet)> = Vec::new();
    for (xi, s) in sets.iter().enumerate() {
        if xi == target {
            continue;
        }
        let m = BitSet::from_iter_with_len(points.len(), (0..points.len()).filter(|&i| s.contains(points[i])));
        if !m.is_empty() {
            masks.push((xi, m));
        }
    }
    let max_gain = masks.iter().map(|(_, m)| m.count()).max().unwrap_or(0);
    let mut chosen = Vec::new();
    let uncovered = BitSet::full(points.len());
    match dfs(&masks, max_gain, uncovered, c, &mut chosen, budget) {
        Some(true) => CoverSearch::Covered(chosen),
        Some(false) => CoverSearch::Uncoverable,
        None => CoverSearch::Undecided,
    }
}

fn dfs(
    masks: &[(usize, BitSet)],
    max_gain: usize,
    uncovered: BitSet,
    depth: usize,
    chosen: &mut Vec<usize>,
    budget: &mut u64,
) -> Option<bool> {
    if uncovered.is_empty() {
        return Some(true);
    }
    if depth == 0 || uncovered.count() > depth * max_gain {
        return Some(false);
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    // branch on the uncovered point lying in the fewest sets
    let point = uncovered
        .iter()
        .min_by_key(|&p| masks.iter().filter(|(_, m)| m.contains(p)).count())
        .expect("non-empty");
    let mut undecided = false;
    for (xi, m) in masks.iter().filter(|(_, m)| m.contains(point)) {
        let mut rest = uncovered.clone();
        rest.difference_with(m);
        chosen.push(*xi);
        match dfs(masks, max_gain, rest, depth - 1, chosen, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => undecided = true,
        }
        chosen.pop();
    }
    if undecided {
        None
    } else {
        Some(false)
    }
}

/// First `(B, ζ)` with `|B| ≤ c` and `sets[ζ] ⊆ ⋃ B`, or `Ok(None)`;
/// `Err(())` if the budget ran out first.
#[allow(clippy::result_unit_err)]
pub(crate) fn first_cover(sets: &[BitSet], c: usize, budget: &mut u64) -> Result<Option<(Vec<usize>, usize)>, ()> {
    let c = c.min(sets.len().saturating_sub(1));
    for zeta in 0..sets.len() {
        match find_cover(sets, zeta, c, budget) {
            CoverSearch::Covered(mut b) => {
                b.sort_unstable();
                return Ok(Some((b, zeta)));
            }
            CoverSearch::Uncoverable => {}
            CoverSearch::Undecided => return Err(()),
        }
    }
    Ok(None)
}
