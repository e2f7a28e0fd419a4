//! Chain covers and down-set lattices.

use std::collections::{HashSet, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::{set_label, Poset};

/// Default cap on the number of down-sets materialized.
pub const DEFAULT_DOWNSET_CAP: usize = 4096;

/// Least number of chains whose union is the poset.
///
/// Dilworth: `n` minus a maximum matching in the bipartite graph with an
/// edge `i -> j` for every `i < j`.
pub fn chain_cover_number(p: &Poset) -> usize {
    p.len() - max_comparability_matching(p)
}

/// Hopcroft–Karp on the split graph (left copy `i`, right copy `j`, edge iff `i < j`).
fn max_comparability_matching(p: &Poset) -> usize {
    const NIL: usize = usize::MAX;
    let n = p.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| p.up(i).iter().collect()).collect();
    let mut match_left = vec![NIL; n];
    let mut match_right = vec![NIL; n];
    let mut dist = vec![0usize; n];
    let mut matched = 0;

    loop {
        // BFS layering from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..n {
            if match_left[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found_free = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_right[v];
                if w == NIL {
                    found_free = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found_free {
            break;
        }
        for u in 0..n {
            if match_left[u] == NIL && augment(u, &adj, &mut match_left, &mut match_right, &mut dist) {
                matched += 1;
            }
        }
    }
    matched
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let w = match_right[v];
        let ok = w == usize::MAX
            || (dist[w] == dist[u] + 1 && augment(w, adj, match_left, match_right, dist));
        if ok {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// All down-closed subsets, sorted by size and then lexicographically.
pub fn downsets(p: &Poset, cap: usize) -> Result<Vec<BitSet>> {
    let n = p.len();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut frontier = vec![BitSet::new(n)];
    seen.insert(BitSet::new(n));
    while let Some(d) = frontier.pop() {
        for x in 0..n {
            if !d.contains(x) && p.down(x).is_subset(&d) {
                let mut next = d.clone();
                next.insert(x);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "down-set count",
                            actual: seen.len(),
                            cap,
                        });
                    }
                    frontier.push(next);
                }
            }
        }
    }
    let mut all: Vec<(usize, Vec<usize>, BitSet)> = seen
        .into_iter()
        .map(|s| (s.count(), s.iter().collect(), s))
        .collect();
    all.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(all.into_iter().map(|(_, _, s)| s).collect())
}

/// The down-sets of `p` ordered by strict inclusion, labelled by their members.
pub fn downset_lattice(p: &Poset) -> Result<Poset> {
    downset_lattice_capped(p, DEFAULT_DOWNSET_CAP)
}

pub fn downset_lattice_capped(p: &Poset, cap: usize) -> Result<Poset> {
    let sets = downsets(p, cap)?;
    let lattice = Poset::from_fn(sets.len(), |a, b| a != b && sets[a].is_subset(&sets[b]))?;
    lattice.with_labels(sets.iter().map(|s| set_label(s.iter())).collect())
}
