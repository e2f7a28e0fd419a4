//! Order-preserving ranks into (block, rational position) pairs.
//!
//! Representatives are chosen in input order: each next representative is
//! the first element not below any earlier one. The not-yet-ranked part of
//! each representative's cone goes into the least block strictly above every
//! block already used inside that cone, after all positions present there.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::bitset::BitSet;
use crate::extension::topological_sort_by_key;
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rank {
    pub block: usize,
    pub position: Ratio<u64>,
}

impl Ord for Rank {
    fn cmp(&self, other: &Self) -> Ordering {
        self.block
            .cmp(&other.block)
            .then_with(|| self.position.cmp(&other.position))
    }
}

impl PartialOrd for Rank {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.block, self.position)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    ranks: Vec<Rank>,
    representatives: Vec<usize>,
}

impl RankFunction {
    pub fn rank(&self, x: usize) -> Rank {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    /// The cofinal representatives, in the order they were chosen.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn block_count(&self) -> usize {
        self.ranks.iter().map(|r| r.block + 1).max().unwrap_or(0)
    }

    /// Checks strict monotonicity on all comparable pairs and distinct
    /// positions within each block.
    pub fn is_valid_for(&self, p: &Poset) -> bool {
        if self.ranks.len() != p.len() {
            return false;
        }
        for (x, y) in p.relation_pairs() {
            if self.ranks[x] >= self.ranks[y] {
                return false;
            }
        }
        let mut sorted = self.ranks.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

pub fn rank_function(p: &Poset) -> RankFunction {
    let n = p.len();
    let mut representatives: Vec<usize> = Vec::new();
    let mut covered = BitSet::new(n);
    for y in 0..n {
        if !covered.contains(y) {
            representatives.push(y);
            covered.union_with(&p.cone(y));
        }
    }

    let mut ranks: Vec<Option<Rank>> = vec![None; n];
    // batches appended to each block so far; batch b occupies [b, b+1)
    let mut batches: Vec<u64> = Vec::new();
    for &rep in &representatives {
        let cone = p.cone(rep);
        let block = cone
            .iter()
            .filter_map(|z| ranks[z].map(|r| r.block + 1))
            .max()
            .unwrap_or(0);
        let fresh: Vec<usize> = cone.iter().filter(|&z| ranks[z].is_none()).collect();
        if fresh.is_empty() {
            continue;
        }
        if batches.len() <= block {
            batches.resize(block + 1, 0);
        }
        let batch = batches[block];
        batches[block] += 1;

        let index: Vec<usize> = {
            let mut v = vec![usize::MAX; n];
            for (k, &z) in fresh.iter().enumerate() {
                v[z] = k;
            }
            v
        };
        let succ: Vec<BitSet> = fresh
            .iter()
            .map(|&z| {
                BitSet::from_iter_with_len(
                    fresh.len(),
                    p.up(z).iter().filter(|&w| index[w] != usize::MAX).map(|w| index[w]),
                )
            })
            .collect();
        let order = topological_sort_by_key(fresh.len(), &succ, |k| fresh[k]).expect("acyclic");
        let denom = (fresh.len() as u64 + 1).next_power_of_two();
        for (slot, &k) in order.iter().enumerate() {
            let position = Ratio::from_integer(batch) + Ratio::new(slot as u64 + 1, denom);
            ranks[fresh[k]] = Some(Rank { block, position });
        }
    }

    RankFunction {
        ranks: ranks.into_iter().map(|r| r.expect("every element lies in some cone")).collect(),
        representatives,
    }
}
