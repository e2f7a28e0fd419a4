//! k-independent families: every pattern of membership/non-membership in at
//! most `k` of the sets is realized by some ground point.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentFamily {
    ground_size: usize,
    sets: Vec<BitSet>,
    k: usize,
}

/// `g_ι(ξ) = 0` iff `ι ∈ X_ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaFunction {
    pub iota: usize,
    pub values: Vec<bool>,
}

impl IotaFunction {
    pub fn value(&self, xi: usize) -> bool {
        self.values[xi]
    }
}

impl IndependentFamily {
    /// Verifies k-independence exhaustively before accepting the sets.
    pub fn new(ground_size: usize, sets: Vec<BitSet>, k: usize) -> Result<Self> {
        if let Some(s) = sets.iter().find(|s| s.capacity() != ground_size) {
            return Err(Error::SizeMismatch {
                expected: ground_size,
                found: s.capacity(),
            });
        }
        let family = IndependentFamily { ground_size, sets, k };
        if let Some((f, sigma)) = family.first_empty_cell() {
            return Err(Error::Domain(format!(
                "family is not {k}-independent: empty cell F={f:?} sigma={sigma:?}"
            )));
        }
        Ok(family)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `⋂_{ξ∈F} X_ξ^{σ(ξ)}` with `X^0 = X` and `X^1` the complement.
    pub fn cell(&self, f: &[usize], sigma: &[bool]) -> BitSet {
        let mut out = BitSet::full(self.ground_size);
        for (&xi, &s) in f.iter().zip(sigma) {
            if s {
                out.difference_with(&self.sets[xi]);
            } else {
                out.intersect_with(&self.sets[xi]);
            }
        }
        out
    }

    /// Some `(F, σ)` with `|F| ≤ k` whose cell is empty, if any.
    pub fn first_empty_cell(&self) -> Option<(Vec<usize>, Vec<bool>)> {
        let lambda = self.sets.len();
        let max = self.k.min(lambda);
        let mut found = None;
        for_each_subset_up_to(lambda, max, |f| {
            if found.is_some() || f.is_empty() {
                return;
            }
            // collect the patterns the ground points realize on F
            let mut seen = vec![false; 1 << f.len()];
            for point in 0..self.ground_size {
                let pat = f
                    .iter()
                    .enumerate()
                    .fold(0usize, |m, (b, &xi)| m | (usize::from(!self.sets[xi].contains(point)) << b));
                seen[pat] = true;
            }
            if let Some(missing) = seen.iter().position(|&s| !s) {
                let sigma = (0..f.len()).map(|b| missing >> b & 1 == 1).collect();
                found = Some((f.to_vec(), sigma));
            }
        });
        found
    }

    pub fn is_independent(&self) -> bool {
        self.first_empty_cell().is_none()
    }

    pub fn iota_functions(&self) -> Vec<IotaFunction> {
        (0..self.ground_size)
            .map(|iota| IotaFunction {
                iota,
                values: self.sets.iter().map(|x| !x.contains(iota)).collect(),
            })
            .collect()
    }
}

/// Calls `visit` on every subset of `0..n` of size at most `max`, as sorted slices.
pub(crate) fn for_each_subset_up_to(n: usize, max: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, max: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        visit(cur);
        if cur.len() == max {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, max, cur, visit);
            cur.pop();
        }
    }
    rec(0, n, max, &mut Vec::new(), &mut visit);
}

// exhaustive column search is only attempted on small grounds
const MAX_SEARCH_GROUND: usize = 20;

/// A k-independent family of `lambda` subsets of `0..t`, or `None` when
/// none exists (or `t` is too large for exhaustive search).
///
/// When `t ≥ 2^lambda` the coordinate family is returned directly: point
/// `ι` lies in `X_ξ` iff bit `ξ` (most significant first) of `ι mod 2^λ`
/// is 0. Otherwise the columns are searched exhaustively in increasing
/// bitmask order.
pub fn build_k_independent(t: usize, lambda: usize, k: usize) -> Option<IndependentFamily> {
    build_k_independent_limited(t, lambda, k, u64::MAX)
}

/// As [`build_k_independent`], but gives up (returning `None`) once the
/// column search has tried `max_nodes` candidates.
pub fn build_k_independent_limited(
    t: usize,
    lambda: usize,
    k: usize,
    max_nodes: u64,
) -> Option<IndependentFamily> {
    if k == 0 || lambda == 0 {
        return IndependentFamily::new(t, vec![BitSet::new(t); lambda], k).ok();
    }
    if lambda < 24 && t >= 1 << lambda {
        let sets = (0..lambda)
            .map(|xi| {
                BitSet::from_iter_with_len(
                    t,
                    (0..t).filter(|&iota| ((iota % (1 << lambda)) >> (lambda - 1 - xi)) & 1 == 0),
                )
            })
            .collect();
        return IndependentFamily::new(t, sets, k).ok();
    }
    if t > MAX_SEARCH_GROUND || t == 0 {
        return None;
    }
    let eff_k = k.min(lambda);
    let mut columns: Vec<u64> = Vec::with_capacity(lambda);
    let mut nodes = max_nodes;
    if search_columns(t, lambda, eff_k, &mut columns, &mut nodes) {
        let sets = columns
            .iter()
            .map(|&c| BitSet::from_iter_with_len(t, (0..t).filter(|&i| c >> i & 1 == 1)))
            .collect();
        IndependentFamily::new(t, sets, k).ok()
    } else {
        None
    }
}

fn search_columns(t: usize, lambda: usize, k: usize, columns: &mut Vec<u64>, nodes: &mut u64) -> bool {
    if columns.len() == lambda {
        return true;
    }
    let full: u64 = (1u64 << t) - 1;
    // with k = 1 a set may repeat; otherwise repeated columns are dependent
    let start = columns.last().map_or(1, |&c| if k == 1 { c } else { c + 1 });
    for cand in start..full {
        if *nodes == 0 {
            return false;
        }
        *nodes -= 1;
        if compatible(t, k, columns, cand) {
            columns.push(cand);
            if search_columns(t, lambda, k, columns, nodes) {
                return true;
            }
            columns.pop();
        }
    }
    false
}

/// Every `F` containing the new column with `|F| ≤ k` realizes all patterns.
fn compatible(t: usize, k: usize, columns: &[u64], cand: u64) -> bool {
    let mut ok = true;
    for_each_subset_up_to(columns.len(), k - 1, |f| {
        if !ok {
            return;
        }
        let width = f.len() + 1;
        let mut seen = 0u64;
        for point in 0..t {
            let mut pat = (cand >> point & 1) as usize;
            for (b, &c) in f.iter().enumerate() {
                pat |= ((columns[c] >> point & 1) as usize) << (b + 1);
            }
            seen |= 1 << pat;
        }
        if seen.count_ones() as usize != 1 << width {
            ok = false;
        }
    });
    ok
}
