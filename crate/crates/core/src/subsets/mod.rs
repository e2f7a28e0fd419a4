//! Realizers of the inclusion order on subsets of size at most `k` built
//! from binary codes and k-independent families.
//!
//! Every ground element `α` gets a distinct code `f_α` of length `λ`, and a
//! k-independent family `X_0..X_{λ-1}` over `0..t` yields one function
//! `g_ι` per point `ι`. Order `ι` puts `u` below `v` when `u ⊊ v` or some
//! `α ∈ v∖u` has `f_α` agreeing with `g_ι` at every `Δ(f_β, f_α)`, `β ∈ u`.

mod codes;
mod independent;

pub use codes::{ceil_log2, delta, exp_iter, min_theta, BinaryCodeBook, Code};
pub use independent::{build_k_independent, build_k_independent_limited, IndependentFamily, IotaFunction};

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::extension::{topological_sort_by_key, LinearExtension, Realizer};
use crate::poset::{parse_set_label, set_label, Poset};

pub const DEFAULT_SUBSETS_CAP: usize = 4096;
/// Largest ground `t` tried by [`construct_subset_realizer`].
pub const MAX_FAMILY_GROUND: usize = 64;
const FAMILY_SEARCH_NODES: u64 = 2_000_000;

/// Subsets of `0..n` with at most `k` elements, by size then lexicographically.
pub fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k.min(n) {
        let mut next = Vec::new();
        for s in &layer {
            let start = s.last().map_or(0, |&x| x + 1);
            for x in start..n {
                let mut t = s.clone();
                t.push(x);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn subsets_count(n: usize, k: usize) -> Option<usize> {
    let mut total: usize = 1;
    let mut binom: usize = 1;
    for i in 1..=k.min(n) {
        binom = binom.checked_mul(n - i + 1)? / i;
        total = total.checked_add(binom)?;
    }
    Some(total)
}

fn is_proper_subset(u: &[usize], v: &[usize]) -> bool {
    u.len() < v.len() && u.iter().all(|x| v.binary_search(x).is_ok())
}

pub fn generate_subsets_poset(n: usize, k: usize) -> Result<Poset> {
    generate_subsets_poset_capped(n, k, DEFAULT_SUBSETS_CAP)
}

pub fn generate_subsets_poset_capped(n: usize, k: usize, cap: usize) -> Result<Poset> {
    let count = subsets_count(n, k).unwrap_or(usize::MAX);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "subsets",
            actual: count,
            cap,
        });
    }
    let sets = subsets_up_to(n, k);
    Poset::from_fn(sets.len(), |i, j| is_proper_subset(&sets[i], &sets[j]))?
        .with_labels(sets.iter().map(|s| set_label(s.iter().copied())).collect())
}

/// Recovers `(n, k)` when `p` is exactly `generate_subsets_poset(n, k)`.
pub fn subsets_parameters(p: &Poset) -> Option<(usize, usize)> {
    let sets = p
        .labels()?
        .iter()
        .map(|l| parse_set_label(l))
        .collect::<Option<Vec<_>>>()?;
    let n = sets.iter().filter(|s| s.len() == 1).count();
    let k = sets.iter().map(Vec::len).max()?;
    if sets != subsets_up_to(n, k) {
        return None;
    }
    let expected = generate_subsets_poset_capped(n, k, usize::MAX).ok()?;
    (0..p.len())
        .all(|i| p.up(i) == expected.up(i))
        .then_some((n, k))
}

/// The relation `u ≺_ι v` for the function `g`.
pub fn subset_prec(u: &[usize], v: &[usize], book: &BinaryCodeBook, g: &IotaFunction) -> bool {
    if is_proper_subset(u, v) {
        return true;
    }
    v.iter().filter(|a| !u.contains(a)).any(|&alpha| {
        u.iter().all(|&beta| {
            let xi = book.delta(beta, alpha);
            book.code(alpha).bit(xi) == g.value(xi)
        })
    })
}

/// For `v ⊄ u`, the least `ι` in the cell selected by the first `α ∈ v∖u`.
pub fn completing_iota(
    u: &[usize],
    v: &[usize],
    book: &BinaryCodeBook,
    family: &IndependentFamily,
) -> Option<usize> {
    let &alpha = v.iter().find(|a| !u.contains(a))?;
    let mut f: Vec<usize> = u.iter().map(|&beta| book.delta(beta, alpha)).collect();
    f.sort_unstable();
    f.dedup();
    let sigma: Vec<bool> = f.iter().map(|&xi| book.code(alpha).bit(xi)).collect();
    family.cell(&f, &sigma).first()
}

#[derive(Clone, Debug)]
pub struct SubsetRealization {
    pub poset: Poset,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
    pub codebook: BinaryCodeBook,
    pub family: IndependentFamily,
    pub iotas: Vec<IotaFunction>,
    pub realizer: Realizer,
}

impl SubsetRealization {
    pub fn size(&self) -> usize {
        self.realizer.size()
    }

    /// Audit record, one item per line.
    pub fn provenance(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "strategy subset-code");
        let _ = writeln!(out, "n {}", self.codebook.len());
        let _ = writeln!(out, "k {}", self.k);
        let _ = writeln!(out, "lambda {}", self.codebook.lambda());
        let _ = writeln!(out, "t {}", self.family.ground_size());
        for (alpha, c) in self.codebook.codes().iter().enumerate() {
            let _ = writeln!(out, "code {alpha} {c}");
        }
        for (xi, x) in self.family.sets().iter().enumerate() {
            let _ = writeln!(out, "set {xi} {}", set_label(x.iter()));
        }
        for g in &self.iotas {
            let bits: String = g.values.iter().map(|&b| if b { '1' } else { '0' }).collect();
            let _ = writeln!(out, "g {} {bits}", g.iota);
        }
        out
    }
}

/// Realizer of `generate_subsets_poset(n, k)` with one order per point of
/// the smallest ground carrying a k-independent family of `λ` sets.
pub fn construct_subset_realizer(n: usize, k: usize) -> Result<SubsetRealization> {
    if k == 0 {
        return Err(Error::Domain("subset realizers need k >= 1".into()));
    }
    let poset = generate_subsets_poset(n, k)?;
    let sets = subsets_up_to(n, k);
    let codebook = BinaryCodeBook::lexicographic(n);
    let lambda = codebook.lambda();
    let family = (1..=MAX_FAMILY_GROUND)
        .find_map(|t| build_k_independent_limited(t, lambda, k, FAMILY_SEARCH_NODES))
        .ok_or_else(|| {
            Error::ConstructionFailed(format!(
                "no {k}-independent family of {lambda} sets on at most {MAX_FAMILY_GROUND} points"
            ))
        })?;
    let iotas = family.iota_functions();
    let extensions = iotas
        .iter()
        .map(|g| {
            let succ: Vec<BitSet> = sets
                .iter()
                .map(|u| {
                    BitSet::from_iter_with_len(
                        sets.len(),
                        sets.iter()
                            .enumerate()
                            .filter(|(_, v)| subset_prec(u, v, &codebook, g))
                            .map(|(j, _)| j),
                    )
                })
                .collect();
            let order = topological_sort_by_key(sets.len(), &succ, |i| sets[i].clone()).ok_or_else(|| {
                Error::ConstructionFailed(format!("order {} is cyclic (n={n}, k={k}, lambda={lambda})", g.iota))
            })?;
            LinearExtension::new(order)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubsetRealization {
        poset,
        sets,
        k,
        codebook,
        family,
        iotas,
        realizer: Realizer::new(extensions)?,
    })
}

/// Sends each element to the ids of its down-set.
pub fn embed_into_subsets(p: &Poset) -> Vec<Vec<usize>> {
    (0..p.len()).map(|a| p.cone(a).iter().collect()).collect()
}
