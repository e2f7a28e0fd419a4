//! Brute-force dimension over the full set of linear extensions.
//!
//! Deliberately shares nothing with the critical-pair search: every
//! incomparable pair must be oriented both ways by the chosen extensions.

use crate::error::{Error, Result};
use crate::extension::linear_extensions_capped;
use crate::poset::Poset;

pub const DEFAULT_ORACLE_CAP: usize = 8;

// orientation masks are u128
const HARD_CAP: usize = 16;

pub fn dimension_oracle(p: &Poset) -> Result<usize> {
    dimension_oracle_capped(p, DEFAULT_ORACLE_CAP)
}

pub fn dimension_oracle_capped(p: &Poset, cap: usize) -> Result<usize> {
    let cap = cap.min(HARD_CAP);
    let n = p.len();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "oracle poset size",
            actual: n,
            cap,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !p.comparable(i, j))
        .collect();
    if pairs.is_empty() {
        return Ok(1);
    }
    // bit q set iff the extension puts pairs[q].0 before pairs[q].1
    let masks: Vec<u128> = linear_extensions_capped(p, cap)?
        .map(|e| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(i, j))| e.precedes(i, j))
                .fold(0u128, |m, (q, _)| m | 1 << q)
        })
        .collect();
    let mut ones: Vec<Vec<u128>> = vec![Vec::new(); pairs.len()];
    let mut zeros: Vec<Vec<u128>> = vec![Vec::new(); pairs.len()];
    for &m in &masks {
        for q in 0..pairs.len() {
            if m >> q & 1 == 1 {
                ones[q].push(m);
            } else {
                zeros[q].push(m);
            }
        }
    }
    let all: u128 = if pairs.len() == 128 { !0 } else { (1u128 << pairs.len()) - 1 };
    let cover = Cover {
        ones: &ones,
        zeros: &zeros,
    };
    let mut k = 1;
    loop {
        if cover.search(all, all, k) {
            return Ok(k);
        }
        k += 1;
    }
}

struct Cover<'a> {
    ones: &'a [Vec<u128>],
    zeros: &'a [Vec<u128>],
}

impl Cover<'_> {
    /// `need_one`: pairs still lacking an extension with the bit set;
    /// `need_zero`: pairs still lacking one with the bit clear.
    fn search(&self, need_one: u128, need_zero: u128, left: usize) -> bool {
        if need_one == 0 && need_zero == 0 {
            return true;
        }
        if left == 0 {
            return false;
        }
        // branch on the requirement with the fewest candidates
        let mut best: Option<&[u128]> = None;
        for q in 0..128 {
            for (needed, lists) in [(need_one, self.ones), (need_zero, self.zeros)] {
                if needed >> q & 1 == 1 {
                    let cands = &lists[q];
                    if best.is_none_or(|b| cands.len() < b.len()) {
                        best = Some(cands);
                    }
                }
            }
        }
        let cands = best.expect("some requirement is open");
        if left == 1 {
            return cands
                .iter()
                .any(|&m| m & need_one == need_one && m & need_zero == 0);
        }
        cands
            .iter()
            .any(|&m| self.search(need_one & !m, need_zero & m, left - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relations(n, &pairs).unwrap()
    }

    #[test]
    fn chain_is_one() {
        assert_eq!(dimension_oracle(&chain(4)).unwrap(), 1);
        assert_eq!(dimension_oracle(&Poset::antichain(0)).unwrap(), 1);
        assert_eq!(dimension_oracle(&Poset::antichain(1)).unwrap(), 1);
    }

    #[test]
    fn antichain_is_two() {
        assert_eq!(dimension_oracle(&Poset::antichain(3)).unwrap(), 2);
    }

    #[test]
    fn crown_is_three() {
        // a_i = i, b_j = 3 + j, a_i < b_j iff i != j
        let mut pairs = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    pairs.push((i, 3 + j));
                }
            }
        }
        let s3 = Poset::from_relations(6, &pairs).unwrap();
        assert_eq!(dimension_oracle(&s3).unwrap(), 3);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            dimension_oracle(&Poset::antichain(9)),
            Err(Error::CapExceeded { .. })
        ));
    }
}
