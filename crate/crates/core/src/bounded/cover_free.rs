use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::cover::first_cover;

/// No set lies inside the union of `c` others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFreeFamily {
    ground_size: usize,
    sets: Vec<BitSet>,
    c: usize,
}

// search nodes allowed when verifying one random candidate
const CANDIDATE_BUDGET: u64 = 200_000;
const DRAWS_PER_GROUND: usize = 4;

impl CoverFreeFamily {
    /// Checks the cover-free property exactly before accepting the sets.
    pub fn new(ground_size: usize, sets: Vec<BitSet>, c: usize) -> Result<Self> {
        if let Some(s) = sets.iter().find(|s| s.capacity() != ground_size) {
            return Err(Error::SizeMismatch {
                expected: ground_size,
                found: s.capacity(),
            });
        }
        let family = CoverFreeFamily { ground_size, sets, c };
        if let Some((b, zeta)) = verify_cover_free(&family) {
            return Err(Error::Domain(format!("E_{zeta} is covered by {b:?}")));
        }
        Ok(family)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Some `α ∈ E_ζ ∖ ⋃_{ξ∈B} E_ξ`, the least one.
    pub fn escape_point(&self, b: &[usize], zeta: usize) -> Option<usize> {
        let mut rest = self.sets[zeta].clone();
        for &xi in b {
            rest.difference_with(&self.sets[xi]);
        }
        rest.first()
    }
}

/// A violating `(B, ζ)` with `|B| ≤ c` and `ζ ∉ B`, if any. Exact.
pub fn verify_cover_free(f: &CoverFreeFamily) -> Option<(Vec<usize>, usize)> {
    first_cover(&f.sets, f.c, &mut u64::MAX.clone()).expect("unbounded search decides")
}

fn singletons(n: usize, c: usize) -> CoverFreeFamily {
    CoverFreeFamily {
        ground_size: n,
        sets: (0..n).map(|i| BitSet::from_iter_with_len(n, [i])).collect(),
        c,
    }
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Polynomials of degree `< d` over `GF(q)` evaluated at `l` points; two
/// such graphs share at most `d - 1` points, so `l > c(d-1)` makes the
/// family c-cover-free. Returns the parameters `(q, d, l)` of least ground
/// `l·q`.
fn polynomial_parameters(n: usize, c: usize) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for d in 1..=n.max(2) {
        let l = c * (d - 1) + 1;
        if let Some((bq, _, bl)) = best {
            if l * l > bq * bl {
                break;
            }
        }
        // least prime q ≥ l with q^d ≥ n
        let mut q = l.max(2);
        while !is_prime(q) || (q as u128).checked_pow(d as u32).is_some_and(|v| v < n as u128) {
            q += 1;
        }
        if best.is_none_or(|(bq, _, bl)| l * q < bq * bl) {
            best = Some((q, d, l));
        }
        if d >= 64 {
            break;
        }
    }
    best
}

fn polynomial_family(n: usize, c: usize, q: usize, d: usize, l: usize) -> CoverFreeFamily {
    let m = l * q;
    let sets = (0..n)
        .map(|xi| {
            // coefficients are the base-q digits of ξ
            let mut coef = Vec::with_capacity(d);
            let mut rest = xi;
            for _ in 0..d {
                coef.push(rest % q);
                rest /= q;
            }
            BitSet::from_iter_with_len(
                m,
                (0..l).map(|i| i * q + coef.iter().rev().fold(0, |acc, &a| (acc * i + a) % q)),
            )
        })
        .collect();
    CoverFreeFamily { ground_size: m, sets, c }
}

/// A verified c-cover-free family of `n` sets.
///
/// Grounds double from `c + 1`; at each ground a few seeded random families
/// of density `1/(c+1)` are drawn and the first that passes exact
/// verification is kept. A polynomial family is used as soon as its ground
/// fits, and `n` disjoint singletons are the last resort.
pub fn build_cover_free(n: usize, c: usize, seed: u64) -> Result<CoverFreeFamily> {
    if c == 0 {
        return Err(Error::Domain("cover-free level must be at least 1".into()));
    }
    if n <= c + 1 {
        return Ok(singletons(n, c));
    }
    let poly = polynomial_parameters(n, c).filter(|&(q, _, l)| l * q < n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = c + 1;
    while m < n {
        if let Some((q, d, l)) = poly {
            if l * q <= m {
                let f = polynomial_family(n, c, q, d, l);
                debug_assert!(verify_cover_free(&f).is_none());
                return Ok(f);
            }
        }
        for _ in 0..DRAWS_PER_GROUND {
            let sets: Vec<BitSet> = (0..n)
                .map(|_| BitSet::from_iter_with_len(m, (0..m).filter(|_| rng.gen_range(0..=c) == 0)))
                .collect();
            let mut budget = CANDIDATE_BUDGET;
            if let Ok(None) = first_cover(&sets, c, &mut budget) {
                return Ok(CoverFreeFamily { ground_size: m, sets, c });
            }
        }
        m *= 2;
    }
    if let Some((q, d, l)) = poly {
        return Ok(polynomial_family(n, c, q, d, l));
    }
    Ok(singletons(n, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(s: &BitSet) -> Vec<usize> {
        s.iter().collect()
    }

    #[test]
    fn two_sets_one_level() {
        let f = build_cover_free(2, 1, 0).unwrap();
        assert_eq!(f.ground_size(), 2);
        assert_eq!(ids(&f.sets()[0]), vec![0]);
        assert_eq!(ids(&f.sets()[1]), vec![1]);
    }

    #[test]
    fn small_families_verify() {
        for (n, c) in [(3, 1), (20, 3), (30, 2), (60, 1)] {
            let f = build_cover_free(n, c, 7).unwrap();
            assert_eq!(f.len(), n);
            assert_eq!(verify_cover_free(&f), None, "n={n} c={c}");
        }
    }

    #[test]
    fn polynomial_family_for_two_hundred() {
        let (q, d, l) = polynomial_parameters(200, 5).unwrap();
        assert!(l * q < 200);
        let f = polynomial_family(200, 5, q, d, l);
        assert_eq!(verify_cover_free(&f), None);
        let g = build_cover_free(200, 5, 1).unwrap();
        assert!(g.ground_size() < 200);
        assert_eq!(verify_cover_free(&g), None);
    }

    #[test]
    fn detects_covered_set() {
        let sets = vec![
            BitSet::from_iter_with_len(3, [0, 1]),
            BitSet::from_iter_with_len(3, [1, 2]),
            BitSet::from_iter_with_len(3, [0, 2]),
        ];
        assert!(CoverFreeFamily::new(3, sets.clone(), 1).is_ok());
        assert!(CoverFreeFamily::new(3, sets, 2).is_err());
    }

    #[test]
    fn escape_point_avoids_union() {
        let f = build_cover_free(10, 2, 3).unwrap();
        let a = f.escape_point(&[1, 2], 0).unwrap();
        assert!(f.sets()[0].contains(a) && !f.sets()[1].contains(a) && !f.sets()[2].contains(a));
    }

    #[test]
    fn deterministic_for_seed() {
        assert_eq!(build_cover_free(40, 2, 11).unwrap(), build_cover_free(40, 2, 11).unwrap());
    }

    #[test]
    fn rejects_level_zero() {
        assert!(matches!(build_cover_free(4, 0, 0), Err(Error::Domain(_))));
    }
}
