use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Least `θ` with `2^(2^θ) ≥ n`.
pub fn min_theta(n: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::Domain(format!("min_theta needs n >= 2, got {n}")));
    }
    Ok(ceil_log2(ceil_log2(n) as u64))
}

/// Least `λ` with `2^λ ≥ n` (0 for `n ≤ 1`).
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// `exp_0(ρ) = ρ`, `exp_{i+1}(ρ) = 2^{exp_i(ρ)}`.
pub fn exp_iter(i: u32, rho: u64) -> Result<u64> {
    let mut v = rho;
    for _ in 0..i {
        if v >= 64 {
            return Err(Error::Overflow("iterated exponential"));
        }
        v = 1u64 << v;
    }
    Ok(v)
}

/// A binary string `f : λ → 2`, coordinate 0 first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code(Vec<bool>);

impl Code {
    pub fn new(bits: Vec<bool>) -> Self {
        Code(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, xi: usize) -> bool {
        self.0[xi]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Domain(format!("bad code digit `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Code)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Least coordinate where `f` and `g` differ.
pub fn delta(f: &Code, g: &Code) -> Result<usize> {
    if f.len() != g.len() {
        return Err(Error::SizeMismatch {
            expected: f.len(),
            found: g.len(),
        });
    }
    f.0.iter()
        .zip(&g.0)
        .position(|(a, b)| a != b)
        .ok_or(Error::EqualCodes)
}

/// Pairwise distinct codes of a common length, one per ground element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCodeBook {
    lambda: usize,
    codes: Vec<Code>,
}

impl BinaryCodeBook {
    pub fn new(lambda: usize, codes: Vec<Code>) -> Result<Self> {
        if let Some(c) = codes.iter().find(|c| c.len() != lambda) {
            return Err(Error::SizeMismatch {
                expected: lambda,
                found: c.len(),
            });
        }
        let mut sorted = codes.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::EqualCodes);
        }
        Ok(BinaryCodeBook { lambda, codes })
    }

    /// The first `n` strings of length `lambda` in lexicographic order.
    pub fn lexicographic_with_length(n: usize, lambda: usize) -> Result<Self> {
        if lambda < 64 && (n as u128) > (1u128 << lambda) {
            return Err(Error::Domain(format!("{n} distinct codes do not fit in length {lambda}")));
        }
        let codes = (0..n)
            .map(|a| Code((0..lambda).map(|xi| (a >> (lambda - 1 - xi)) & 1 == 1).collect()))
            .collect();
        BinaryCodeBook::new(lambda, codes)
    }

    /// Shortest length (at least 1) admitting `n` distinct codes.
    pub fn lexicographic(n: usize) -> Self {
        let lambda = (ceil_log2(n as u64) as usize).max(1);
        Self::lexicographic_with_length(n, lambda).expect("length fits")
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn code(&self, alpha: usize) -> &Code {
        &self.codes[alpha]
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    /// `Δ(f_α, f_β)`; the book guarantees distinctness.
    pub fn delta(&self, alpha: usize, beta: usize) -> usize {
        delta(&self.codes[alpha], &self.codes[beta]).expect("codes in a book are distinct")
    }
}
