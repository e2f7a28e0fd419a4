use std::fmt;

use crate::error::{Error, Result};
use crate::extension::Realizer;
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    /// Extension `extension` places `upper` before `lower` although `lower < upper`.
    NotExtension {
        extension: usize,
        lower: usize,
        upper: usize,
    },
    /// `x` and `y` are incomparable but no extension places `y` before `x`.
    NotReversed { x: usize, y: usize },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Verdict::Ok => write!(f, "ok"),
            Verdict::NotExtension {
                extension,
                lower,
                upper,
            } => write!(
                f,
                "counterexample {lower} {upper}: extension {extension} violates {lower} < {upper}"
            ),
            Verdict::NotReversed { x, y } => {
                write!(f, "counterexample {x} {y}: {y} is never placed below {x}")
            }
        }
    }
}

/// Checks that every member extends the order and that their intersection
/// is exactly the order.
pub fn verify_realizer(p: &Poset, r: &Realizer) -> Result<Verdict> {
    if r.ground_len() != p.len() {
        return Err(Error::SizeMismatch {
            expected: p.len(),
            found: r.ground_len(),
        });
    }
    for (k, e) in r.extensions().iter().enumerate() {
        if let Some((lower, upper)) = e.first_violation(p) {
            return Ok(Verdict::NotExtension {
                extension: k,
                lower,
                upper,
            });
        }
    }
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            if p.comparable(x, y) {
                continue;
            }
            if !r.extensions().iter().any(|e| e.precedes(y, x)) {
                return Ok(Verdict::NotReversed { x, y });
            }
        }
    }
    Ok(Verdict::Ok)
}
