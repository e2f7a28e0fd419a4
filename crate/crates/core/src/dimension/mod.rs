//! Realizer verification, exact dimension, and lower-bound certificates.

mod antichain;
mod oracle;
mod search;
mod shift;
mod verify;

use std::time::{Duration, Instant};

pub use antichain::{
    antichain_lower_bound, is_strongly_independent, IndependenceCheck, LowerBound,
    StronglyIndependentAntichain, Witness, DEFAULT_SI_CAP,
};
pub use oracle::{dimension_oracle, dimension_oracle_capped, DEFAULT_ORACLE_CAP};
pub use search::{
    dimension_search, dimension_search_with, exact_dimension, exact_dimension_with,
    greedy_realizer, DimensionResult, SearchOutcome,
};
pub use shift::{
    find_monochromatic_shift, shift_coloring, shift_coloring_unchecked, ShiftColoring,
    ShiftWitness,
};
pub use verify::{verify_realizer, Verdict};

/// Limits for the exponential searches. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn millis(ms: u64) -> Self {
        Budget {
            max_nodes: None,
            time_limit: Some(Duration::from_millis(ms)),
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            time_limit: None,
        }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            max_nodes: self.max_nodes,
            deadline: self.time_limit.map(|d| Instant::now() + d),
            nodes: 0,
            exhausted: false,
        }
    }
}

pub(crate) struct Meter {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    /// Counts one search node; true once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m)
            || (self.nodes % 256 == 1 && self.deadline.is_some_and(|d| Instant::now() >= d))
        {
            self.exhausted = true;
        }
        self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }
}
