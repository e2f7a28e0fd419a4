//! Order dimension of finite partial orders.
//!
//! Exact computation (brute-force oracle and critical-pair search), upper
//! bounds from explicit realizer constructions, and lower-bound
//! certificates from strongly independent antichains and shift colourings.

pub mod bitset;
pub mod bounded;
pub mod cli;
pub mod dimension;
pub mod error;
pub mod extension;
pub mod format;
pub mod gallery;
pub mod lattice;
pub mod poset;
pub mod rank;
pub mod subsets;

pub use error::{Error, Result};
pub use extension::{linear_extensions, LinearExtension, Realizer};
pub use poset::Poset;
