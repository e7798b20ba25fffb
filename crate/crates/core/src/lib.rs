//! Cyclic permutation patterns: containment and avoidance, exhaustive
//! enumeration of avoidance classes, descent and peak statistics,
//! generating trees, exact polynomial and power-series arithmetic, and a
//! registry of closed-form counts checked against scans.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod enumerate;
mod error;
pub mod formulas;
pub mod pattern;
pub mod perm;
pub mod stats;

pub use error::{Error, Result};
pub use pattern::{PatternSet, VincularPattern};
pub use perm::{CyclicPerm, Permutation, Symmetry};
