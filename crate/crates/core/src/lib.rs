//! Constructive solver for the Erdős–Ginzburg–Ziv problem: among any
//! `2n - 1` integers there exist `n` whose sum is divisible by `n`.
//!
//! [`egz`] finds such a selection in `O(n log n)` time. The prime case
//! grows a table of reachable subset sums, replacing one element at a
//! time and locating each new sum by a binary search along a cyclic
//! walk; the composite case splits `n = p * q`, solves `2q - 1` pooled
//! subproblems modulo `p`, and recurses on the group quotients modulo
//! `q`.
//!
//! The [`oracle`] module contains slower, independent implementations
//! (explicit set materialization, exhaustive search) used to cross-check
//! the solver, plus the linear-time certificate check.

pub mod error;
pub mod modarith;
pub mod oracle;
mod solver;
mod types;

pub use error::Error;
pub use solver::{
    egz, egz_composite, egz_composite_traced, egz_prime, egz_prime_traced, find_t, CompositeTrace,
    FindT, GrowthStep, PrimeTrace,
};
pub use types::{Instance, ResidueTable, Selection, SortedView, MAX_MODULUS};
