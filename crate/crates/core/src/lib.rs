//! Kazhdan–Lusztig combinatorics and Schubert slice geometry.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`laurent`]: integer Laurent polynomials in `v` with the bar involution.
//! * [`coxeter`]: symmetric groups (type A) and signed permutation groups
//!   (type B), with lengths, descents, Bruhat order and parabolic subgroups.
//! * [`hecke`]: the Hecke algebra, its bar involution and a memoized
//!   Kazhdan–Lusztig basis table.
//! * [`cells`]: Robinson–Schensted, KL cells, W-graphs and cell modules.
//! * [`posbasis`]: search for positive bases of cell modules.
//! * [`linalg`]: exact rational rank, kernels and minor gradients.
//! * [`schubert`]: slice charts, rank conditions, the Kashiwara–Saito
//!   variety and sampled verification of its realizations as Schubert slices.
//! * [`catalog`]: named permutations, words and tableaux used throughout.
//!
//! Enabling the `parallel` feature pulls in `std` and `rayon` for the
//! stratified KL table build and per-sample verification.
#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(feature = "parallel")]
extern crate std;

pub mod catalog;
pub mod cells;
pub mod coxeter;
mod error;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod posbasis;
pub mod schubert;

pub use error::{Error, Result};
