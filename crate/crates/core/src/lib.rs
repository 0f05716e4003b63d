//! Exact Kronecker products of Schur functions with `s_(d,d)`.
//!
//! The crate pairs closed-form descriptions of `s_(d,d) ∗ s_(d+k,d-k)` and
//! `s_(d,d) ∗ s_(2d-k,1^k)` with a brute-force character-theoretic oracle,
//! plus the generating functions and tableau counts that follow from them.

#[cfg(feature = "fs")]
pub mod cache_file;
pub mod closed_forms;
pub mod error;
pub mod partition;
pub mod series;
pub mod symmetric;
pub mod verify;

pub use error::{KronError, Result};
pub use partition::{Partition, ShapeClass, ShiftVector};
pub use symmetric::{CharacterCache, SchurVector};
