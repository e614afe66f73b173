//! Reverse-pass stack sorting of permutations.
//!
//! A permutation is fed through a stack that may only pop the next value the
//! output needs; leftovers are returned to the input in reverse order and the
//! process repeats. The number of extra passes is the *rev-tier*. This crate
//! computes it two independent ways, mines the bases of the classes of
//! bounded rev-tier, realizes the Entringer bijection for permutations of
//! maximal rev-tier, and reproduces count tables and generating functions
//! with exact arithmetic.

pub mod basis;
pub mod cli;
pub mod entringer;
pub mod error;
pub mod pairs;
pub mod perm;
pub mod series;
pub mod sorter;
pub mod sweep;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use pairs::{ClassLabel, Orientation, SeparatedPairProfile};
pub use perm::{parse_permutation, Permutation};
