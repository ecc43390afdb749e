//! Wielandt k-closures of finite permutation groups, base numbers, Sylow
//! decompositions of nilpotent groups, and a bounded search for faithful
//! representations that fail to be k-closed.
//!
//! Points are 0-based in the Rust API and 1-based in cycle notation.
//! Products act left to right.

pub mod bsgs;
pub mod catalog;
pub mod cli;
pub mod closure;
pub mod error;
pub mod limits;
pub mod perm;
pub mod structure;
pub mod totality;
pub mod verify;

pub use bsgs::{disjoint_union_product, regular_representation, GeneratedGroup, StabilizerChain};
pub use closure::{is_k_closed, k_closure, k_closure_naive, tuple_orbits, OrbitColoring};
pub use error::{Error, Result};
pub use limits::Limits;
pub use perm::{format_cycles, parse_cycles, Permutation};
