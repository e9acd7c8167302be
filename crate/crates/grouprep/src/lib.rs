//! Group representability on graphs and trees.
//!
//! The crate bundles four layers:
//!
//! - [`perm`]: permutations, deterministic Schreier–Sims stabilizer chains,
//!   commutator generators, solvability of permutation groups.
//! - [`table`]: groups given by full multiplication tables, with validation,
//!   commutator subgroups, and standard constructions.
//! - [`graph`] / [`tree`]: exact graph isomorphism and automorphism search,
//!   plus tree-specific machinery (canonical codes, orbit subtrees, rooting,
//!   wreath decomposition of the automorphism group).
//! - [`decide`]: the decision procedures tying the layers together: the
//!   reduction from graph isomorphism to representability of a prime-order
//!   cyclic group, the prime-factor criterion for solvable groups, the
//!   recursive procedure for trees, and a brute-force search oracle.
//!
//! The `examples/` directory has one runnable program per capability, and the
//! `grouprep` binary exposes everything over simple text file formats
//! (see [`io`]).

pub mod corpus;
pub mod decide;
pub mod error;
pub mod graph;
pub mod io;
pub mod perm;
pub mod table;
pub mod tree;

pub mod cli;

pub use error::{Error, Result};
pub use graph::Graph;
pub use perm::{GenSet, Permutation, StrongGenSet};
pub use table::TableGroup;
