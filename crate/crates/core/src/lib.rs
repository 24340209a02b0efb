//! Structure algebra for cherry-tree copulas and truncated regular vines.
//!
//! The crate is `no_std` (it needs `alloc`). It covers four layers:
//!
//! * [`structures`]: junction trees, separator tables and cherry-trees with
//!   their validators (running intersection property, antichain, sizes).
//! * [`vine`]: truncated R-vines as sequences of cherry-trees, and the
//!   pair-copula edge labels `a,b|S` they induce.
//! * [`transforms`]: recognition of cherry-trees that are truncated R-vines,
//!   the backward construction of a vine from its top tree, and the
//!   order-(k+1) embedding of an arbitrary cherry-tree.
//! * [`density`]: pair-copula families, h-function recursion, vine and
//!   cherry-tree copula densities, and a full Gaussian reference density used
//!   to verify the factorisations numerically.
//!
//! [`generate`] holds seeded random generators for the structures above; they
//! drive the property tests and the `selfcheck` command of the CLI.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod density;
pub mod error;
pub mod generate;
pub mod set;
pub mod structures;
pub mod transforms;
mod tree;
pub mod vine;

pub use error::{Error, Result};
pub use set::{Vertex, VertexSet};
pub use structures::{
    canonicalize, check_rip, junction_tree_exists, separator_table, validate_cherry, CherryTree,
    ClusterGraph, JunctionTree, SeparatorTable, ValidationReport, Violation,
};
pub use transforms::{backward, embed, is_truncated_rvine, two_separator_check, Offender, TruncationWitness};
pub use vine::{edge_labels, proximity_equiv, validate_sequence, BaseTree, EdgeLabel, TruncatedRVine};
