//! Partition-robust clique constructions, residue-class covering systems and
//! longest-path partitions.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; file formats and the command line live in
//! the `cliquecover` companion crate.
//!
//! Module map:
//!
//! * [`graph`], [`clique`], [`coloring`], [`paths`]: the exact graph layer
//!   (clique number, chromatic number, Mycielskian, longest paths).
//! * [`orientation`]: rooted acyclic orientations and their layer structure.
//! * [`construct`]: the recursive graphs `G^(m)` whose clique number survives
//!   every `k`-partition of the vertex set, plus checkers and the witness
//!   extractor.
//! * [`covers`]: residue classes, coverage profiles, realization of graphs as
//!   intersection graphs, exact-cover completion and split certificates.
//! * [`lp_partition`]: split a graph into an independent set and a part with
//!   strictly shorter longest path.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clique;
pub mod coloring;
pub mod construct;
pub mod covers;
mod error;
pub mod graph;
pub mod limits;
pub mod lp_partition;
pub mod orientation;
pub mod paths;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use vertex_set::VertexSet;
