//! Decision procedures and machine-checkable certificates for graphs
//! realizable as p-competition graphs.
//!
//! A graph `G` on `n` vertices is a p-competition graph exactly when it is
//! isomorphic to the p-row graph of some square 0/1 matrix of order `n`
//! (rows adjacent when they share ones in at least `p` columns). The crate
//! computes, for each `p` in `[n]`, whether `G` qualifies (closed-form
//! constructions for recognized families, necessary-condition filters,
//! exhaustive symmetry-reduced search otherwise) and packages every
//! positive answer as a certificate matrix that re-verifies from scratch.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI
//! live in the companion `pcomp-cli` crate.

#![no_std]

extern crate alloc;

pub mod bits;
pub mod cert;
pub mod cover;
pub mod digraph;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod iso;
pub mod matrix;
pub mod psi;
pub mod solver;

pub use cert::Certificate;
pub use cover::CliqueFamily;
pub use digraph::Digraph;
pub use graph::{Diameter, Graph, VertexPartition};
pub use matrix::BinaryMatrix;
pub use solver::{RealizerReport, SearchBudget, Status, Verdict};
