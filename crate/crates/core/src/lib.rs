//! Higher independence complexes of finite simple graphs.
//!
//! For a graph `G` and `r >= 1` the complex `Ind_r(G)` consists of the vertex
//! subsets whose induced subgraph has no connected component with more than
//! `r` vertices. This crate computes those complexes, their Stanley–Reisner
//! ideals, vertex-splitting decompositions of the ideals for co-chordal graphs,
//! graded Betti tables (split recursion, closed forms and a Hochster-formula
//! oracle) and explicit `r`-collapse sequences.
//!
//! Everything here is pure computation over `alloc`; file formats and the CLI
//! live in the `indr` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod betti;
pub mod collapse;
pub mod complex;
mod error;
pub mod family;
pub mod graph;
pub mod homology;
pub mod ideal;
mod linalg;
mod vertex_set;

pub use betti::{BettiTable, ClosedForm, Provenance};
pub use collapse::{CollapseSequence, FreePair, InvalidStep, SearchOutcome};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use family::Family;
pub use graph::{Graph, InducedSubgraph, PerfectEliminationOrder, StructurePredicates};
pub use homology::{FieldSpec, ReducedHomology};
pub use ideal::{SplitNode, SplitSearch, SplitTree, SquareFreeIdeal};
pub use vertex_set::VertexSet;
