//! Perfect colorings of graphs and hypergraphs, and the combinatorial objects
//! they encode: designs, Hadamard matrices, difference sets and bent functions.
//!
//! Every perfection test is exact integer arithmetic. Floating point appears
//! only in [`spectral`].

pub mod bent;
pub mod designs;
pub mod difference;
pub mod error;
pub mod families;
pub mod graph;
pub mod hypergraph;
pub mod spectral;
pub mod subspace;

pub use error::{Error, Result};
pub use graph::{AdjacencyMatrix, Coloring, DirectedMultigraph, Multigraph, QuotientMatrix};
pub use hypergraph::{BipartiteGraph, Hypergraph};
