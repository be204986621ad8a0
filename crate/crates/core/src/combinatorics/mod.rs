//! Simplicial complexes, graphs, simple hypergraphs and the structural
//! operations on them (links, restrictions, duals, covers).

mod complex;
mod graph;
mod hypergraph;
pub mod iso;
mod set;

pub use complex::SimplicialComplex;
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use set::{maximal_sets, minimal_sets, VertexSet, MAX_VERTICES};
