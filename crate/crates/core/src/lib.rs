//! Maximum planar subgraph toolkit: planarity testing with embeddings and
//! Kuratowski witnesses, subgraph heuristics, an exact skewness solver and
//! a fixed-embedding planarizer.

pub mod budget;
pub mod exact;
pub mod graph;
pub mod generate;
pub mod heuristics;
pub mod io;
pub mod oracle;
pub mod planarity;
pub mod planarize;
pub mod rng;

pub use graph::{EdgeId, EdgeSet, Graph, GraphError, VertexId};
