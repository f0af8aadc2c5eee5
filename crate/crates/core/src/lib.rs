//! Ornamentation, reorientation and sourcing posets of directed graphs.
//!
//! Vertices are labelled `1..=n`. Most algorithms are exhaustive and meant for
//! graphs with a handful of vertices.

#![allow(clippy::needless_range_loop)]

pub mod bits;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod intreeval;
pub mod order;
pub mod ornament;
pub mod perm;
pub mod polytope;
pub mod reorient;
pub mod sourcing;
pub mod verify;

pub use bits::{Vertex, VertexSet};
pub use digraph::{path_hypergraph, Digraph, Hypergraph};
pub use error::{Error, Result};
pub use order::FinitePoset;
pub use ornament::Ornamentation;
pub use reorient::{Ambient, Reorientation};
