//! Exact combinatorial invariants of nodal curves and their dual graphs.

pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod kring;
pub mod linalg;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Multigraph, VertexSet};
pub use kring::{RationalQL, VertexClass, WeightPoly};
