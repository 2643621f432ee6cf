//! Equal-degree paths: detection, exhaustive extremal search and
//! certificate checking for small graphs.
//!
//! A graph has the configuration of length `ℓ` when two vertices of the
//! same degree are joined by a simple path with `ℓ` edges. The crate finds
//! such paths, enumerates graphs up to isomorphism to compute the largest
//! edge count of a graph without one, and checks the counting identities
//! and inequalities that bound that edge count.

pub mod certificates;
pub mod cli;
pub mod detector;
pub mod enumerator;
pub mod error;
pub mod graph;
pub mod lambda;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
