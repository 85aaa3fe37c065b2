//! Perfect matchings of plane bipartite graphs, their resonance graphs, and
//! the correspondences between maximal hypercubes, maximal resonant sets and
//! maximal independent sets of the inner dual.
//!
//! Everything here is exhaustive and exact; size guards (see [`limits`])
//! keep the enumerations at desk scale.

pub mod bitset;
pub mod cube;
pub mod error;
pub mod generators;
pub mod graph;
pub mod limits;
pub mod matching;
pub mod mis;
pub mod plane_graph;
pub mod resonance;
pub mod resonant_sets;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use matching::Matching;
pub use plane_graph::{Color, PlaneGraph};
