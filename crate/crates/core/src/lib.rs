//! Monochromatic vertex-disconnection colorings of undirected graphs.
//!
//! A vertex coloring is an *MVD-coloring* when every pair of nonadjacent
//! vertices is separated by a vertex cut whose members all share one color.
//! `mvd(G)` is the largest number of colors such a coloring can use, with
//! `mvd(Kn) = n` by convention.
//!
//! The crate computes `mvd(G)` together with a certified coloring:
//!
//! * [`blocks`] splits a connected graph into blocks with an iterative
//!   low-link DFS,
//! * [`solve`] solves each block (closed forms, catalog lookup or an exact
//!   partition search) and stitches the block colorings back together,
//! * [`verify`] checks any coloring against the definition,
//! * [`catalog`] generates minimally 2-connected graphs and stores their
//!   exact values,
//! * [`iso`] matches blocks against catalog entries,
//! * [`analysis`] evaluates the known upper bounds and the classification of
//!   graphs with large `mvd`.
//!
//! ```
//! use mvd::{Graph, solve};
//!
//! let c6 = Graph::cycle(6);
//! let res = solve::mvd_exact(&c6).unwrap();
//! assert_eq!(res.value, 3);
//! ```

pub mod analysis;
pub mod blocks;
pub mod catalog;
pub mod cli;
pub mod coloring;
mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod partition;
pub mod solve;
pub mod verify;
mod vset;

pub use blocks::{decompose, BlockDecomposition};
pub use catalog::Catalog;
pub use coloring::{Color, VertexColoring};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use solve::{Method, MvdResult};
pub use verify::{is_mvd_coloring, MvdVerdict};
pub use vset::VertexSet;
