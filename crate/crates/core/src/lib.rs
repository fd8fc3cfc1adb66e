//! Density contrast subgraphs: given two weighted graphs over the same
//! vertices, find the vertex sets whose density grows the most from the
//! first to the second.
//!
//! The entry point is a [`DifferenceGraph`] `D = A2 - alpha A1`. Two density
//! measures are supported: average degree ([`dcsad`]) and graph affinity
//! ([`dcsga`]). [`oracle`] holds exhaustive solvers for small instances.

pub mod cli;
pub mod cooccur;
pub mod dcsad;
pub mod dcsga;
pub mod density;
pub mod difference;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod pq;

pub use dcsad::{dcs_greedy, greedy_peel, Provenance, SubsetResult};
pub use dcsga::{new_sea, DcsgaResult, SolverConfig};
pub use difference::{build_difference, DifferenceGraph, WeightTransform};
pub use embedding::Embedding;
pub use error::{Error, Result};
pub use graph::{parse_edge_list, read_edge_list, write_edge_list, WeightedGraph};
