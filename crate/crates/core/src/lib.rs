//! Spectral theory of finite graphs viewed as measure-preserving graphs
//! under the uniform vertex measure.
//!
//! The crate covers adjacency and Laplacian spectra, Wilf and Hoffman type
//! chromatic bounds together with the peeling colorings that realize them,
//! spectral bipartiteness, odd-component (Tutte) ratios and the
//! Brouwer–Haemers matching test, and spectra along convergent graph
//! families. Every bound comes with a brute-force oracle for small inputs.

pub mod bipartite;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod limits;
pub mod matching;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DegreeStats, DirectedGraph, Graph, InducedSubgraph, Transport, VertexSubset};
pub use spectral::Spectrum;
