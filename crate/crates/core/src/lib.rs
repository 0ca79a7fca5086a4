//! Oriented hypergraphs and their incidence, adjacency, degree and Laplacian
//! matrices, with spectra, executable eigenvalue bounds and brute-force
//! oracles for small instances.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod matrices;
pub mod model;
pub mod oracle;
pub mod spectra;
pub mod transform;

pub use error::{Error, Result};
pub use model::{Adjacency, EdgeId, Incidence, OrientedHypergraph, Sign, VertexId, VertexStats};
pub use transform::SwitchingFunction;
