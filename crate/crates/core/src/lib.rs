//! Connectivity and symmetry of finite hypergraphs.
//!
//! - [`model`]: the [`Hypergraph`] type, structural predicates, boundary
//!   operators and the text format.
//! - [`connectivity`]: exact edge-connectivity by max-flow, an exhaustive
//!   oracle, and edge atoms.
//! - [`symmetry`]: automorphism search, orbits, vertex-transitivity and
//!   blocks of imprimitivity.
//! - [`constructions`]: generators for the extremal families and the
//!   positive-instance corpora.
//! - [`verify`]: the uncrossing, deletion-identity and theorem checks.
//! - [`report`]: the per-instance [`AnalysisReport`].

pub mod connectivity;
pub mod constructions;
pub mod error;
mod flow;
pub mod model;
pub mod report;
pub mod symmetry;
pub mod verify;

pub use connectivity::{
    edge_atom, edge_atoms, edge_connectivity, edge_connectivity_oracle,
    is_maximally_edge_connected, st_edge_connectivity, CutResult,
};
pub use constructions::{Family, ParallelClasses};
pub use error::{Error, ParseError, Result};
pub use model::{
    BoundaryProfile, EdgeIndex, Hypergraph, Linearity, Uniformity, Vertex, VertexProfile,
};
pub use report::{AnalysisOptions, AnalysisReport};
pub use symmetry::{
    enumerate_automorphisms, find_automorphism_mapping, is_automorphism, is_block_of_imprimitivity,
    is_vertex_transitive, vertex_orbits, BlockVerdict, Permutation,
};
