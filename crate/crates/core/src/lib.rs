//! Heawood spin vectors for Tait colorings of planar cubic graphs.
//!
//! A simple biconnected planar cubic graph on `2n` vertices is given by its rotation system
//! ([`EmbeddedCubicGraph`]). Its faces yield a homogeneous linear system over GF(3) whose
//! everywhere-nonzero solutions ([`HeawoodVector`]) correspond to the classes of Tait
//! colorings under cyclic color shifts. This crate builds and solves that system, converts
//! between spin vectors and explicit colorings, studies defining sets of vertices, and checks
//! everything against an independent brute-force coloring counter ([`oracle`]).

pub mod defining;
mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod heawood;
pub mod linalg;
pub mod oracle;

pub use defining::{combination_support, DefiningAnalyzer, DefiningMode, FreeVariableSet, VertexSet, ZebraWitness};
pub use error::{Error, Result};
pub use format::{parse_graph, write_graph};
pub use generators::{
    catalog, circular_ladder, cln_formula, count_sequences_with_sum, count_zero_sum_sequences, k4, mobius_formula,
    mobius_ladder, petersen, CatalogEntry, CatalogGraph,
};
pub use graph::{Bipartition, Dart, Edge, EmbeddedCubicGraph, Face, FaceId, Issue, TaitColoring, ValidationReport, VertexId};
pub use heawood::{
    bipartite_heawood_vector, build_main_sle, contract_triangle, count_tait_colorings_heawood,
    enumerate_heawood_vectors, heawood_to_tait, sle_rank, tait_to_heawood, Contraction, HeawoodSystem, HeawoodVector,
    Spin,
};
pub use linalg::{Gf3, Gf3Matrix, ParametricSolution, RrefResult};
pub use oracle::{bipartite_tait_construct, count_tait_oracle, enumerate_tait_oracle, CubicGraph};
