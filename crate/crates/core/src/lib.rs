//! Vertex enumeration for covering polyhedra `{x : Ax >= 1, x >= 0}` of 0/1
//! totally unimodular matrices.
//!
//! The vertices of such a polyhedron are the characteristic vectors of the
//! minimal transversals of the row hypergraph of `A`. This crate computes that
//! dual hypergraph with a recursive decomposition along 1-, 2- and 3-sums of the
//! unimodular hypergraph, with Berge multiplication as base case and referee.

pub mod decomp;
pub mod dualizer;
pub mod error;
pub mod hypergraph;
pub mod matrix;
pub mod network;
pub mod oracle;
pub mod polyhedron;
pub mod vertex_set;

mod par;

pub use decomp::{detect, validate, DecompositionCase, DetectBudget};
pub use dualizer::{dualize, DualizationStats, DualizerConfig};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, ReductionStep, ReductionTrace};
pub use matrix::TuMatrix;
pub use network::TreeRepresentation;
pub use oracle::{
    berge_dualize, verify_dual_pair, OracleBudget, TransversalSet, VerificationResult,
};
pub use vertex_set::{VertexId, VertexSet, MAX_VERTICES};
