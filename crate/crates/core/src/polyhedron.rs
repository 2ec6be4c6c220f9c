//! Vertices and extreme directions of `P(A,1) = {x : Ax >= 1, x >= 0}`.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::dualizer::{dualize, DualizationStats, DualizerConfig};
use crate::error::{Error, Result};
use crate::matrix::{TuBudget, TuMatrix};
use crate::oracle::TransversalSet;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Reject matrices that fail the total unimodularity test. When off, the
    /// caller vouches for the input.
    pub check_tu: bool,
    pub tu_budget: TuBudget,
    pub dualizer: DualizerConfig,
}

impl EnumerationConfig {
    pub fn checked() -> Self {
        EnumerationConfig {
            check_tu: true,
            ..EnumerationConfig::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationSummary {
    pub vertex_count: u64,
    /// Always the number of columns: the unit vectors.
    pub direction_count: u64,
    pub stats: DualizationStats,
    pub rows: usize,
    pub cols: usize,
    /// SHA-256 of the matrix in its text format.
    pub sha256: String,
}

/// Emits every vertex of `P(A,1)` to `sink` once, in canonical order of
/// the supports.
pub fn enumerate_vertices<F>(
    a: &TuMatrix,
    cfg: &EnumerationConfig,
    mut sink: F,
) -> Result<EnumerationSummary>
where
    F: FnMut(VertexSet),
{
    ensure_tu(a, cfg)?;
    let h = a.hypergraph()?;
    let (dual, stats) = dualize(&h, &cfg.dualizer)?;
    for t in dual.iter() {
        sink(t);
    }
    Ok(EnumerationSummary {
        vertex_count: dual.len() as u64,
        direction_count: a.cols() as u64,
        stats,
        rows: a.rows(),
        cols: a.cols(),
        sha256: hex::encode(Sha256::digest(a.to_text().as_bytes())),
    })
}

/// The unit vectors of dimension `n`.
pub fn extreme_directions(n: usize) -> Result<Vec<Vec<u8>>> {
    if n == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    Ok((0..n)
        .map(|i| transversal_to_vertex(VertexSet::singleton(i), n))
        .collect())
}

/// Vertices of the blocker `P(A',1)`, where the rows of `A'` are the
/// vertices of `P(A,1)`: dualizing twice, which must give back `Min(H[A])`.
pub fn dual_polyhedron_vertices(a: &TuMatrix, cfg: &EnumerationConfig) -> Result<TransversalSet> {
    ensure_tu(a, cfg)?;
    let h = a.hypergraph()?;
    let (first, _) = dualize(&h, &cfg.dualizer)?;
    let (second, _) = dualize(first.family(), &cfg.dualizer)?;
    let expected = h.minimized();
    if second.family() != &expected {
        return Err(Error::structural(
            "double dual differs from the minimized input",
        ));
    }
    Ok(second)
}

/// Characteristic vector of `t` in `{0,1}^n`.
pub fn transversal_to_vertex(t: VertexSet, n: usize) -> Vec<u8> {
    (0..n).map(|v| t.contains(v) as u8).collect()
}

fn ensure_tu(a: &TuMatrix, cfg: &EnumerationConfig) -> Result<()> {
    if cfg.check_tu && !a.is_totally_unimodular(cfg.tu_budget)? {
        return Err(Error::NotTotallyUnimodular);
    }
    Ok(())
}
