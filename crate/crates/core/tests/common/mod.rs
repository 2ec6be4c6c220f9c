//! Brute-force references and instance generators shared by the integration
//! tests. The brute-force functions never call into the library's dualizers.

#![allow(dead_code)]

pub mod cases;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tuve_core::network::generate_network_instance;
use tuve_core::{Hypergraph, TuMatrix, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn hg(n: usize, lists: &[&[usize]]) -> Hypergraph {
    let edges = lists
        .iter()
        .map(|l| l.iter().map(|v| v - 1).collect())
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// Every subset of the universe that meets all edges and loses that property
/// when any vertex is dropped. Exponential in the universe size.
pub fn brute_force_dual(h: &Hypergraph) -> Vec<VertexSet> {
    let n = h.universe();
    assert!(n <= 20, "brute force limited to 20 vertices");
    let hits = |t: VertexSet| h.edges().iter().all(|e| e.meets(t));
    let mut out: Vec<VertexSet> = (0u128..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&t| hits(t) && t.iter().all(|v| !hits(t.without(v))))
        .collect();
    out.sort_by(VertexSet::canonical_cmp);
    out
}

/// Inclusion-minimal edges, by pairwise comparison.
pub fn brute_force_min(h: &Hypergraph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    for &e in h.edges() {
        if !h.edges().iter().any(|&f| f.is_proper_subset(e)) && !out.contains(&e) {
            out.push(e);
        }
    }
    out.sort_by(VertexSet::canonical_cmp);
    out
}

/// Minimal 0/1 solutions of `Ax >= 1`, enumerated over all of `{0,1}^n`.
pub fn brute_force_vertices(a: &TuMatrix) -> Vec<Vec<u8>> {
    let n = a.cols();
    let feasible =
        |x: u32| (0..a.rows()).all(|r| (0..n).any(|c| a.get(r, c) == 1 && x >> c & 1 == 1));
    let mut out: Vec<Vec<u8>> = (0u32..1 << n)
        .filter(|&x| feasible(x) && (0..n).all(|c| x >> c & 1 == 0 || !feasible(x & !(1 << c))))
        .map(|x| (0..n).map(|c| (x >> c & 1) as u8).collect())
        .collect();
    out.sort();
    out
}

/// A random Sperner hypergraph on `n` vertices with at most `m` edges.
pub fn random_sperner(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Hypergraph {
    let density = rng.gen_range(0.2..0.7);
    let edges: Vec<VertexSet> = (0..m)
        .map(|_| {
            let mut e: VertexSet = (0..n).filter(|_| rng.gen_bool(density)).collect();
            if e.is_empty() {
                e.insert(rng.gen_range(0..n));
            }
            e
        })
        .collect();
    Hypergraph::new(n, edges).unwrap().minimized()
}

/// Network matrices from the generator, with the seeds that produced them.
pub fn network_corpus(count: usize, max_tree: usize, max_paths: usize) -> Vec<(u64, TuMatrix)> {
    let mut pick = rng(0x5eed);
    (0..count as u64)
        .map(|seed| {
            let tree = pick.gen_range(2..=max_tree);
            let paths = pick.gen_range(1..=max_paths);
            (seed, generate_network_instance(seed, tree, paths).unwrap())
        })
        .collect()
}
