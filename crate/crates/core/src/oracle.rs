//! Reference dualization by Berge multiplication, and dual-pair checking.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{minimize, Hypergraph};
use crate::vertex_set::VertexSet;

/// Resource cap for [`berge_dualize`]. The intermediate antichain is not
/// allowed to grow past `max_family` sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_family: usize,
}

impl OracleBudget {
    pub const DEFAULT_MAX_FAMILY: usize = 2_000_000;

    pub fn unlimited() -> Self {
        OracleBudget {
            max_family: usize::MAX,
        }
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_family: Self::DEFAULT_MAX_FAMILY,
        }
    }
}

/// The family of minimal transversals of some hypergraph, kept Sperner and
/// in canonical order over the source universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransversalSet {
    family: Hypergraph,
}

impl TransversalSet {
    /// Wraps a family, minimizing it first.
    pub fn new(family: Hypergraph) -> Self {
        TransversalSet {
            family: family.minimized(),
        }
    }

    pub fn family(&self) -> &Hypergraph {
        &self.family
    }

    pub fn into_family(self) -> Hypergraph {
        self.family
    }

    pub fn members(&self) -> &[VertexSet] {
        self.family.edges()
    }

    /// `k = |Tr(H)|`.
    pub fn len(&self) -> usize {
        self.family.m()
    }

    pub fn is_empty(&self) -> bool {
        self.family.m() == 0
    }

    pub fn source_universe(&self) -> usize {
        self.family.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.family.edges().iter().copied()
    }
}

impl fmt::Debug for TransversalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tr{:?}", self.family)
    }
}

impl fmt::Display for TransversalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.family, f)
    }
}

/// Outcome of [`verify_dual_pair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationResult {
    Valid,
    /// A member of the candidate family that is not a minimal transversal.
    NotMinimalTransversal(VertexSet),
    /// A minimal transversal missing from the candidate family.
    Incomplete(VertexSet),
}

impl VerificationResult {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerificationResult::Valid)
    }
}

/// Computes `Tr(h)` by Berge multiplication.
///
/// Edges are multiplied in ascending size order. After each edge the family
/// stays an antichain: members that already meet the edge are kept, the others
/// are extended by one vertex of the edge and kept only if no surviving member
/// is contained in the extension.
pub fn berge_dualize(h: &Hypergraph, budget: OracleBudget) -> Result<TransversalSet> {
    let universe = h.universe();
    let mut edges: Vec<VertexSet> = h.minimized().into_edges();
    edges.sort_by(VertexSet::canonical_cmp);

    let mut family: Vec<VertexSet> = vec![VertexSet::EMPTY];
    for &e in &edges {
        let (kept, missed): (Vec<VertexSet>, Vec<VertexSet>) =
            family.into_iter().partition(|t| t.meets(e));
        let mut next = kept.clone();
        for t in missed {
            for v in e {
                let cand = t.with(v);
                // only members containing v can be contained in cand
                if !kept.iter().any(|k| k.contains(v) && k.is_subset(cand)) {
                    next.push(cand);
                }
            }
            if next.len() > budget.max_family {
                return Err(Error::BudgetExceeded {
                    what: "oracle family",
                    limit: budget.max_family as u64,
                });
            }
        }
        family = next;
    }
    Ok(TransversalSet {
        family: minimize(universe, family),
    })
}

/// Checks whether `x` equals `Tr(h)`, reporting a witness otherwise.
pub fn verify_dual_pair(
    h: &Hypergraph,
    x: &Hypergraph,
    budget: OracleBudget,
) -> Result<VerificationResult> {
    if let Some(&bad) = x.edges().iter().find(|&&t| !h.is_minimal_transversal(t)) {
        return Ok(VerificationResult::NotMinimalTransversal(bad));
    }
    let dual = berge_dualize(h, budget)?;
    if let Some(missing) = dual.iter().find(|t| !x.contains_edge(*t)) {
        return Ok(VerificationResult::Incomplete(missing));
    }
    Ok(VerificationResult::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vset;

    fn hg(n: usize, lists: &[&[usize]]) -> Hypergraph {
        let edges = lists
            .iter()
            .map(|l| l.iter().map(|v| v - 1).collect())
            .collect();
        Hypergraph::new(n, edges).unwrap()
    }

    fn dual(h: &Hypergraph) -> Vec<VertexSet> {
        berge_dualize(h, OracleBudget::default())
            .unwrap()
            .members()
            .to_vec()
    }

    fn h0() -> Hypergraph {
        hg(5, &[&[1, 4, 5], &[1, 2, 5], &[2, 3, 5], &[3, 4, 5]])
    }

    #[test]
    fn trivial_conventions() {
        assert_eq!(dual(&Hypergraph::empty(3)), vec![VertexSet::EMPTY]);
        assert!(dual(&Hypergraph::with_empty_edge(3)).is_empty());
    }

    #[test]
    fn small_duals() {
        assert_eq!(dual(&h0()), vec![vset![4], vset![0, 2], vset![1, 3]]);
        assert_eq!(
            dual(&hg(4, &[&[1, 2], &[1, 3], &[3, 4]])),
            vec![vset![0, 2], vset![0, 3], vset![1, 2]]
        );
        assert_eq!(dual(&hg(2, &[&[1], &[2]])), vec![vset![0, 1]]);
    }

    #[test]
    fn involution_on_c5() {
        let c5 = hg(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]]);
        let tr = berge_dualize(&c5, OracleBudget::default()).unwrap();
        let back = berge_dualize(tr.family(), OracleBudget::default()).unwrap();
        assert_eq!(back.family(), &c5.minimized());
    }

    #[test]
    fn budget_is_enforced() {
        // perfect matching on 2r vertices has 2^r minimal transversals
        let lists: Vec<Vec<usize>> = (0..8).map(|i| vec![2 * i + 1, 2 * i + 2]).collect();
        let refs: Vec<&[usize]> = lists.iter().map(|l| l.as_slice()).collect();
        let h = hg(16, &refs);
        let err = berge_dualize(&h, OracleBudget { max_family: 100 }).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert_eq!(
            berge_dualize(&h, OracleBudget::default()).unwrap().len(),
            256
        );
    }

    #[test]
    fn verification_witnesses() {
        let h = h0();
        let good = hg(5, &[&[5], &[1, 3], &[2, 4]]);
        let b = OracleBudget::default();
        assert_eq!(
            verify_dual_pair(&h, &good, b).unwrap(),
            VerificationResult::Valid
        );
        assert_eq!(
            verify_dual_pair(&h, &hg(5, &[&[5]]), b).unwrap(),
            VerificationResult::Incomplete(vset![0, 2])
        );
        assert_eq!(
            verify_dual_pair(&h, &hg(5, &[&[5], &[1, 2, 3]]), b).unwrap(),
            VerificationResult::NotMinimalTransversal(vset![0, 1, 2])
        );
        assert!(verify_dual_pair(&hg(1, &[&[1]]), &hg(1, &[&[1]]), b)
            .unwrap()
            .is_valid());
    }
}
