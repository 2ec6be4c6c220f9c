use crate::error::Result;
use crate::hypergraph::{conjunction, minimize, Hypergraph};
use crate::oracle::{berge_dualize, OracleBudget};
use crate::vertex_set::{VertexId, VertexSet};

use super::stats::InvariantChecks;

/// How a combiner obtains the duals of its subproblems.
pub trait Recurse: Sync {
    /// Duals of the given subproblems, in order. May run them concurrently.
    fn dual_all(&self, parts: &[Hypergraph]) -> Result<Vec<Hypergraph>>;

    /// Dual of a subproblem small enough to answer without recursing.
    fn direct(&self, part: &Hypergraph) -> Result<Hypergraph>;

    fn dual(&self, part: &Hypergraph) -> Result<Hypergraph> {
        Ok(self
            .dual_all(std::slice::from_ref(part))?
            .pop()
            .expect("one dual per part"))
    }
}

/// Answers every subproblem with Berge multiplication.
#[derive(Clone, Copy, Debug, Default)]
pub struct OracleRecurse {
    pub budget: OracleBudget,
}

impl Recurse for OracleRecurse {
    fn dual_all(&self, parts: &[Hypergraph]) -> Result<Vec<Hypergraph>> {
        parts.iter().map(|p| self.direct(p)).collect()
    }

    fn direct(&self, part: &Hypergraph) -> Result<Hypergraph> {
        Ok(berge_dualize(part, self.budget)?.into_family())
    }
}

/// Result of a 3-sum combiner: the dual, the subcase taken and the invariant
/// checks performed along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    pub dual: Hypergraph,
    pub subcase: &'static str,
    pub checks: InvariantChecks,
}

/// Disjoint conjunction of duals over disjoint supports.
pub fn combine_1sum(tr_a: &Hypergraph, tr_b: &Hypergraph) -> Hypergraph {
    debug_assert!(tr_a.support().is_disjoint(tr_b.support()));
    conjunction(tr_a, tr_b)
}

/// `Tr(H_V1) ∧ Tr(H_{V2 ∪ S})`.
pub fn combine_2sum(tr1: &Hypergraph, tr2: &Hypergraph) -> Hypergraph {
    conjunction(tr1, tr2)
}

/// All pairwise unions, without minimization.
pub(crate) fn unions(a: &[VertexSet], b: &[VertexSet], out: &mut Vec<VertexSet>) {
    for &x in a {
        for &y in b {
            out.push(x | y);
        }
    }
}

/// Members containing `rep` are replaced by one copy per `u ∈ class`, with
/// `rep` swapped for `u`.
pub(crate) fn expand_representative(
    family: &[VertexSet],
    rep: VertexId,
    class: VertexSet,
) -> Vec<VertexSet> {
    let mut out = Vec::with_capacity(family.len());
    for &t in family {
        if t.contains(rep) {
            let base = t.without(rep);
            out.extend(class.iter().map(|u| base.with(u)));
        } else {
            out.push(t);
        }
    }
    out
}

/// Keeps the candidates that are minimal transversals of `h`, deduplicated
/// and in canonical order.
pub(crate) fn filter_minimal(h: &Hypergraph, candidates: Vec<VertexSet>) -> Hypergraph {
    minimize(
        h.universe(),
        candidates
            .into_iter()
            .filter(|&t| h.is_minimal_transversal(t)),
    )
}

/// Counts whether every member of `guaranteed` appears in `result`.
pub(crate) fn check_subset(
    result: &Hypergraph,
    guaranteed: &[VertexSet],
    checks: &mut InvariantChecks,
) {
    checks.subset_checks += 1;
    if guaranteed.iter().any(|&t| !result.contains_edge(t)) {
        checks.subset_violations += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vset;

    fn fam(n: usize, lists: &[&[usize]]) -> Hypergraph {
        let edges = lists
            .iter()
            .map(|l| l.iter().map(|v| v - 1).collect())
            .collect();
        Hypergraph::new(n, edges).unwrap().minimized()
    }

    #[test]
    fn one_sum_examples() {
        assert_eq!(
            combine_1sum(&fam(4, &[&[1], &[2]]), &fam(4, &[&[3], &[4]])),
            fam(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );
        let x = fam(4, &[&[3], &[4]]);
        assert_eq!(combine_1sum(&Hypergraph::with_empty_edge(4), &x), x);
        assert_eq!(
            combine_1sum(&fam(3, &[&[1]]), &fam(3, &[&[2, 3]])),
            fam(3, &[&[1, 2, 3]])
        );
    }

    #[test]
    fn two_sum_example() {
        // H = {{1,2},{1,3},{3,4}}, V1 = {1,2}, S = {1}
        let tr1 = fam(4, &[&[1], &[2]]);
        let tr2 = fam(4, &[&[3], &[1, 4]]);
        assert_eq!(
            combine_2sum(&tr1, &tr2),
            fam(4, &[&[1, 3], &[1, 4], &[2, 3]])
        );
    }

    #[test]
    fn representative_expansion() {
        let out = expand_representative(&[vset![0, 5], vset![1]], 5, vset![5, 6, 7]);
        assert_eq!(out, vec![vset![0, 5], vset![0, 6], vset![0, 7], vset![1]]);
    }

    #[test]
    fn filter_keeps_only_minimal() {
        let h = fam(4, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]]);
        let out = filter_minimal(
            &h,
            vec![
                vset![0, 2],
                vset![0, 1, 2],
                vset![0],
                vset![1, 3],
                vset![0, 2],
            ],
        );
        assert_eq!(out.edges(), &[vset![0, 2], vset![1, 3]]);
    }
}
