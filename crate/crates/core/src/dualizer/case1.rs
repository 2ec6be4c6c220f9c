//! 3-sum, case 1: crossing edges meet `V1` in `S1` or `V2` in `S2`.

use crate::error::{Error, Result};
use crate::hypergraph::{conjunction, Hypergraph};
use crate::vertex_set::{VertexId, VertexSet};

use super::combine::{expand_representative, CaseOutcome, Recurse};
use super::stats::InvariantChecks;

/// Witness sets plus the crossing edge inside `S1 ∪ S2`, when there is one.
/// Sides are oriented so that `h0 ∩ V1 = S1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Case1Context {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub h0: Option<VertexSet>,
    /// True when the sides were exchanged to orient `h0`.
    pub swapped: bool,
}

impl Case1Context {
    /// Picks the first crossing edge inside `S1 ∪ S2` in canonical order and
    /// swaps the sides if it meets `V1` in something other than `S1`.
    pub fn new(h: &Hypergraph, v1: VertexSet, v2: VertexSet, s1: VertexSet, s2: VertexSet) -> Self {
        let h0 = h
            .edges()
            .iter()
            .copied()
            .find(|e| e.is_subset(s1 | s2) && e.meets(v1) && e.meets(v2));
        match h0 {
            Some(e) if e & v1 != s1 => Case1Context {
                v1: v2,
                v2: v1,
                s1: s2,
                s2: s1,
                h0,
                swapped: true,
            },
            _ => Case1Context {
                v1,
                v2,
                s1,
                s2,
                h0,
                swapped: false,
            },
        }
    }

    /// The barred hypergraphs. `H̄1` replaces `S2` inside `V1 ∪ S2` by one
    /// vertex per class of `S2` (the part inside `h0` and the rest), `H̄2`
    /// replaces `S1` by its smallest vertex.
    pub fn barred(&self, h: &Hypergraph) -> Result<Barred> {
        let h0 = self
            .h0
            .ok_or_else(|| Error::structural("no crossing edge inside S1 ∪ S2"))?;
        let (v1, v2, s1, s2) = (self.v1, self.v2, self.s1, self.s2);
        if !h.contains_edge(h0) || !h0.is_subset(s1 | s2) || h0 & v1 != s1 || !h0.meets(s2) {
            return Err(Error::structural(format!(
                "edge {h0} does not fit S1={s1}, S2={s2}"
            )));
        }
        let classes1: Vec<(VertexId, VertexSet)> = [h0 & s2, s2 - h0]
            .into_iter()
            .filter_map(|c| Some((c.first()?, c)))
            .collect();
        let reps: VertexSet = classes1.iter().map(|&(r, _)| r).collect();
        let rep1 = s1.first().expect("S1 nonempty");

        let mut e1: Vec<VertexSet> = h.induced(v1).into_edges();
        e1.extend(h.trace_class(v2, s2).into_iter().map(|e| (e - s2) | reps));
        e1.push((h0 - s2).with(classes1[0].0));
        let mut e2: Vec<VertexSet> = h.induced(v2).into_edges();
        e2.extend(
            h.trace_class(v1, s1)
                .into_iter()
                .map(|e| (e - s1).with(rep1)),
        );
        Ok(Barred {
            h1: h.with_edges(e1).minimized(),
            classes1,
            h2: h.with_edges(e2).minimized(),
            rep1,
        })
    }
}

/// Barred hypergraphs of a case-1 split together with the vertex classes
/// that their new vertices stand for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Barred {
    pub h1: Hypergraph,
    /// `(representative, class)` for `h0 ∩ S2` and, when nonempty, `S2 ∖ h0`.
    pub classes1: Vec<(VertexId, VertexSet)>,
    pub h2: Hypergraph,
    /// Stands for all of `S1`.
    pub rep1: VertexId,
}

/// `Tr(H)` for a validated 3-sum case 1 witness.
///
/// Without a crossing edge inside `S1 ∪ S2` the dual is
/// `Tr(H_{V1∪S2}) ∧ Tr(H_{V2∪S1})`. Otherwise both sides are contracted,
/// dualized, expanded back and conjoined; a side with at most three
/// vertices (or two on the second side) is dualized directly.
pub fn solve_case1<R: Recurse + ?Sized>(
    h: &Hypergraph,
    ctx: &Case1Context,
    rec: &R,
) -> Result<CaseOutcome> {
    let (v1, v2, s1, s2) = (ctx.v1, ctx.v2, ctx.s1, ctx.s2);
    if ctx.h0.is_none() {
        let parts = [h.induced(v1 | s2), h.induced(v2 | s1)];
        let duals = rec.dual_all(&parts)?;
        return Ok(CaseOutcome {
            dual: conjunction(&duals[0], &duals[1]),
            subcase: "I",
            checks: InvariantChecks::default(),
        });
    }
    let bar = ctx.barred(h)?;
    let n1 = v1.len() + bar.classes1.len();
    let n2 = v2.len() + 1;
    let (tr1, tr2, subcase) = if n1 <= 3 {
        (rec.direct(&bar.h1)?, rec.dual(&bar.h2)?, "II-I")
    } else if n2 == 2 {
        (rec.dual(&bar.h1)?, rec.direct(&bar.h2)?, "II-II")
    } else {
        let mut d = rec.dual_all(&[bar.h1.clone(), bar.h2.clone()])?;
        let tr2 = d.pop().expect("two duals");
        (d.pop().expect("two duals"), tr2, "II-III")
    };

    let mut first = tr1.edges().to_vec();
    for &(rep, class) in &bar.classes1 {
        first = expand_representative(&first, rep, class);
    }
    let second = expand_representative(tr2.edges(), bar.rep1, s1);
    let dual = conjunction(&h.with_edges(first), &h.with_edges(second));

    let k = dual.m();
    let checks = InvariantChecks {
        barred_checks: 2,
        barred_violations: (tr1.m() > k) as u64 + (tr2.m() > k) as u64,
        ..InvariantChecks::default()
    };
    Ok(CaseOutcome {
        dual,
        subcase,
        checks,
    })
}
