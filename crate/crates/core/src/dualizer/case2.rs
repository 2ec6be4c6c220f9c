//! 3-sum, cases 2 and 3: crossing edges meet `V1` in one of a few fixed
//! traces built from disjoint sets inside `V1`.
//!
//! Case 2 uses traces `S0 ∪ S1` and `S0 ∪ S2`; case 3 uses `S1`, `S2` and
//! `S1 ∪ S2`. When some edge lies inside the union of the S-sets and is not
//! the union itself, both cases run the same engine (case 3 with `S0 = ∅`):
//! candidates are generated from the duals of the pieces and filtered by
//! minimality against `H`.

use crate::error::{Error, Result};
use crate::hypergraph::{conjunction, minimize, Hypergraph};
use crate::vertex_set::VertexSet;

use super::combine::{
    check_subset, expand_representative, filter_minimal, unions, CaseOutcome, Recurse,
};
use super::stats::InvariantChecks;

/// Witness of a case-2 or case-3 split. For case 3, `s0` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Case2Context {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub s0: VertexSet,
    pub s1: VertexSet,
    pub s2: VertexSet,
}

/// The edge partition `H = H1 ∪ H2 ∪ F0 ∪ F1 ∪ F2` read off a context.
/// `F1` holds crossing edges with trace `S0 ∪ S2`, `F2` those with trace
/// `S0 ∪ S1`, and `F0` (case 3 only) those with trace `S1 ∪ S2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    pub h1: Hypergraph,
    pub h2: Hypergraph,
    pub f0: Vec<VertexSet>,
    pub f1: Vec<VertexSet>,
    pub f2: Vec<VertexSet>,
    /// Edges inside `S0 ∪ S1 ∪ S2`.
    pub p: Vec<VertexSet>,
}

impl Case2Context {
    pub fn union(&self) -> VertexSet {
        self.s0 | self.s1 | self.s2
    }

    pub fn partition(&self, h: &Hypergraph) -> Result<EdgePartition> {
        let (v1, v2) = (self.v1, self.v2);
        let (a, b) = (self.s0 | self.s2, self.s0 | self.s1);
        let mut f0 = Vec::new();
        let mut f1 = Vec::new();
        let mut f2 = Vec::new();
        for &e in h.edges() {
            if !(e.meets(v1) && e.meets(v2)) {
                continue;
            }
            let t = e & v1;
            if t == a {
                f1.push(e);
            } else if t == b {
                f2.push(e);
            } else if self.s0.is_empty() && t == self.s1 | self.s2 {
                f0.push(e);
            } else {
                return Err(Error::structural(format!(
                    "crossing edge {e} has an unexpected trace"
                )));
            }
        }
        Ok(EdgePartition {
            h1: h.induced(v1),
            h2: h.induced(v2),
            f0,
            f1,
            f2,
            p: h.induced(self.union()).into_edges(),
        })
    }

    /// Which S-sets `w` meets, as a bit mask over indices 0, 1, 2.
    fn eta(&self, w: VertexSet) -> u8 {
        (w.meets(self.s0) as u8) | (w.meets(self.s1) as u8) << 1 | (w.meets(self.s2) as u8) << 2
    }
}

/// `Tr(H)` for a validated 3-sum case 2 witness.
pub fn solve_case2<R: Recurse + ?Sized>(
    h: &Hypergraph,
    ctx: &Case2Context,
    rec: &R,
) -> Result<CaseOutcome> {
    if ctx.s0.is_empty() {
        return Err(Error::invalid("case 2 needs a nonempty S0"));
    }
    solve(h, ctx, rec, false)
}

/// `Tr(H)` for a validated 3-sum case 3 witness given as `(V1, V2, S1, S2)`.
pub fn solve_case3<R: Recurse + ?Sized>(
    h: &Hypergraph,
    ctx: &Case2Context,
    rec: &R,
) -> Result<CaseOutcome> {
    if !ctx.s0.is_empty() {
        return Err(Error::invalid("case 3 has no S0"));
    }
    solve(h, ctx, rec, true)
}

fn solve<R: Recurse + ?Sized>(
    h: &Hypergraph,
    ctx: &Case2Context,
    rec: &R,
    case3: bool,
) -> Result<CaseOutcome> {
    let part = ctx.partition(h)?;
    let s = ctx.union();
    let outcome = |dual, subcase| {
        Ok(CaseOutcome {
            dual,
            subcase,
            checks: InvariantChecks::default(),
        })
    };

    if part.p.is_empty() {
        let d = rec.dual_all(&[part.h1.clone(), h.induced(s | ctx.v2)])?;
        return outcome(conjunction(&d[0], &d[1]), "I");
    }
    if part.p == [s] {
        if case3 || part.h1.m() >= 2 {
            let dual = contract_route(h, ctx, &part, rec)?;
            return outcome(dual, if case3 { "II" } else { "II-I" });
        }
        // H1 = {S}: a transversal either takes one vertex of S0 plus a
        // transversal of H2, or avoids S0 entirely
        let rest = h.project(h.support() - ctx.s0);
        let d = rec.dual_all(&[part.h2.clone(), rest])?;
        let mut out: Vec<VertexSet> = Vec::new();
        for v in ctx.s0 {
            out.extend(d[0].edges().iter().map(|t| t.with(v)));
        }
        out.extend_from_slice(d[1].edges());
        return outcome(minimize(h.universe(), out), "II-II");
    }
    if !part.f0.is_empty() {
        return Err(Error::structural(
            "edges with trace S1 ∪ S2 next to a proper edge inside S1 ∪ S2",
        ));
    }

    let tr_h1 = rec.dual(&part.h1)?;
    let mut groups: [Vec<VertexSet>; 3] = Default::default();
    let mut mixed = Vec::new();
    for &t in tr_h1.edges() {
        match ctx.eta(t) {
            0b001 => groups[0].push(t),
            0b010 => groups[1].push(t),
            0b100 => groups[2].push(t),
            _ => mixed.push(t),
        }
    }
    if !mixed.is_empty() || !groups[0].is_empty() {
        let dual = route_three(h, ctx, &part, rec, &groups, &mixed)?;
        let subcase = if mixed.is_empty() { "IV-a" } else { "III" };
        return Ok(CaseOutcome {
            dual: dual.0,
            subcase,
            checks: dual.1,
        });
    }
    let (dual, checks) = route_pivot(h, ctx, &part, rec, &groups)?;
    Ok(CaseOutcome {
        dual,
        subcase: "IV-b",
        checks,
    })
}

/// Replaces each nonempty S-set by its smallest vertex inside
/// `H_{S ∪ V2}`, dualizes that and `H1`, expands and conjoins.
fn contract_route<R: Recurse + ?Sized>(
    h: &Hypergraph,
    ctx: &Case2Context,
    part: &EdgePartition,
    rec: &R,
) -> Result<Hypergraph> {
    let mut g = h.induced(ctx.union() | ctx.v2);
    let mut reps = Vec::new();
    for s in [ctx.s0, ctx.s1, ctx.s2] {
        if s.is_empty() {
            continue;
        }
        let (contracted, rep) = g.contract(s, |_| true)?;
        g = contracted;
        reps.push((rep, s));
    }
    let d = rec.dual_all(&[part.h1.clone(), g.minimized()])?;
    let mut expanded = d[1].edges().to_vec();
    for (rep, s) in reps {
        expanded = expand_representative(&expanded, rep, s);
    }
    Ok(conjunction(&d[0], &h.with_edges(expanded)))
}

/// `{T ∪ {v} : T ∈ group, v ∈ extra}`.
fn extend_each(group: &[VertexSet], extra: VertexSet, out: &mut Vec<VertexSet>) {
    for &t in group {
        out.extend(extra.iter().map(|v| t.with(v)));
    }
}

/// `Min(F^{V2} ∪ H2)`.
fn f_prime(h: &Hypergraph, f: &[VertexSet], h2: &Hypergraph, v2: VertexSet) -> Hypergraph {
    minimize(
        h.universe(),
        f.iter().map(|&e| e & v2).chain(h2.edges().iter().copied()),
    )
}

/// Candidates from `Tr(H1)`, `Tr(H2)`, `Tr(F1')` and `Tr(F2')`.
fn route_three<R: Recurse + ?Sized>(
    h: &Hypergraph,
    ctx: &Case2Context,
    part: &EdgePartition,
    rec: &R,
    groups: &[Vec<VertexSet>; 3],
    mixed: &[VertexSet],
) -> Result<(Hypergraph, InvariantChecks)> {
    let f1p = f_prime(h, &part.f1, &part.h2, ctx.v2);
    let f2p = f_prime(h, &part.f2, &part.h2, ctx.v2);
    let d = rec.dual_all(&[part.h2.clone(), f1p, f2p])?;
    let (tr_h2, tr_f1, tr_f2) = (d[0].edges(), d[1].edges(), d[2].edges());

    let mut left: Vec<VertexSet> = groups[0].iter().chain(mixed).copied().collect();
    extend_each(&groups[1], ctx.s0 | ctx.s2, &mut left);
    extend_each(&groups[2], ctx.s0 | ctx.s1, &mut left);
    let mut cand = Vec::new();
    unions(&left, tr_h2, &mut cand);
    unions(&groups[1], tr_f1, &mut cand);
    unions(&groups[2], tr_f2, &mut cand);
    let dual = filter_minimal(h, cand);

    let mut guaranteed = Vec::new();
    let base: Vec<VertexSet> = groups[0].iter().chain(mixed).copied().collect();
    unions(&base, tr_h2, &mut guaranteed);
    unions(&groups[1], tr_f1, &mut guaranteed);
    unions(&groups[2], tr_f2, &mut guaranteed);
    let mut checks = InvariantChecks::default();
    check_subset(&dual, &guaranteed, &mut checks);
    Ok((dual, checks))
}

/// Candidates from `Tr(H1)`, `Tr(F1*)` and `Tr(F2')`, where `F1*` replaces
/// the `V1`-part of each `F1` edge by a pivot vertex missing from some edge
/// inside the S-sets.
fn route_pivot<R: Recurse + ?Sized>(
    h: &Hypergraph,
    ctx: &Case2Context,
    part: &EdgePartition,
    rec: &R,
    groups: &[Vec<VertexSet>; 3],
) -> Result<(Hypergraph, InvariantChecks)> {
    let missing_somewhere = |v| part.p.iter().any(|p| !p.contains(v));
    let primary = (ctx.s0 | ctx.s2).iter().find(|&v| missing_somewhere(v));
    // orient so the pivot lies in S0 ∪ S2
    let (pivot, s1, s2, f1, f2, t1, t2) = match primary {
        Some(v) => (
            v, ctx.s1, ctx.s2, &part.f1, &part.f2, &groups[1], &groups[2],
        ),
        None => {
            let v = ctx
                .s1
                .iter()
                .find(|&v| missing_somewhere(v))
                .ok_or_else(|| {
                    Error::structural("no pivot vertex although S-sets hold a proper edge")
                })?;
            (
                v, ctx.s2, ctx.s1, &part.f2, &part.f1, &groups[2], &groups[1],
            )
        }
    };
    let f1_star = h.with_edges(
        f1.iter()
            .map(|&e| (e & ctx.v2).with(pivot))
            .chain(part.h2.edges().iter().copied())
            .collect(),
    );
    let f2p = f_prime(h, f2, &part.h2, ctx.v2);
    let d = rec.dual_all(&[f1_star.minimized(), f2p])?;
    let (tr_star, tr_f2) = (d[0].edges(), d[1].edges());

    let (with_pivot, without_pivot): (Vec<VertexSet>, Vec<VertexSet>) =
        tr_star.iter().partition(|t| t.contains(pivot));
    let mut right: Vec<VertexSet> = with_pivot.iter().map(|t| t.without(pivot)).collect();
    right.extend_from_slice(&without_pivot);

    let mut left = Vec::new();
    extend_each(t1, ctx.s0 | s2, &mut left);
    extend_each(t2, ctx.s0 | s1, &mut left);
    let mut cand = Vec::new();
    unions(&left, &right, &mut cand);
    unions(t1, &without_pivot, &mut cand);
    unions(t2, tr_f2, &mut cand);
    let dual = filter_minimal(h, cand);

    let mut guaranteed = Vec::new();
    unions(t1, tr_star, &mut guaranteed);
    unions(t2, tr_f2, &mut guaranteed);
    let mut checks = InvariantChecks::default();
    check_subset(&dual, &guaranteed, &mut checks);
    Ok((dual, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{validate, DecompositionCase};
    use crate::dualizer::combine::OracleRecurse;
    use crate::oracle::{berge_dualize, OracleBudget};
    use crate::vset;

    fn hg(n: usize, lists: &[&[usize]]) -> Hypergraph {
        let edges = lists
            .iter()
            .map(|l| l.iter().map(|v| v - 1).collect())
            .collect();
        Hypergraph::new(n, edges).unwrap().minimized()
    }

    fn oracle(h: &Hypergraph) -> Hypergraph {
        berge_dualize(h, OracleBudget::default())
            .unwrap()
            .into_family()
    }

    #[test]
    fn case2_without_inner_edges() {
        let h = hg(6, &[&[2, 3, 4], &[5, 6], &[1, 3, 5], &[1, 2, 6]]);
        let ctx = Case2Context {
            v1: vset![0, 1, 2, 3],
            v2: vset![4, 5],
            s0: vset![0],
            s1: vset![1],
            s2: vset![2],
        };
        let out = solve_case2(&h, &ctx, &OracleRecurse::default()).unwrap();
        assert_eq!(out.subcase, "I");
        assert_eq!(out.dual, oracle(&h));
    }

    #[test]
    fn case2_single_inner_edge_equals_closed_form() {
        // H1 = {S0 ∪ S1 ∪ S2}
        let h = hg(5, &[&[1, 2, 3], &[1, 3, 4], &[1, 2, 5], &[4, 5]]);
        let ctx = Case2Context {
            v1: vset![0, 1, 2],
            v2: vset![3, 4],
            s0: vset![0],
            s1: vset![1],
            s2: vset![2],
        };
        let case = DecompositionCase::ThreeSumCase2 {
            v1: ctx.v1,
            v2: ctx.v2,
            s0: ctx.s0,
            s1: ctx.s1,
            s2: ctx.s2,
        };
        assert!(validate(&h, &case));
        let out = solve_case2(&h, &ctx, &OracleRecurse::default()).unwrap();
        assert_eq!(out.subcase, "II-II");
        assert_eq!(out.dual, oracle(&h));
    }

    #[test]
    fn case3_example() {
        let h = hg(5, &[&[1, 2, 3], &[1, 4], &[2, 5], &[4, 5]]);
        let ctx = Case2Context {
            v1: vset![0, 1, 2],
            v2: vset![3, 4],
            s0: VertexSet::EMPTY,
            s1: vset![0],
            s2: vset![1],
        };
        let out = solve_case3(&h, &ctx, &OracleRecurse::default()).unwrap();
        assert_eq!(out.dual, oracle(&h));
    }

    #[test]
    fn unexpected_trace_is_structural() {
        let h = hg(4, &[&[1, 3], &[2, 4], &[1, 2, 3]]);
        let ctx = Case2Context {
            v1: vset![0, 1],
            v2: vset![2, 3],
            s0: vset![0],
            s1: vset![1],
            s2: vset![1],
        };
        assert!(matches!(
            solve_case2(&h, &ctx, &OracleRecurse::default()),
            Err(Error::Structural(_))
        ));
    }
}
