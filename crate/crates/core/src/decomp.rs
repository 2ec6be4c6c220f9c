//! Discovery and exact validation of the structural decomposition rules for
//! Sperner, irredundant hypergraphs.
//!
//! [`validate`] checks every condition of a rule verbatim. [`detect`] searches
//! for a rule in a fixed priority order and only ever returns candidates that
//! pass [`validate`]; when the search space exceeds its budget the bipartition
//! search switches to a heuristic and may miss decompositions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::matrix::TuMatrix;
use crate::network::{recognize_network_or_transpose, NetworkBudget, TreeRepresentation};
use crate::par;
use crate::vertex_set::{VertexId, VertexSet};

/// `{{1,4,5},{1,2,5},{2,3,5},{3,4,5}}` with 0-based ids.
pub fn h0_edges() -> [VertexSet; 4] {
    [
        VertexSet::from_bits(0b11001),
        VertexSet::from_bits(0b10011),
        VertexSet::from_bits(0b10110),
        VertexSet::from_bits(0b11100),
    ]
}

/// Which rule applies, with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionCase {
    /// The incidence matrix (or its transpose) is a network matrix.
    NetworkBase {
        transposed: bool,
        tree: TreeRepresentation,
    },
    /// `perm[i]` is the vertex playing the role of vertex `i` of `H0`.
    H0Base {
        perm: [VertexId; 5],
    },
    SingletonEdge {
        vertex: VertexId,
    },
    DegreeOneVertex {
        vertex: VertexId,
        edge: VertexSet,
    },
    IdenticalVertices {
        kept: VertexId,
        dropped: VertexId,
    },
    OneSum {
        v1: VertexSet,
        v2: VertexSet,
    },
    TwoSum {
        v1: VertexSet,
        v2: VertexSet,
        s: VertexSet,
    },
    ThreeSumCase1 {
        v1: VertexSet,
        v2: VertexSet,
        s1: VertexSet,
        s2: VertexSet,
    },
    ThreeSumCase2 {
        v1: VertexSet,
        v2: VertexSet,
        s0: VertexSet,
        s1: VertexSet,
        s2: VertexSet,
    },
    ThreeSumCase3 {
        v1: VertexSet,
        v2: VertexSet,
        s1: VertexSet,
        s2: VertexSet,
    },
    NotFound,
}

impl DecompositionCase {
    pub fn tag(&self) -> &'static str {
        match self {
            DecompositionCase::NetworkBase { .. } => "NetworkBase",
            DecompositionCase::H0Base { .. } => "H0Base",
            DecompositionCase::SingletonEdge { .. } => "SingletonEdge",
            DecompositionCase::DegreeOneVertex { .. } => "DegreeOneVertex",
            DecompositionCase::IdenticalVertices { .. } => "IdenticalVertices",
            DecompositionCase::OneSum { .. } => "OneSum",
            DecompositionCase::TwoSum { .. } => "TwoSum",
            DecompositionCase::ThreeSumCase1 { .. } => "ThreeSumCase1",
            DecompositionCase::ThreeSumCase2 { .. } => "ThreeSumCase2",
            DecompositionCase::ThreeSumCase3 { .. } => "ThreeSumCase3",
            DecompositionCase::NotFound => "NotFound",
        }
    }

    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            DecompositionCase::OneSum { .. }
                | DecompositionCase::TwoSum { .. }
                | DecompositionCase::ThreeSumCase1 { .. }
                | DecompositionCase::ThreeSumCase2 { .. }
                | DecompositionCase::ThreeSumCase3 { .. }
        )
    }
}

impl fmt::Display for DecompositionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DecompositionCase::*;
        write!(f, "{}", self.tag())?;
        match self {
            NetworkBase { transposed, .. } => write!(f, " transposed={transposed}"),
            H0Base { perm } => {
                let ids: Vec<String> = perm.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, " map=({})", ids.join(" "))
            }
            SingletonEdge { vertex } => write!(f, " vertex={}", vertex + 1),
            DegreeOneVertex { vertex, edge } => write!(f, " vertex={} edge={edge}", vertex + 1),
            IdenticalVertices { kept, dropped } => {
                write!(f, " kept={} dropped={}", kept + 1, dropped + 1)
            }
            OneSum { v1, v2 } => write!(f, " V1={v1} V2={v2}"),
            TwoSum { v1, v2, s } => write!(f, " V1={v1} V2={v2} S={s}"),
            ThreeSumCase1 { v1, v2, s1, s2 } | ThreeSumCase3 { v1, v2, s1, s2 } => {
                write!(f, " V1={v1} V2={v2} S1={s1} S2={s2}")
            }
            ThreeSumCase2 { v1, v2, s0, s1, s2 } => {
                write!(f, " V1={v1} V2={v2} S0={s0} S1={s1} S2={s2}")
            }
            NotFound => Ok(()),
        }
    }
}

/// Search limits for [`detect`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetectBudget {
    /// Bipartitions are enumerated exhaustively while their number stays
    /// within this cap.
    pub max_candidates: u64,
    pub network: NetworkBudget,
    /// Whether to look for network base cases at all.
    pub check_network: bool,
    pub parallel: bool,
}

impl Default for DetectBudget {
    fn default() -> Self {
        DetectBudget {
            max_candidates: 1 << 14,
            network: NetworkBudget::default(),
            check_network: true,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

/// Finds the first applicable rule in priority order: identical vertices,
/// singleton edge, degree-one vertex, `H0`, network, 1-sum, 2-sum, then the
/// three 3-sum cases. `h` should be Sperner; vertices outside its support are
/// ignored.
pub fn detect(h: &Hypergraph, budget: &DetectBudget) -> DecompositionCase {
    detect_with(h, budget, None)
}

pub(crate) fn detect_with(
    h: &Hypergraph,
    budget: &DetectBudget,
    network_errors: Option<&mut u64>,
) -> DecompositionCase {
    if h.is_trivial() {
        return DecompositionCase::NotFound;
    }
    if let Some(c) = detect_reduction(h) {
        return c;
    }
    if let Some(perm) = h0_isomorphism(h) {
        return DecompositionCase::H0Base { perm };
    }
    if budget.check_network {
        match network_case(h, budget.network) {
            Ok(Some(c)) => return c,
            Ok(None) => {}
            Err(_) => {
                if let Some(count) = network_errors {
                    *count += 1;
                }
            }
        }
    }
    if let Some(c) = find_one_sum(h) {
        return c;
    }
    find_bipartition_case(h, budget).unwrap_or(DecompositionCase::NotFound)
}

/// Identical vertices, a singleton edge or a degree-one vertex, in that order.
pub(crate) fn detect_reduction(h: &Hypergraph) -> Option<DecompositionCase> {
    if let Some(c) = find_identical_vertices(h) {
        return Some(c);
    }
    if let Some(&e) = h.edges().iter().find(|e| e.len() == 1) {
        return Some(DecompositionCase::SingletonEdge {
            vertex: e.first().expect("singleton"),
        });
    }
    find_degree_one(h)
}

fn find_identical_vertices(h: &Hypergraph) -> Option<DecompositionCase> {
    let support = h.support();
    let words = h.m().div_ceil(64);
    let mut seen: std::collections::HashMap<Vec<u64>, VertexId> = std::collections::HashMap::new();
    for v in support {
        let mut sig = vec![0u64; words];
        for (i, e) in h.edges().iter().enumerate() {
            if e.contains(v) {
                sig[i / 64] |= 1 << (i % 64);
            }
        }
        if let Some(&kept) = seen.get(&sig) {
            return Some(DecompositionCase::IdenticalVertices { kept, dropped: v });
        }
        seen.insert(sig, v);
    }
    None
}

fn find_degree_one(h: &Hypergraph) -> Option<DecompositionCase> {
    h.support().iter().find_map(|v| {
        let mut it = h.edges().iter().filter(|e| e.contains(v));
        let first = *it.next()?;
        it.next()
            .is_none()
            .then_some(DecompositionCase::DegreeOneVertex {
                vertex: v,
                edge: first,
            })
    })
}

/// A bijection mapping `H0` onto `h`, if any.
pub fn h0_isomorphism(h: &Hypergraph) -> Option<[VertexId; 5]> {
    let support: Vec<VertexId> = h.support().to_vec();
    if support.len() != 5 || h.m() != 4 {
        return None;
    }
    let target: BTreeSet<u128> = h.edges().iter().map(|e| e.bits()).collect();
    let mut perm = [0usize; 5];
    let mut used = [false; 5];
    fn rec(
        depth: usize,
        support: &[VertexId],
        perm: &mut [usize; 5],
        used: &mut [bool; 5],
        target: &BTreeSet<u128>,
    ) -> bool {
        if depth == 5 {
            return h0_edges().iter().all(|e| {
                let mapped: VertexSet = e.iter().map(|i| support[perm[i]]).collect();
                target.contains(&mapped.bits())
            });
        }
        for j in 0..5 {
            if !used[j] {
                used[j] = true;
                perm[depth] = j;
                if rec(depth + 1, support, perm, used, target) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    rec(0, &support, &mut perm, &mut used, &target).then(|| perm.map(|j| support[j]))
}

fn network_case(h: &Hypergraph, budget: NetworkBudget) -> Result<Option<DecompositionCase>> {
    let compact = h.canonicalize().0;
    let a = TuMatrix::from_hypergraph(&compact)?;
    Ok(recognize_network_or_transpose(&a, budget)?
        .map(|(transposed, tree)| DecompositionCase::NetworkBase { transposed, tree }))
}

fn find_one_sum(h: &Hypergraph) -> Option<DecompositionCase> {
    let support = h.support();
    let start = support.first()?;
    let mut comp = VertexSet::singleton(start);
    loop {
        let grown = h
            .edges()
            .iter()
            .filter(|e| e.meets(comp))
            .fold(comp, |acc, &e| acc | e);
        if grown == comp {
            break;
        }
        comp = grown;
    }
    if comp == support {
        return None;
    }
    let case = DecompositionCase::OneSum {
        v1: comp,
        v2: support - comp,
    };
    debug_assert!(validate(h, &case));
    Some(case)
}

/// Crossing edges' traces on `v1` and `v2`.
fn crossing(h: &Hypergraph, v1: VertexSet, v2: VertexSet) -> Vec<(VertexSet, VertexSet)> {
    h.edges()
        .iter()
        .filter(|e| e.meets(v1) && e.meets(v2))
        .map(|&e| (e & v1, e & v2))
        .collect()
}

fn distinct(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(VertexSet::canonical_cmp);
    sets.dedup();
    sets
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Level {
    Two,
    ThreeOne,
    ThreeTwo,
    ThreeThree,
}

fn find_bipartition_case(h: &Hypergraph, budget: &DetectBudget) -> Option<DecompositionCase> {
    let support = h.support();
    let verts: Vec<VertexId> = support.to_vec();
    let n = verts.len();
    if n < 2 {
        return None;
    }
    let exhaustive = n < 63 && (1u64 << n) - 2 <= budget.max_candidates;
    let candidates: Vec<VertexSet> = if exhaustive {
        Vec::new()
    } else {
        heuristic_sides(h, &verts, budget.max_candidates)
    };
    let total = if exhaustive {
        (1u64 << n) - 2
    } else {
        candidates.len() as u64
    };
    let side = |i: u64| -> VertexSet {
        if exhaustive {
            let mask = i + 1;
            verts
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        } else {
            candidates[i as usize]
        }
    };
    for level in [
        Level::Two,
        Level::ThreeOne,
        Level::ThreeTwo,
        Level::ThreeThree,
    ] {
        let found = par::find_map_first(total, budget.parallel, |i| {
            let v1 = side(i);
            try_level(h, level, v1, support - v1)
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Candidate first sides beyond the exhaustive budget: prefixes of a
/// breadth-first order over the vertex adjacency, grown from every seed,
/// together with their complements.
fn heuristic_sides(h: &Hypergraph, verts: &[VertexId], cap: u64) -> Vec<VertexSet> {
    let support = h.support();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &seed in verts {
        let mut order = vec![seed];
        let mut visited = VertexSet::singleton(seed);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &e in h.edges().iter().filter(|e| e.contains(v)) {
                for w in e - visited {
                    visited.insert(w);
                    order.push(w);
                }
            }
        }
        let mut prefix = VertexSet::EMPTY;
        for &v in order.iter().take(order.len().saturating_sub(1)) {
            prefix.insert(v);
            for s in [prefix, support - prefix] {
                if !s.is_empty() && s != support && seen.insert(s) {
                    out.push(s);
                }
            }
        }
        if out.len() as u64 >= cap {
            break;
        }
    }
    out
}

fn try_level(
    h: &Hypergraph,
    level: Level,
    v1: VertexSet,
    v2: VertexSet,
) -> Option<DecompositionCase> {
    let cross = crossing(h, v1, v2);
    if cross.is_empty() {
        return None;
    }
    let t1 = distinct(cross.iter().map(|c| c.0).collect());
    let check = |case: DecompositionCase| validate(h, &case).then_some(case);
    match level {
        Level::Two => {
            if t1.len() != 1 {
                return None;
            }
            check(DecompositionCase::TwoSum { v1, v2, s: t1[0] })
        }
        Level::ThreeOne => {
            let t2 = distinct(cross.iter().map(|c| c.1).collect());
            for &s1 in &t1 {
                for &s2 in &t2 {
                    if cross.iter().all(|&(a, b)| a == s1 || b == s2) {
                        if let Some(c) = check(DecompositionCase::ThreeSumCase1 { v1, v2, s1, s2 })
                        {
                            return Some(c);
                        }
                    }
                }
            }
            None
        }
        Level::ThreeTwo => {
            if t1.len() != 2 {
                return None;
            }
            let (a, b) = (t1[0], t1[1]);
            let (s0, s1, s2) = (a & b, a - b, b - a);
            check(DecompositionCase::ThreeSumCase2 { v1, v2, s0, s1, s2 })
        }
        Level::ThreeThree => {
            let (s1, s2) = match t1.len() {
                2 => {
                    let (a, b) = (t1[0], t1[1]);
                    if a.is_disjoint(b) {
                        (a, b)
                    } else if a.is_proper_subset(b) {
                        (a, b - a)
                    } else if b.is_proper_subset(a) {
                        (b, a - b)
                    } else {
                        return None;
                    }
                }
                3 => {
                    // canonical order puts the union last
                    let (a, b, u) = (t1[0], t1[1], t1[2]);
                    if !(a.is_disjoint(b) && a | b == u) {
                        return None;
                    }
                    (a, b)
                }
                _ => return None,
            };
            check(DecompositionCase::ThreeSumCase3 { v1, v2, s1, s2 })
        }
    }
}

/// `F^W ≠ {∅}` for a nonempty `F`, i.e. every member meets `w`.
fn nonempty_with_nontrivial_projection(f: &[VertexSet], w: VertexSet) -> bool {
    !f.is_empty() && f.iter().all(|e| e.meets(w))
}

fn is_partition(h: &Hypergraph, v1: VertexSet, v2: VertexSet) -> bool {
    !v1.is_empty() && !v2.is_empty() && v1.is_disjoint(v2) && v1 | v2 == h.support()
}

/// Checks every condition of the rule named by `case` against `h`.
pub fn validate(h: &Hypergraph, case: &DecompositionCase) -> bool {
    use DecompositionCase::*;
    match *case {
        NotFound => false,
        NetworkBase { ref tree, .. } => {
            let compact = h.canonicalize().0;
            let Ok(a) = TuMatrix::from_hypergraph(&compact) else {
                return false;
            };
            match case {
                NetworkBase {
                    transposed: false, ..
                } => tree.validates(&a),
                _ => tree.validates(&a.transpose()),
            }
        }
        H0Base { perm } => {
            let mut used = VertexSet::EMPTY;
            for &v in &perm {
                used.insert(v);
            }
            if used.len() != 5 || used != h.support() || h.m() != 4 {
                return false;
            }
            h0_edges()
                .iter()
                .all(|e| h.contains_edge(e.iter().map(|i| perm[i]).collect()))
        }
        SingletonEdge { vertex } => h.contains_edge(VertexSet::singleton(vertex)),
        DegreeOneVertex { vertex, edge } => {
            h.contains_edge(edge) && edge.contains(vertex) && h.degree(vertex) == 1
        }
        IdenticalVertices { kept, dropped } => {
            kept != dropped
                && h.support().contains(kept)
                && h.edges()
                    .iter()
                    .all(|e| e.contains(kept) == e.contains(dropped))
        }
        OneSum { v1, v2 } => {
            is_partition(h, v1, v2)
                && !h.induced(v1).is_empty_family()
                && !h.induced(v2).is_empty_family()
                && h.edges().iter().all(|e| e.is_subset(v1) || e.is_subset(v2))
        }
        TwoSum { v1, v2, s } => {
            is_partition(h, v1, v2)
                && !s.is_empty()
                && s.is_subset(v1)
                && !h.induced(v1).is_empty_family()
                && nonempty_with_nontrivial_projection(&h.trace_class(v1, s), v2)
                && crossing(h, v1, v2).iter().all(|&(a, _)| a == s)
        }
        ThreeSumCase1 { v1, v2, s1, s2 } => {
            if !(is_partition(h, v1, v2)
                && !s1.is_empty()
                && !s2.is_empty()
                && s1.is_subset(v1)
                && s2.is_subset(v2))
            {
                return false;
            }
            let c1 = h.trace_class(v1, s1);
            let c2 = h.trace_class(v2, s2);
            let cond_i = nonempty_with_nontrivial_projection(&c1, v2)
                && nonempty_with_nontrivial_projection(&c2, v1);
            // H_V1 and H(V2,S2) are disjoint because S2 is nonempty
            let cond_ii = v1.len() + h.induced(v1).m() + c2.len() >= 4
                && v2.len() + h.induced(v2).m() + c1.len() >= 4;
            let cond_iii = crossing(h, v1, v2).iter().all(|&(a, b)| a == s1 || b == s2);
            cond_i && cond_ii && cond_iii
        }
        ThreeSumCase2 { v1, v2, s0, s1, s2 } => {
            if !(is_partition(h, v1, v2)
                && !s0.is_empty()
                && !s1.is_empty()
                && !s2.is_empty()
                && (s0 | s1 | s2).is_subset(v1)
                && s0.is_disjoint(s1)
                && s0.is_disjoint(s2)
                && s1.is_disjoint(s2))
            {
                return false;
            }
            let (a, b) = (s0 | s1, s0 | s2);
            !h.induced(v1).is_empty_family()
                && nonempty_with_nontrivial_projection(&h.trace_class(v1, a), v2)
                && nonempty_with_nontrivial_projection(&h.trace_class(v1, b), v2)
                && crossing(h, v1, v2).iter().all(|&(t, _)| t == a || t == b)
        }
        ThreeSumCase3 { v1, v2, s1, s2 } => {
            if !(is_partition(h, v1, v2)
                && !s1.is_empty()
                && !s2.is_empty()
                && (s1 | s2).is_subset(v1)
                && s1.is_disjoint(s2))
            {
                return false;
            }
            let h1 = h.induced(v1);
            let classes = [
                h.trace_class(v1, s1),
                h.trace_class(v1, s2),
                h.trace_class(v1, s1 | s2),
            ];
            let holding = classes
                .iter()
                .filter(|c| nonempty_with_nontrivial_projection(c, v2))
                .count();
            let cond_i = !h1.is_empty_family() && holding >= 2;
            // the union of H_V2 and the three trace classes; they are pairwise disjoint
            let union_size = h.induced(v2).m() + classes.iter().map(Vec::len).sum::<usize>();
            let cond_ii = v1.len() + h1.m() >= 4 && v2.len() + union_size >= 4;
            let cond_iii = crossing(h, v1, v2)
                .iter()
                .all(|&(t, _)| t == s1 || t == s2 || t == s1 | s2);
            cond_i && cond_ii && cond_iii
        }
    }
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
        Hypergraph::new(n, edges).unwrap().minimized()
    }

    fn structural_only() -> DetectBudget {
        DetectBudget {
            check_network: false,
            ..DetectBudget::default()
        }
    }

    #[test]
    fn one_sum_detected() {
        let h = hg(4, &[&[1, 2], &[3, 4]]);
        // identical vertices take priority on this tiny instance
        assert!(matches!(
            detect(&h, &structural_only()),
            DecompositionCase::IdenticalVertices {
                kept: 0,
                dropped: 1
            }
        ));
        let case = find_one_sum(&h).unwrap();
        assert_eq!(
            case,
            DecompositionCase::OneSum {
                v1: vset![0, 1],
                v2: vset![2, 3]
            }
        );
        assert!(validate(&h, &case));
    }

    #[test]
    fn one_sum_rejects_crossing_edge() {
        let h = hg(4, &[&[1, 2], &[1, 3], &[3, 4]]);
        assert!(!validate(
            &h,
            &DecompositionCase::OneSum {
                v1: vset![0, 1],
                v2: vset![2, 3]
            }
        ));
    }

    #[test]
    fn two_sum_example() {
        let h = hg(4, &[&[1, 2], &[1, 3], &[3, 4]]);
        let case = DecompositionCase::TwoSum {
            v1: vset![0, 1],
            v2: vset![2, 3],
            s: vset![0],
        };
        assert!(validate(&h, &case));
        let found = try_level(&h, Level::Two, vset![0, 1], vset![2, 3]);
        assert_eq!(found, Some(case));
    }

    #[test]
    fn h0_is_recognized_and_has_no_two_sum() {
        let h = hg(5, &[&[1, 4, 5], &[1, 2, 5], &[2, 3, 5], &[3, 4, 5]]);
        assert_eq!(
            detect(&h, &DetectBudget::default()),
            DecompositionCase::H0Base {
                perm: [0, 1, 2, 3, 4]
            }
        );
        let support = h.support();
        for mask in 1u128..31 {
            let v1 = VertexSet::from_bits(mask);
            let v2 = support - v1;
            for s_bits in 1u128..32 {
                let s = VertexSet::from_bits(s_bits);
                assert!(!validate(&h, &DecompositionCase::TwoSum { v1, v2, s }));
            }
        }
    }

    #[test]
    fn h0_relabeled() {
        // H0 under 1->2, 2->3, 3->4, 4->1, 5->5
        let h = hg(5, &[&[2, 1, 5], &[2, 3, 5], &[3, 4, 5], &[4, 1, 5]]);
        let perm = h0_isomorphism(&h).unwrap();
        assert!(validate(&h, &DecompositionCase::H0Base { perm }));
    }

    #[test]
    fn three_sum_case1_size_guard() {
        // any hypergraph admits the degenerate split V1 = S1 = {v}; the size
        // condition must reject it
        let h = hg(4, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]]);
        let case = DecompositionCase::ThreeSumCase1 {
            v1: vset![0],
            v2: vset![1, 2, 3],
            s1: vset![0],
            s2: vset![1],
        };
        assert!(!validate(&h, &case));
    }

    #[test]
    fn three_sum_case2_example() {
        let h = hg(6, &[&[2, 3, 4], &[5, 6], &[1, 3, 5], &[1, 2, 6]]);
        let case = DecompositionCase::ThreeSumCase2 {
            v1: vset![0, 1, 2, 3],
            v2: vset![4, 5],
            s0: vset![0],
            s1: vset![1],
            s2: vset![2],
        };
        assert!(validate(&h, &case));
    }

    #[test]
    fn three_sum_case3_example() {
        let h = hg(5, &[&[1, 2, 3], &[1, 4], &[2, 5], &[4, 5]]);
        let case = DecompositionCase::ThreeSumCase3 {
            v1: vset![0, 1, 2],
            v2: vset![3, 4],
            s1: vset![0],
            s2: vset![1],
        };
        assert!(validate(&h, &case));
    }

    #[test]
    fn reductions_take_priority() {
        let h = hg(3, &[&[1], &[2, 3]]);
        assert!(matches!(
            detect(&h, &structural_only()),
            DecompositionCase::IdenticalVertices { .. }
        ));
        let h = hg(4, &[&[1], &[2, 3], &[3, 4], &[2, 4]]);
        assert_eq!(
            detect(&h, &structural_only()),
            DecompositionCase::SingletonEdge { vertex: 0 }
        );
        let h = hg(4, &[&[1, 2], &[2, 3], &[3, 4], &[2, 4]]);
        assert_eq!(
            detect(&h, &structural_only()),
            DecompositionCase::DegreeOneVertex {
                vertex: 0,
                edge: vset![0, 1]
            }
        );
    }

    #[test]
    fn detected_cases_validate() {
        let h = hg(
            6,
            &[
                &[1, 2],
                &[2, 3],
                &[1, 3],
                &[3, 4],
                &[4, 5],
                &[5, 6],
                &[4, 6],
            ],
        );
        let case = detect(&h, &structural_only());
        assert!(case.is_structural(), "{case}");
        assert!(validate(&h, &case));
    }
}
