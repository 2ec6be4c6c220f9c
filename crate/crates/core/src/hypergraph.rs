//! Set systems and their algebra: minimization, induced and projected
//! subhypergraphs, trace classes, conjunction, disjunction and contraction.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet, MAX_VERTICES};

/// A family of vertex sets over the universe `{0, .., universe-1}`.
///
/// Edges are kept exactly as supplied until [`Hypergraph::minimized`] or
/// [`Hypergraph::canonicalize`] is applied; both produce a Sperner,
/// duplicate-free edge list in canonical order. The empty family and the
/// family holding only the empty set are distinct values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    universe: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Wraps `edges` after checking that they fit into the universe.
    pub fn new(universe: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "universe of {universe} vertices exceeds the supported {MAX_VERTICES}"
            )));
        }
        let full = VertexSet::full(universe);
        if let Some(e) = edges.iter().find(|e| !e.is_subset(full)) {
            return Err(Error::invalid(format!(
                "edge {e} leaves the universe of {universe} vertices"
            )));
        }
        Ok(Hypergraph { universe, edges })
    }

    /// Builds from 0-based vertex lists. Panics on out-of-range ids; meant for
    /// literals in tests and examples.
    pub fn from_lists(universe: usize, lists: &[&[VertexId]]) -> Self {
        let edges = lists.iter().map(|l| l.iter().collect()).collect();
        Hypergraph::new(universe, edges).expect("edge outside universe")
    }

    /// The empty family `∅`, whose dual is `{∅}`.
    pub fn empty(universe: usize) -> Self {
        Hypergraph {
            universe,
            edges: Vec::new(),
        }
    }

    /// The family `{∅}`, whose dual is `∅`.
    pub fn with_empty_edge(universe: usize) -> Self {
        Hypergraph {
            universe,
            edges: vec![VertexSet::EMPTY],
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<VertexSet> {
        self.edges
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of vertices covered by some edge.
    pub fn n(&self) -> usize {
        self.support().len()
    }

    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    pub fn is_empty_family(&self) -> bool {
        self.edges.is_empty()
    }

    /// `∅` or `{∅}`.
    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty() || (self.edges.len() == 1 && self.edges[0].is_empty())
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.contains(&e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Same universe, different edges.
    pub fn with_edges(&self, edges: Vec<VertexSet>) -> Self {
        Hypergraph {
            universe: self.universe,
            edges,
        }
    }

    pub fn is_sperner(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, a)| {
            self.edges
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset(*b))
        })
    }

    /// Sperner, duplicate-free and sorted canonically.
    pub fn is_canonical(&self) -> bool {
        self.edges
            .windows(2)
            .all(|w| w[0].canonical_cmp(&w[1]).is_lt())
            && self.is_sperner()
    }

    /// Inclusion-minimal members, sorted canonically.
    pub fn minimized(&self) -> Hypergraph {
        minimize(self.universe, self.edges.iter().copied())
    }

    /// `H_S`: the edges contained in `s`.
    pub fn induced(&self, s: VertexSet) -> Hypergraph {
        self.with_edges(
            self.edges
                .iter()
                .copied()
                .filter(|e| e.is_subset(s))
                .collect(),
        )
    }

    /// `H^S = Min{H ∩ S}`.
    pub fn project(&self, s: VertexSet) -> Hypergraph {
        minimize(self.universe, self.edges.iter().map(|&e| e & s))
    }

    /// `H(W,S)`: the edges whose intersection with `w` is exactly `s`.
    pub fn trace_class(&self, w: VertexSet, s: VertexSet) -> Vec<VertexSet> {
        self.edges.iter().copied().filter(|&e| e & w == s).collect()
    }

    /// True when `t` meets every edge.
    pub fn is_transversal(&self, t: VertexSet) -> bool {
        self.edges.iter().all(|e| e.meets(t))
    }

    /// True when `t` meets every edge and each member of `t` owns a private
    /// edge, i.e. one meeting `t` in that member only.
    pub fn is_minimal_transversal(&self, t: VertexSet) -> bool {
        if !self.is_transversal(t) {
            return false;
        }
        let mut private = VertexSet::EMPTY;
        for &e in &self.edges {
            let hit = e & t;
            if hit.len() == 1 {
                private |= hit;
            }
        }
        private == t
    }

    /// Replaces `s` by a single vertex (its smallest member) in every edge
    /// accepted by `select`. See [`Hypergraph::contract_into`].
    pub fn contract<F>(&self, s: VertexSet, select: F) -> Result<(Hypergraph, VertexId)>
    where
        F: Fn(VertexSet) -> bool,
    {
        let v = s
            .first()
            .ok_or_else(|| Error::invalid("cannot contract the empty set"))?;
        Ok((self.contract_into(s, v, select)?, v))
    }

    /// Replaces `s` by the vertex `target` in every edge accepted by `select`.
    ///
    /// Each selected edge must contain `s` or be disjoint from it; unselected
    /// edges must be disjoint from `s`. `target` must lie in `s` or outside the
    /// support of the result.
    pub fn contract_into<F>(&self, s: VertexSet, target: VertexId, select: F) -> Result<Hypergraph>
    where
        F: Fn(VertexSet) -> bool,
    {
        if s.is_empty() {
            return Err(Error::invalid("cannot contract the empty set"));
        }
        let mut out = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            let hit = e & s;
            if select(e) {
                if hit.is_empty() {
                    out.push(e);
                } else if hit == s {
                    out.push((e - s).with(target));
                } else {
                    return Err(Error::structural(format!(
                        "edge {e} partially meets contracted set {s}"
                    )));
                }
            } else if hit.is_empty() {
                out.push(e);
            } else {
                return Err(Error::structural(format!(
                    "unselected edge {e} meets contracted set {s}"
                )));
            }
        }
        if !s.contains(target) && self.support().contains(target) {
            return Err(Error::invalid(format!(
                "contraction target {} already in use",
                target + 1
            )));
        }
        let universe = self.universe.max(target + 1);
        Ok(Hypergraph {
            universe,
            edges: out,
        })
    }

    /// Minimizes, drops vertices covered by no edge and relabels the rest to
    /// `0..n`. The trace maps duals of the result back to this universe.
    pub fn canonicalize(&self) -> (Hypergraph, ReductionTrace) {
        let min = self.minimized();
        let support = min.support();
        let kept: Vec<VertexId> = support.iter().collect();
        let dropped = VertexSet::full(self.universe) - support;
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &old) in kept.iter().enumerate() {
            index[old] = new;
        }
        let edges: Vec<VertexSet> = min
            .edges
            .iter()
            .map(|e| e.iter().map(|v| index[v]).collect::<VertexSet>())
            .collect();
        let relabeled = minimize(kept.len(), edges);
        let mut trace = ReductionTrace::default();
        if !dropped.is_empty() || kept.len() != self.universe {
            trace.steps.push(ReductionStep::Relabel {
                kept,
                dropped,
                original_universe: self.universe,
            });
        }
        (relabeled, trace)
    }

    /// Hypergraph text format: `p hg <n> <m>` followed by `m` edge lines of
    /// 1-based vertex ids; `e` denotes the empty edge.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            match header {
                None => {
                    let toks: Vec<&str> = line.split_whitespace().collect();
                    if toks.len() != 4 || toks[0] != "p" || toks[1] != "hg" {
                        return Err(Error::parse(line_no, "expected header `p hg <n> <m>`"));
                    }
                    let n = parse_count(toks[2], line_no)?;
                    let m = parse_count(toks[3], line_no)?;
                    if n > MAX_VERTICES {
                        return Err(Error::parse(
                            line_no,
                            format!("{n} vertices exceed the supported {MAX_VERTICES}"),
                        ));
                    }
                    header = Some((n, m));
                }
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(Error::parse(
                            line_no,
                            format!("more than the declared {m} edges"),
                        ));
                    }
                    edges.push(parse_edge(line, n, line_no)?);
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse(0, "missing header `p hg <n> <m>`"))?;
        if edges.len() != m {
            return Err(Error::parse(
                0,
                format!("declared {m} edges, found {}", edges.len()),
            ));
        }
        Hypergraph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p hg {} {}\n", self.universe, self.edges.len());
        for &e in &self.edges {
            out.push_str(&edge_line(e));
            out.push('\n');
        }
        out
    }
}

/// Space-separated 1-based ids, or `e` for the empty set.
pub fn edge_line(e: VertexSet) -> String {
    if e.is_empty() {
        return "e".to_string();
    }
    e.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// 0/1 characteristic string of length `n`.
pub fn bits_line(e: VertexSet, n: usize) -> String {
    (0..n)
        .map(|v| if e.contains(v) { '1' } else { '0' })
        .collect()
}

fn strip_comment(raw: &str) -> &str {
    match raw.find('#') {
        Some(i) => raw[..i].trim(),
        None => raw.trim(),
    }
}

fn parse_count(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a count")))
}

fn parse_edge(line: &str, n: usize, line_no: usize) -> Result<VertexSet> {
    if line == "e" {
        return Ok(VertexSet::EMPTY);
    }
    let mut e = VertexSet::EMPTY;
    for tok in line.split_whitespace() {
        let id: usize = tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("`{tok}` is not a vertex id")))?;
        if id == 0 || id > n {
            return Err(Error::parse(
                line_no,
                format!("vertex {id} outside 1..={n}"),
            ));
        }
        e.insert(id - 1);
    }
    Ok(e)
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H[n={}]", self.universe)?;
        f.debug_list()
            .entries(self.edges.iter().map(|e| e.display_one_based()))
            .finish()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.display_one_based()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `Min(edges)`: inclusion-minimal members, duplicate-free, canonical order.
pub fn minimize<I>(universe: usize, edges: I) -> Hypergraph
where
    I: IntoIterator<Item = VertexSet>,
{
    let mut all: Vec<VertexSet> = edges.into_iter().collect();
    all.sort_unstable_by(VertexSet::canonical_cmp);
    all.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(all.len());
    for e in all {
        // kept holds only sets of size <= |e|; equal-size sets cannot be proper subsets
        if !kept.iter().any(|k| k.len() < e.len() && k.is_subset(e)) {
            kept.push(e);
        }
    }
    Hypergraph {
        universe,
        edges: kept,
    }
}

/// `H1 ∧ H2 = Min{A ∪ B}`.
pub fn conjunction(h1: &Hypergraph, h2: &Hypergraph) -> Hypergraph {
    let universe = h1.universe.max(h2.universe);
    let mut unions = Vec::with_capacity(h1.m() * h2.m());
    for &a in &h1.edges {
        for &b in &h2.edges {
            unions.push(a | b);
        }
    }
    minimize(universe, unions)
}

/// `H1 ∨ H2 = Min(H1 ∪ H2)`.
pub fn disjunction(h1: &Hypergraph, h2: &Hypergraph) -> Hypergraph {
    let universe = h1.universe.max(h2.universe);
    minimize(universe, h1.edges.iter().chain(h2.edges.iter()).copied())
}

/// One undoable simplification of a hypergraph. `expand` maps the dual of the
/// simplified hypergraph to the dual of the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// Vertices in `dropped` were covered by no edge; the survivors `kept`
    /// were renumbered `0..kept.len()`.
    Relabel {
        kept: Vec<VertexId>,
        dropped: VertexSet,
        original_universe: usize,
    },
    /// The edge `{vertex}` was removed.
    SingletonEdge { vertex: VertexId },
    /// `vertex` lay in `edge` only; the edge was removed.
    DegreeOneVertex { vertex: VertexId, edge: VertexSet },
    /// `dropped` lay in exactly the same edges as `kept` and was deleted.
    IdenticalVertices { kept: VertexId, dropped: VertexId },
}

impl ReductionStep {
    pub fn kind(&self) -> &'static str {
        match self {
            ReductionStep::Relabel { .. } => "redundant-vertex-drop",
            ReductionStep::SingletonEdge { .. } => "singleton-edge",
            ReductionStep::DegreeOneVertex { .. } => "degree-one-vertex",
            ReductionStep::IdenticalVertices { .. } => "identical-vertices",
        }
    }

    /// Applies the step to `h`, returning the simplified hypergraph.
    pub fn apply(&self, h: &Hypergraph) -> Hypergraph {
        match *self {
            ReductionStep::Relabel { .. } => h.canonicalize().0,
            ReductionStep::SingletonEdge { vertex } => {
                let e = VertexSet::singleton(vertex);
                h.with_edges(h.edges.iter().copied().filter(|&x| x != e).collect())
            }
            ReductionStep::DegreeOneVertex { edge, .. } => {
                h.with_edges(h.edges.iter().copied().filter(|&x| x != edge).collect())
            }
            ReductionStep::IdenticalVertices { dropped, .. } => {
                h.with_edges(h.edges.iter().map(|e| e.without(dropped)).collect())
            }
        }
    }

    /// Maps `Tr(reduced)` to `Tr(original)`.
    pub fn expand(&self, dual: &Hypergraph) -> Hypergraph {
        match self {
            ReductionStep::Relabel {
                kept,
                original_universe,
                ..
            } => {
                let edges: Vec<VertexSet> = dual
                    .edges
                    .iter()
                    .map(|t| t.iter().map(|v| kept[v]).collect::<VertexSet>())
                    .collect();
                minimize(*original_universe, edges)
            }
            ReductionStep::SingletonEdge { vertex } => {
                let universe = dual.universe.max(vertex + 1);
                // the vertex lies in no other edge, so the conjunction is disjoint
                minimize(universe, dual.edges.iter().map(|t| t.with(*vertex)))
            }
            ReductionStep::DegreeOneVertex { edge, .. } => {
                let universe = dual.universe.max(edge.last().map_or(0, |v| v + 1));
                let singletons = Hypergraph {
                    universe,
                    edges: edge.iter().map(VertexSet::singleton).collect(),
                };
                conjunction(dual, &singletons)
            }
            ReductionStep::IdenticalVertices { kept, dropped } => {
                let universe = dual.universe.max(dropped + 1);
                let mut edges = dual.edges.clone();
                for t in &dual.edges {
                    if t.contains(*kept) {
                        edges.push(t.without(*kept).with(*dropped));
                    }
                }
                minimize(universe, edges)
            }
        }
    }
}

/// Ordered record of reductions; expanding replays them in reverse.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: ReductionStep) {
        self.steps.push(step);
    }

    pub fn expand(&self, dual: &Hypergraph) -> Hypergraph {
        self.steps
            .iter()
            .rev()
            .fold(dual.clone(), |acc, step| step.expand(&acc))
    }
}
