//! Recursive dualization driven by structural decomposition.
//!
//! Each node minimizes its hypergraph, answers small instances with the
//! oracle, and otherwise applies the first rule found by
//! [`detect`](crate::decomp::detect): reductions shrink the instance, base
//! cases are answered directly, and sums split it into parts whose duals are
//! combined. Independent parts are dualized concurrently when `parallel` is
//! set and the `parallel` feature is enabled.

pub mod case1;
pub mod case2;
pub mod combine;
pub mod reduce;
pub mod stats;

use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::decomp::{detect_with, DecompositionCase, DetectBudget};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::oracle::{berge_dualize, OracleBudget, TransversalSet};
use crate::par;
use crate::vertex_set::{VertexId, VertexSet};

use case1::{solve_case1, Case1Context};
use case2::{solve_case2, solve_case3, Case2Context};
use combine::{combine_1sum, combine_2sum, Recurse};
use stats::Tally;

pub use stats::{DualizationStats, InvariantChecks, TraceNode};

/// What to do with instances whose incidence matrix is a network matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NetworkDelegate {
    /// Detect them and answer them with the oracle.
    #[default]
    Oracle,
    /// Skip network detection and keep decomposing.
    Decompose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualizerConfig {
    /// Instances with `min(n, m)` at most this are answered by the oracle.
    pub base_threshold: usize,
    pub oracle_budget: OracleBudget,
    pub detect_budget: DetectBudget,
    pub network_delegate: NetworkDelegate,
    pub parallel: bool,
    /// Record the recursion tree.
    pub trace: bool,
}

impl Default for DualizerConfig {
    fn default() -> Self {
        DualizerConfig {
            base_threshold: 3,
            oracle_budget: OracleBudget::default(),
            detect_budget: DetectBudget::default(),
            network_delegate: NetworkDelegate::default(),
            parallel: cfg!(feature = "parallel"),
            trace: false,
        }
    }
}

impl DualizerConfig {
    pub fn sequential() -> Self {
        DualizerConfig {
            parallel: false,
            detect_budget: DetectBudget {
                parallel: false,
                ..DetectBudget::default()
            },
            ..DualizerConfig::default()
        }
    }
}

/// Result of [`dualize_traced`].
#[derive(Clone, Debug, PartialEq)]
pub struct Dualization {
    pub dual: TransversalSet,
    pub stats: DualizationStats,
    /// Present when tracing was requested.
    pub trace: Option<TraceNode>,
}

/// `Tr(h)` with run statistics.
pub fn dualize(h: &Hypergraph, cfg: &DualizerConfig) -> Result<(TransversalSet, DualizationStats)> {
    let d = dualize_traced(h, cfg)?;
    Ok((d.dual, d.stats))
}

pub fn dualize_traced(h: &Hypergraph, cfg: &DualizerConfig) -> Result<Dualization> {
    let start = Instant::now();
    let h = h.minimized();
    let solver = Solver::new(cfg);
    let sub = if h.is_trivial() {
        let mut tally = Tally {
            nodes: 1,
            ..Tally::default()
        };
        tally.bump("Trivial");
        let dual = berge_dualize(&h, cfg.oracle_budget)?.into_family();
        let trace = cfg.trace.then(|| TraceNode {
            label: "Trivial".into(),
            n: 0,
            m: h.m(),
            k: dual.m(),
            children: vec![],
        });
        SubResult { dual, tally, trace }
    } else {
        solver.solve(&h)?
    };
    let (n, m, k) = (h.n() as u64, h.m() as u64, sub.dual.m() as u64);
    let stats = DualizationStats::from_tally(&sub.tally, n, m, k, start.elapsed());
    Ok(Dualization {
        dual: TransversalSet::new(sub.dual),
        stats,
        trace: sub.trace,
    })
}

/// `Tr(H0)` transported along `perm`.
pub fn dual_h0(perm: &[VertexId; 5], universe: usize) -> Hypergraph {
    let map = |ids: &[usize]| ids.iter().map(|&i| perm[i]).collect::<VertexSet>();
    Hypergraph::new(universe, vec![map(&[4]), map(&[0, 2]), map(&[1, 3])])
        .expect("H0 vertices lie in the universe")
        .minimized()
}

struct SubResult {
    dual: Hypergraph,
    tally: Tally,
    trace: Option<TraceNode>,
}

struct Solver<'a> {
    cfg: &'a DualizerConfig,
    detect: DetectBudget,
}

impl<'a> Solver<'a> {
    fn new(cfg: &'a DualizerConfig) -> Self {
        let mut detect = cfg.detect_budget;
        detect.parallel &= cfg.parallel;
        detect.check_network &= cfg.network_delegate == NetworkDelegate::Oracle;
        Solver { cfg, detect }
    }

    fn oracle(&self, h: &Hypergraph, tally: &mut Tally) -> Result<Hypergraph> {
        let t = Instant::now();
        let dual = berge_dualize(h, self.cfg.oracle_budget)?.into_family();
        tally.oracle += t.elapsed();
        tally.oracle_leaves += 1;
        Ok(dual)
    }

    /// Dualizes a minimized, nontrivial hypergraph as one recursion node.
    fn solve(&self, h: &Hypergraph) -> Result<SubResult> {
        let start = Instant::now();
        let (n, m) = (h.n(), h.m());
        let mut tally = Tally {
            nodes: 1,
            ..Tally::default()
        };
        let ctx = NodeCtx::new(self, n + m);

        let (dual, label) = if n.min(m) <= self.cfg.base_threshold {
            (self.oracle(h, &mut tally)?, "OracleLeaf".to_string())
        } else {
            let t = Instant::now();
            let case = detect_with(h, &self.detect, Some(&mut tally.network_skips));
            tally.detect += t.elapsed();
            self.apply(h, &case, &ctx, &mut tally)?
        };

        let acc = ctx.acc.into_inner().expect("accumulator lock");
        tally.combine += start
            .elapsed()
            .saturating_sub(tally.detect + tally.oracle + acc.child_time);
        tally.merge(&acc.tally);
        tally.bump(&label);

        let k = dual.m();
        if tally.fallback_free() {
            tally.volume_checks += 1;
            if tally.nodes > (n * m * k).max(1) as u64 {
                tally.volume_violations += 1;
            }
        }
        let trace = self.cfg.trace.then_some(TraceNode {
            label,
            n,
            m,
            k,
            children: acc.traces,
        });
        Ok(SubResult { dual, tally, trace })
    }

    fn apply(
        &self,
        h: &Hypergraph,
        case: &DecompositionCase,
        ctx: &NodeCtx,
        tally: &mut Tally,
    ) -> Result<(Hypergraph, String)> {
        let tag = case.tag();
        if let Some(step) = reduce::step_for(case) {
            let child = step.apply(h).minimized();
            let d = ctx.dual(&child)?;
            return Ok((
                h.with_edges(step.expand(&d).into_edges()).minimized(),
                tag.to_string(),
            ));
        }
        let dual = match *case {
            DecompositionCase::H0Base { perm } => dual_h0(&perm, h.universe()),
            DecompositionCase::NetworkBase { .. } => self.oracle(h, tally)?,
            DecompositionCase::OneSum { v1, v2 } => {
                let d = ctx.dual_all(&[h.induced(v1), h.induced(v2)])?;
                combine_1sum(&d[0], &d[1])
            }
            DecompositionCase::TwoSum { v1, v2, s } => {
                let d = ctx.dual_all(&[h.induced(v1), h.induced(v2 | s)])?;
                combine_2sum(&d[0], &d[1])
            }
            DecompositionCase::ThreeSumCase1 { v1, v2, s1, s2 } => {
                let c = Case1Context::new(h, v1, v2, s1, s2);
                let out = solve_case1(h, &c, ctx)?;
                tally.invariants.add(&out.checks);
                return Ok((out.dual, format!("{tag}/{}", out.subcase)));
            }
            DecompositionCase::ThreeSumCase2 { v1, v2, s0, s1, s2 } => {
                let out = solve_case2(h, &Case2Context { v1, v2, s0, s1, s2 }, ctx)?;
                tally.invariants.add(&out.checks);
                return Ok((out.dual, format!("{tag}/{}", out.subcase)));
            }
            DecompositionCase::ThreeSumCase3 { v1, v2, s1, s2 } => {
                let c = Case2Context {
                    v1,
                    v2,
                    s0: VertexSet::EMPTY,
                    s1,
                    s2,
                };
                let out = solve_case3(h, &c, ctx)?;
                tally.invariants.add(&out.checks);
                return Ok((out.dual, format!("{tag}/{}", out.subcase)));
            }
            DecompositionCase::NotFound => {
                tally.fallbacks += 1;
                self.oracle(h, tally)?
            }
            DecompositionCase::SingletonEdge { .. }
            | DecompositionCase::DegreeOneVertex { .. }
            | DecompositionCase::IdenticalVertices { .. } => {
                unreachable!("reductions handled above")
            }
        };
        Ok((dual, tag.to_string()))
    }
}

#[derive(Default)]
struct Acc {
    tally: Tally,
    traces: Vec<TraceNode>,
    child_time: Duration,
}

/// Hands subproblems of one node back to the solver and collects their
/// accounting.
struct NodeCtx<'s, 'a> {
    solver: &'s Solver<'a>,
    parent_size: usize,
    acc: Mutex<Acc>,
}

impl<'s, 'a> NodeCtx<'s, 'a> {
    fn new(solver: &'s Solver<'a>, parent_size: usize) -> Self {
        NodeCtx {
            solver,
            parent_size,
            acc: Mutex::new(Acc::default()),
        }
    }

    fn leaf(&self, h: &Hypergraph, label: &str, tally: &mut Tally) -> Result<SubResult> {
        tally.nodes += 1;
        tally.bump(label);
        let dual = self.solver.oracle(h, tally)?;
        let trace = self.solver.cfg.trace.then(|| TraceNode {
            label: label.to_string(),
            n: h.n(),
            m: h.m(),
            k: dual.m(),
            children: vec![],
        });
        Ok(SubResult {
            dual,
            tally: std::mem::take(tally),
            trace,
        })
    }

    fn one(&self, part: &Hypergraph) -> Result<(SubResult, Duration)> {
        let start = Instant::now();
        let h = part.minimized();
        let mut tally = Tally::default();
        let sub = if h.is_trivial() {
            let dual = berge_dualize(&h, self.solver.cfg.oracle_budget)?.into_family();
            SubResult {
                dual,
                tally,
                trace: None,
            }
        } else if h.n() + h.m() >= self.parent_size {
            tally.progress_fallbacks += 1;
            self.leaf(&h, "ProgressGuard", &mut tally)?
        } else {
            self.solver.solve(&h)?
        };
        Ok((sub, start.elapsed()))
    }

    fn record(&self, results: Vec<(SubResult, Duration)>) -> Vec<Hypergraph> {
        let mut acc = self.acc.lock().expect("accumulator lock");
        results
            .into_iter()
            .map(|(sub, time)| {
                acc.tally.merge(&sub.tally);
                acc.child_time += time;
                acc.traces.extend(sub.trace);
                sub.dual
            })
            .collect()
    }
}

impl Recurse for NodeCtx<'_, '_> {
    fn dual_all(&self, parts: &[Hypergraph]) -> Result<Vec<Hypergraph>> {
        let results = par::map(parts, self.solver.cfg.parallel, |p| self.one(p));
        let results = results.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(self.record(results))
    }

    fn direct(&self, part: &Hypergraph) -> Result<Hypergraph> {
        let start = Instant::now();
        let h = part.minimized();
        let mut tally = Tally::default();
        let sub = if h.is_trivial() {
            SubResult {
                dual: berge_dualize(&h, self.solver.cfg.oracle_budget)?.into_family(),
                tally,
                trace: None,
            }
        } else {
            self.leaf(&h, "Direct", &mut tally)?
        };
        Ok(self
            .record(vec![(sub, start.elapsed())])
            .pop()
            .expect("one result"))
    }
}
