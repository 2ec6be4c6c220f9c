use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

/// Counters for the per-node identities the combiners check after the fact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvariantChecks {
    /// Barred-hypergraph size checks `|Tr(H̄i)| <= |Tr(H)|` in 3-sum case 1.
    pub barred_checks: u64,
    pub barred_violations: u64,
    /// Guaranteed-subfamily checks in 3-sum cases 2 and 3.
    pub subset_checks: u64,
    pub subset_violations: u64,
}

impl InvariantChecks {
    pub(crate) fn add(&mut self, o: &InvariantChecks) {
        self.barred_checks += o.barred_checks;
        self.barred_violations += o.barred_violations;
        self.subset_checks += o.subset_checks;
        self.subset_violations += o.subset_violations;
    }
}

/// Accumulated over a subtree; merging is associative and order-free.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub nodes: u64,
    pub histogram: BTreeMap<String, u64>,
    pub oracle_leaves: u64,
    pub fallbacks: u64,
    pub progress_fallbacks: u64,
    pub network_skips: u64,
    pub volume_checks: u64,
    pub volume_violations: u64,
    pub invariants: InvariantChecks,
    pub detect: Duration,
    pub combine: Duration,
    pub oracle: Duration,
}

impl Tally {
    pub fn merge(&mut self, o: &Tally) {
        self.nodes += o.nodes;
        for (k, v) in &o.histogram {
            *self.histogram.entry(k.clone()).or_default() += v;
        }
        self.oracle_leaves += o.oracle_leaves;
        self.fallbacks += o.fallbacks;
        self.progress_fallbacks += o.progress_fallbacks;
        self.network_skips += o.network_skips;
        self.volume_checks += o.volume_checks;
        self.volume_violations += o.volume_violations;
        self.invariants.add(&o.invariants);
        self.detect += o.detect;
        self.combine += o.combine;
        self.oracle += o.oracle;
    }

    pub fn bump(&mut self, rule: &str) {
        *self.histogram.entry(rule.to_string()).or_default() += 1;
    }

    /// No oracle fallback anywhere in the subtree.
    pub fn fallback_free(&self) -> bool {
        self.fallbacks == 0 && self.progress_fallbacks == 0
    }
}

/// Accounting for one [`dualize`](super::dualize) call.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DualizationStats {
    /// Vertices, edges and dual size of the minimized input.
    pub n: u64,
    pub m: u64,
    pub k: u64,
    /// `n * m * k`.
    pub mu: u64,
    /// Recursion-tree nodes, the root included.
    pub nodes: u64,
    pub rule_histogram: BTreeMap<String, u64>,
    pub oracle_leaf_count: u64,
    /// Nodes where no rule was found and the oracle answered instead.
    pub fallback_count: u64,
    /// Children that would not have shrunk and were answered by the oracle.
    pub progress_fallback_count: u64,
    /// Network tests abandoned because of their budget.
    pub network_budget_skips: u64,
    /// Per-node `nodes <= mu` checks over fallback-free subtrees.
    pub volume_checks: u64,
    pub volume_violations: u64,
    pub invariant_checks: InvariantChecks,
    pub wall_time_ms: f64,
    /// Summed over nodes; exceeds wall time under parallel execution.
    pub detect_time_ms: f64,
    pub combine_time_ms: f64,
    pub oracle_time_ms: f64,
}

impl DualizationStats {
    /// True when the run used only structural and base rules.
    pub fn fallback_free(&self) -> bool {
        self.fallback_count == 0 && self.progress_fallback_count == 0
    }

    /// `nodes <= mu`, evaluated only for fallback-free runs.
    pub fn volume_bound_holds(&self) -> bool {
        !self.fallback_free() || self.nodes <= self.mu.max(1)
    }

    pub(crate) fn from_tally(t: &Tally, n: u64, m: u64, k: u64, wall: Duration) -> Self {
        DualizationStats {
            n,
            m,
            k,
            mu: n * m * k,
            nodes: t.nodes,
            rule_histogram: t.histogram.clone(),
            oracle_leaf_count: t.oracle_leaves,
            fallback_count: t.fallbacks,
            progress_fallback_count: t.progress_fallbacks,
            network_budget_skips: t.network_skips,
            volume_checks: t.volume_checks,
            volume_violations: t.volume_violations,
            invariant_checks: t.invariants,
            wall_time_ms: ms(wall),
            detect_time_ms: ms(t.detect),
            combine_time_ms: ms(t.combine),
            oracle_time_ms: ms(t.oracle),
        }
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// One node of the recursion tree, for `--trace` output.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TraceNode {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    /// Indented text, two spaces per level.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let _ = writeln!(
            out,
            "{:indent$}{} [n={} m={} k={}]",
            "",
            self.label,
            self.n,
            self.m,
            self.k,
            indent = depth * 2
        );
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(TraceNode::size).sum::<usize>()
    }
}
