//! Random instances for each decomposition rule. A generator lays out the
//! vertex partition and S-sets first, draws edges with the allowed traces,
//! and keeps the result only if it passes `validate`.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tuve_core::dualizer::case1::{solve_case1, Case1Context};
use tuve_core::dualizer::case2::{solve_case2, solve_case3, Case2Context};
use tuve_core::dualizer::combine::{
    combine_1sum, combine_2sum, CaseOutcome, OracleRecurse, Recurse,
};
use tuve_core::{validate, DecompositionCase, Hypergraph, Result, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    OneSum,
    TwoSum,
    Case1,
    Case2,
    Case3,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::OneSum,
        Rule::TwoSum,
        Rule::Case1,
        Rule::Case2,
        Rule::Case3,
    ];
}

fn subset(r: &mut ChaCha8Rng, of: VertexSet, p: f64) -> VertexSet {
    of.iter().filter(|_| r.gen_bool(p)).collect()
}

fn nonempty_subset(r: &mut ChaCha8Rng, of: VertexSet) -> VertexSet {
    let p = r.gen_range(0.2..0.8);
    let s = subset(r, of, p);
    if s.is_empty() {
        let all = of.to_vec();
        VertexSet::singleton(*all.choose(r).expect("nonempty pool"))
    } else {
        s
    }
}

/// Splits `0..n` into two random nonempty sides with `|V1| >= min1`.
fn sides(r: &mut ChaCha8Rng, n: usize, min1: usize, min2: usize) -> (VertexSet, VertexSet) {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(r);
    let a = r.gen_range(min1..=n - min2);
    (
        ids[..a].iter().copied().collect(),
        ids[a..].iter().copied().collect(),
    )
}

/// Splits a random part of `pool` into `k` disjoint nonempty sets.
fn disjoint_sets(r: &mut ChaCha8Rng, pool: VertexSet, k: usize) -> Vec<VertexSet> {
    let mut ids = pool.to_vec();
    ids.shuffle(r);
    let used = r.gen_range(k..=ids.len());
    let mut cuts: Vec<usize> = (1..used).collect();
    cuts.shuffle(r);
    let mut cuts: Vec<usize> = cuts[..k - 1].to_vec();
    cuts.sort();
    cuts.insert(0, 0);
    cuts.push(used);
    cuts.windows(2)
        .map(|w| ids[w[0]..w[1]].iter().copied().collect())
        .collect()
}

fn finish(
    n: usize,
    edges: Vec<VertexSet>,
    case: impl Fn(VertexSet) -> DecompositionCase,
) -> Option<(Hypergraph, DecompositionCase)> {
    let h = Hypergraph::new(n, edges).ok()?.minimized();
    let case = case(h.support());
    validate(&h, &case).then_some((h, case))
}

/// One attempt at an instance of `rule`; `None` when the draw fails validation.
pub fn generate(rule: Rule, r: &mut ChaCha8Rng) -> Option<(Hypergraph, DecompositionCase)> {
    let n = r.gen_range(5..=10);
    let mut edges = Vec::new();
    match rule {
        Rule::OneSum => {
            let (v1, v2) = sides(r, n, 1, 1);
            for _ in 0..r.gen_range(1..=4) {
                edges.push(nonempty_subset(r, v1));
            }
            for _ in 0..r.gen_range(1..=4) {
                edges.push(nonempty_subset(r, v2));
            }
            finish(n, edges, |sup| DecompositionCase::OneSum {
                v1: v1 & sup,
                v2: v2 & sup,
            })
        }
        Rule::TwoSum => {
            let (v1, v2) = sides(r, n, 1, 1);
            let s = nonempty_subset(r, v1);
            for _ in 0..r.gen_range(1..=4) {
                edges.push(nonempty_subset(r, v1));
            }
            for _ in 0..r.gen_range(0..=4) {
                edges.push(nonempty_subset(r, v2));
            }
            for _ in 0..r.gen_range(1..=3) {
                edges.push(s | nonempty_subset(r, v2));
            }
            finish(n, edges, |sup| DecompositionCase::TwoSum {
                v1: v1 & sup,
                v2: v2 & sup,
                s,
            })
        }
        Rule::Case1 => {
            let (v1, v2) = sides(r, n, 2, 1);
            let s1 = nonempty_subset(r, v1);
            let s2 = nonempty_subset(r, v2);
            for _ in 0..r.gen_range(0..=3) {
                edges.push(nonempty_subset(r, v1));
            }
            for _ in 0..r.gen_range(0..=3) {
                edges.push(nonempty_subset(r, v2));
            }
            for _ in 0..r.gen_range(1..=3) {
                edges.push(s1 | nonempty_subset(r, v2));
            }
            for _ in 0..r.gen_range(1..=3) {
                edges.push(nonempty_subset(r, v1) | s2);
            }
            if r.gen_bool(0.5) {
                // an edge inside S1 ∪ S2
                if r.gen_bool(0.5) {
                    edges.push(s1 | nonempty_subset(r, s2));
                } else {
                    edges.push(nonempty_subset(r, s1) | s2);
                }
            }
            finish(n, edges, |sup| DecompositionCase::ThreeSumCase1 {
                v1: v1 & sup,
                v2: v2 & sup,
                s1,
                s2,
            })
        }
        Rule::Case2 | Rule::Case3 => {
            let case3 = rule == Rule::Case3;
            let (v1, v2) = sides(r, n, if case3 { 2 } else { 3 }, 1);
            let sets = disjoint_sets(r, v1, if case3 { 2 } else { 3 });
            let (s0, s1, s2) = if case3 {
                (VertexSet::EMPTY, sets[0], sets[1])
            } else {
                (sets[0], sets[1], sets[2])
            };
            let s = s0 | s1 | s2;
            match r.gen_range(0..4) {
                0 => {}
                1 => edges.push(s),
                _ => {
                    for _ in 0..r.gen_range(1..=3) {
                        edges.push(nonempty_subset(r, s));
                    }
                }
            }
            if edges != [s] || r.gen_bool(0.5) {
                for _ in 0..r.gen_range(1..=3) {
                    let core = nonempty_subset(r, s);
                    edges.push(core | subset(r, v1 - s, 0.3));
                }
            }
            for _ in 0..r.gen_range(0..=3) {
                edges.push(nonempty_subset(r, v2));
            }
            let traces: Vec<VertexSet> = if case3 {
                let mut t = vec![s1, s2, s1 | s2];
                t.shuffle(r);
                t.truncate(r.gen_range(2..=3));
                t
            } else {
                vec![s0 | s1, s0 | s2]
            };
            for t in traces {
                for _ in 0..r.gen_range(1..=3) {
                    edges.push(t | nonempty_subset(r, v2));
                }
            }
            finish(n, edges, |sup| {
                let (v1, v2) = (v1 & sup, v2 & sup);
                if case3 {
                    DecompositionCase::ThreeSumCase3 { v1, v2, s1, s2 }
                } else {
                    DecompositionCase::ThreeSumCase2 { v1, v2, s0, s1, s2 }
                }
            })
        }
    }
}

/// Runs the combiner for `case` with every subproblem answered by Berge
/// multiplication. Returns the dual and the subcase label.
pub fn combine(h: &Hypergraph, case: &DecompositionCase) -> Result<CaseOutcome> {
    let rec = OracleRecurse::default();
    let plain = |dual, subcase| {
        Ok(CaseOutcome {
            dual,
            subcase,
            checks: Default::default(),
        })
    };
    match *case {
        DecompositionCase::OneSum { v1, v2 } => {
            let d = rec.dual_all(&[h.induced(v1), h.induced(v2)])?;
            plain(combine_1sum(&d[0], &d[1]), "-")
        }
        DecompositionCase::TwoSum { v1, v2, s } => {
            let d = rec.dual_all(&[h.induced(v1), h.induced(v2 | s)])?;
            plain(combine_2sum(&d[0], &d[1]), "-")
        }
        DecompositionCase::ThreeSumCase1 { v1, v2, s1, s2 } => {
            solve_case1(h, &Case1Context::new(h, v1, v2, s1, s2), &rec)
        }
        DecompositionCase::ThreeSumCase2 { v1, v2, s0, s1, s2 } => {
            solve_case2(h, &Case2Context { v1, v2, s0, s1, s2 }, &rec)
        }
        DecompositionCase::ThreeSumCase3 { v1, v2, s1, s2 } => solve_case3(
            h,
            &Case2Context {
                v1,
                v2,
                s0: VertexSet::EMPTY,
                s1,
                s2,
            },
            &rec,
        ),
        _ => panic!("not a sum rule: {case:?}"),
    }
}

/// The subcase bucket a combiner label falls into: `I`..`IV`, or `-` for
/// the 1- and 2-sum.
pub fn bucket(subcase: &str) -> &'static str {
    match subcase.split('-').next().unwrap_or("") {
        "I" => "I",
        "II" => "II",
        "III" => "III",
        "IV" => "IV",
        _ => "-",
    }
}
