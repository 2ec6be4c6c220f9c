use crate::decomp::{detect_reduction, DecompositionCase};
use crate::hypergraph::{Hypergraph, ReductionStep};

/// A simplification of `h` and the step that maps `Tr` of the result back to
/// `Tr(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: Hypergraph,
    pub step: ReductionStep,
}

impl Reduction {
    /// `Tr(h)` from `Tr(reduced)`.
    pub fn combine(&self, reduced_dual: &Hypergraph) -> Hypergraph {
        self.step.expand(reduced_dual)
    }
}

/// Step for a reduction case returned by detection, if it is one.
pub(crate) fn step_for(case: &DecompositionCase) -> Option<ReductionStep> {
    match *case {
        DecompositionCase::IdenticalVertices { kept, dropped } => {
            Some(ReductionStep::IdenticalVertices { kept, dropped })
        }
        DecompositionCase::SingletonEdge { vertex } => {
            Some(ReductionStep::SingletonEdge { vertex })
        }
        DecompositionCase::DegreeOneVertex { vertex, edge } => {
            Some(ReductionStep::DegreeOneVertex { vertex, edge })
        }
        _ => None,
    }
}

/// Applies the first of identical vertices, singleton edge or degree-one
/// vertex that fits the minimized `h`.
pub fn reduce_special(h: &Hypergraph) -> Option<Reduction> {
    let h = h.minimized();
    let step = step_for(&detect_reduction(&h)?)?;
    Some(Reduction {
        reduced: step.apply(&h).minimized(),
        step,
    })
}
