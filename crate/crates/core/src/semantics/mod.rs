//! Phases, pivot graphs and the three-valued acceptance semantics.

mod checks;
mod fixpoint;
mod game;
mod graph;
mod phase;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::{initial_config, Configuration};
use crate::error::InputError;
use crate::machine::{Machine, Symbol};

pub use checks::{check_local_closure, is_alternation_wf, ClosureReport, ClosureViolation, Wellfounded};
pub use fixpoint::{fixpoint_sets, solve_fixpoint, FixpointSets};
pub use game::solve_game;
pub use graph::{build_pivot_graph, Node, NodeId, Phase, PivotGraph};
pub use phase::{explore_phase, PhaseResult};

/// Caps that keep exploration finite.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Budget {
    /// Distinct interior configurations across all phases.
    pub max_configs: usize,
    /// Distinct configurations inside a single phase.
    pub max_phase_steps: usize,
    /// Pivot edges between the root and an expanded node.
    pub max_pivot_depth: usize,
}

impl Budget {
    pub fn new(max_configs: usize, max_phase_steps: usize, max_pivot_depth: usize) -> Self {
        assert!(max_configs > 0 && max_phase_steps > 0 && max_pivot_depth > 0, "budget fields must be positive");
        Budget { max_configs, max_phase_steps, max_pivot_depth }
    }

    /// Same cap on every field.
    pub fn uniform(n: usize) -> Self {
        Budget::new(n, n, n)
    }

    /// Multiplies every field by `factor`.
    pub fn scaled(&self, factor: usize) -> Self {
        Budget::new(self.max_configs * factor, self.max_phase_steps * factor, self.max_pivot_depth * factor)
    }

    /// Adds `extra` to every field.
    pub fn plus(&self, extra: usize) -> Self {
        Budget::new(self.max_configs + extra, self.max_phase_steps + extra, self.max_pivot_depth + extra)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(2000, 500, 1000)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
    Unknown,
}

impl Verdict {
    /// Accepted and Rejected trade places; Unknown stays.
    pub fn swap(self) -> Verdict {
        match self {
            Verdict::Accepted => Verdict::Rejected,
            Verdict::Rejected => Verdict::Accepted,
            Verdict::Unknown => Verdict::Unknown,
        }
    }

    pub fn is_known(self) -> bool {
        self != Verdict::Unknown
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Accepted => "accepted",
            Verdict::Rejected => "rejected",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-node verdicts plus how the fixpoint got there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveResult {
    pub verdicts: Vec<Verdict>,
    pub ac_iterations: usize,
    pub rc_iterations: usize,
    pub budget_exhausted: bool,
}

impl SolveResult {
    pub fn verdict(&self, id: NodeId) -> Verdict {
        self.verdicts[id.index()]
    }

    pub fn root(&self) -> Verdict {
        self.verdicts[PivotGraph::ROOT.index()]
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.verdicts.iter().filter(|&&x| x == v).count()
    }
}

/// A pivot graph together with its fixpoint solution.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: PivotGraph,
    pub solution: SolveResult,
}

impl Analysis {
    pub fn verdict(&self) -> Verdict {
        self.solution.root()
    }
}

/// Builds and solves the pivot graph of an arbitrary configuration.
pub fn analyze_config(m: &Machine, c: &Configuration, b: &Budget) -> Analysis {
    let graph = build_pivot_graph(m, c, b);
    let solution = solve_fixpoint(&graph);
    Analysis { graph, solution }
}

/// Builds and solves the pivot graph of `m` on input `w`.
pub fn analyze(m: &Machine, w: &[Symbol], b: &Budget) -> Result<Analysis, InputError> {
    Ok(analyze_config(m, &initial_config(m, w)?, b))
}

/// Verdict of the initial configuration for `w`.
pub fn decide(m: &Machine, w: &[Symbol], b: &Budget) -> Result<Verdict, InputError> {
    analyze(m, w, b).map(|a| a.verdict())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::input_symbols;
    use crate::zoo;

    #[test]
    fn universal_only_accepts_everything() {
        let m = zoo::universal_only();
        for w in ["", "a", "abc", "bab"] {
            assert_eq!(decide(&m, &input_symbols(w), &Budget::uniform(1)).unwrap(), Verdict::Accepted);
        }
    }

    #[test]
    fn existential_only_rejects_everything() {
        let m = zoo::existential_only();
        for w in ["", "ab", "bbb"] {
            assert_eq!(decide(&m, &input_symbols(w), &Budget::default()).unwrap(), Verdict::Rejected);
        }
    }

    #[test]
    fn tiny_budget_leaves_verdict_unknown() {
        let m = zoo::right_runner(crate::machine::StateKind::Universal);
        assert_eq!(decide(&m, &[], &Budget::uniform(5)).unwrap(), Verdict::Unknown);
    }

    #[test]
    fn bad_input_is_reported() {
        let m = zoo::universal_only();
        assert!(decide(&m, &input_symbols("z"), &Budget::default()).is_err());
    }

    #[test]
    fn swap_is_an_involution() {
        for v in [Verdict::Accepted, Verdict::Rejected, Verdict::Unknown] {
            assert_eq!(v.swap().swap(), v);
        }
        assert_eq!(Verdict::Unknown.swap(), Verdict::Unknown);
    }
}
