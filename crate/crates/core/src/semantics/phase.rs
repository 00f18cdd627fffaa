use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use super::Budget;
use crate::config::{for_each_successor, Configuration};
use crate::machine::{Machine, StateKind};

/// One phase: everything reachable from `root` through configurations of
/// the root's kind, and the alternation pivots where that run ends.
#[derive(Clone, Debug)]
pub struct PhaseResult {
    pub root: Configuration,
    pub kind: StateKind,
    /// First opposite-kind configurations reached, in discovery order.
    pub pivots: Vec<Configuration>,
    /// False only when a budget cap stopped the enumeration.
    pub complete: bool,
    /// Same-kind dead ends met inside the phase.
    pub internal_leaves: Vec<Configuration>,
    /// Distinct same-kind configurations visited, root included.
    pub explored: usize,
}

/// Phase enumeration sharing a global count of distinct interior configurations.
pub(crate) struct Explorer<'m> {
    machine: &'m Machine,
    seen: FxHashSet<Configuration>,
    max_configs: usize,
    max_phase_steps: usize,
}

impl<'m> Explorer<'m> {
    pub(crate) fn new(machine: &'m Machine, budget: &Budget) -> Self {
        Explorer {
            machine,
            seen: FxHashSet::default(),
            max_configs: budget.max_configs,
            max_phase_steps: budget.max_phase_steps,
        }
    }

    pub(crate) fn explored_configs(&self) -> usize {
        self.seen.len()
    }

    /// Whether a phase rooted at `root` may start without breaking the global cap.
    pub(crate) fn can_start(&self, root: &Configuration) -> bool {
        self.seen.len() < self.max_configs || self.seen.contains(root)
    }

    fn admit(&mut self, c: &Configuration) -> bool {
        if self.seen.contains(c) {
            return true;
        }
        if self.seen.len() >= self.max_configs {
            return false;
        }
        self.seen.insert(c.clone());
        true
    }

    /// Enumerates the phase of `root`, breadth-first over branching
    /// configurations; a configuration with a single successor is followed
    /// before anything else in the queue, so deterministic stretches cost no
    /// depth. Pivots are recorded but never expanded; revisited
    /// configurations close cycles.
    pub(crate) fn explore(&mut self, root: &Configuration) -> PhaseResult {
        let m = self.machine;
        let kind = m.kind(root.state);
        let mut visited: FxHashSet<Configuration> = FxHashSet::default();
        let mut pivot_set: FxHashSet<Configuration> = FxHashSet::default();
        let mut pivots = Vec::new();
        let mut internal_leaves = Vec::new();
        let mut complete = self.admit(root);
        let mut queue = VecDeque::new();
        if complete {
            visited.insert(root.clone());
            queue.push_back(root.clone());
        }
        let mut fresh = Vec::new();
        while let Some(c) = queue.pop_front() {
            let mut count = 0;
            for_each_successor(m, &c, |_, next| {
                count += 1;
                if m.kind(next.state) != kind {
                    if pivot_set.insert(next.clone()) {
                        pivots.push(next);
                    }
                    return;
                }
                if visited.contains(&next) {
                    return;
                }
                if visited.len() >= self.max_phase_steps || !self.admit(&next) {
                    complete = false;
                    return;
                }
                visited.insert(next.clone());
                fresh.push(next);
            });
            match count {
                0 => internal_leaves.push(c),
                1 => fresh.drain(..).for_each(|n| queue.push_front(n)),
                _ => queue.extend(fresh.drain(..)),
            }
        }
        PhaseResult { root: root.clone(), kind, pivots, complete, internal_leaves, explored: visited.len() }
    }
}

/// Enumerates the phase of `c` under `budget`. `c` should be canonical.
pub fn explore_phase(m: &Machine, c: &Configuration, budget: &Budget) -> PhaseResult {
    Explorer::new(m, budget).explore(&c.canonicalize(m.blank()))
}
