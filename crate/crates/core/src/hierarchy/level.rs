use std::fmt;

use crate::error::InputError;
use crate::machine::{Machine, StateKind, Symbol};
use crate::semantics::{build_pivot_graph, Budget, NodeId, PivotGraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    Sigma(usize),
    Pi(usize),
}

impl Level {
    fn new(start: StateKind, k: usize) -> Level {
        match start {
            StateKind::Existential => Level::Sigma(k),
            StateKind::Universal => Level::Pi(k),
        }
    }

    pub fn pivots(self) -> usize {
        match self {
            Level::Sigma(k) | Level::Pi(k) => k,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Sigma(k) => write!(f, "Sigma_{k}"),
            Level::Pi(k) => write!(f, "Pi_{k}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelReport {
    pub start_kind: StateKind,
    /// Most pivots along any explored branch; `None` on a pivot cycle.
    pub max_pivots: Option<usize>,
    /// Most pivots along a branch ending in a fully enumerated phase.
    pub complete_branch_max: Option<usize>,
    pub pivot_cycle: bool,
    pub budget_exhausted: bool,
    /// Asserted only when everything was explored and no cycle was found.
    pub claim: Option<Level>,
}

impl LevelReport {
    /// Level suggested by the explored part when the full claim is withheld
    /// because the budget ran out.
    pub fn observed(&self) -> Option<Level> {
        self.max_pivots.map(|k| Level::new(self.start_kind, k))
    }
}

/// Longest pivot-edge distance from the root to every node, or `None` on a cycle.
fn longest_paths(g: &PivotGraph) -> Option<Vec<usize>> {
    let n = g.len();
    let mut indegree = vec![0usize; n];
    for id in g.ids() {
        for p in g.node(id).pivots() {
            indegree[p.index()] += 1;
        }
    }
    let mut order: Vec<NodeId> = g.ids().filter(|i| indegree[i.index()] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let id = order[head];
        head += 1;
        for p in g.node(id).pivots() {
            indegree[p.index()] -= 1;
            if indegree[p.index()] == 0 {
                order.push(*p);
            }
        }
    }
    if order.len() < n {
        return None;
    }
    let mut dist = vec![None::<usize>; n];
    dist[PivotGraph::ROOT.index()] = Some(0);
    for id in order {
        let Some(d) = dist[id.index()] else { continue };
        for p in g.node(id).pivots() {
            let slot = &mut dist[p.index()];
            *slot = Some(slot.map_or(d + 1, |x| x.max(d + 1)));
        }
    }
    Some(dist.into_iter().map(|d| d.unwrap_or(0)).collect())
}

/// Counts alternation pivots along the explored branches of `m` on `w`.
pub fn classify_level(m: &Machine, w: &[Symbol], b: &Budget) -> Result<LevelReport, InputError> {
    let c0 = crate::config::initial_config(m, w)?;
    let g = build_pivot_graph(m, &c0, b);
    let start_kind = g.node(PivotGraph::ROOT).kind;
    let dist = longest_paths(&g);
    let max_pivots = dist.as_ref().map(|d| d.iter().copied().max().unwrap_or(0));
    let complete_branch_max = dist
        .as_ref()
        .map(|d| g.ids().filter(|&i| g.node(i).is_complete()).map(|i| d[i.index()]).max().unwrap_or(0));
    let budget_exhausted = g.budget_exhausted();
    let pivot_cycle = dist.is_none();
    let claim = match max_pivots {
        Some(k) if !budget_exhausted => Some(Level::new(start_kind, k)),
        _ => None,
    };
    Ok(LevelReport { start_kind, max_pivots, complete_branch_max, pivot_cycle, budget_exhausted, claim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::input_symbols;
    use crate::hierarchy::compile_sigma1;
    use crate::zoo;

    #[test]
    fn universal_only_is_pi_zero() {
        let r = classify_level(&zoo::universal_only(), &input_symbols("ab"), &Budget::default()).unwrap();
        assert_eq!(r.claim, Some(Level::Pi(0)));
        assert_eq!(r.max_pivots, Some(0));
    }

    #[test]
    fn mutual_pivot_has_no_level() {
        let r = classify_level(&zoo::mutual_pivot(), &[], &Budget::default()).unwrap();
        assert!(r.pivot_cycle);
        assert_eq!(r.claim, None);
        assert_eq!(r.observed(), None);
    }

    #[test]
    fn two_phase_is_sigma_one() {
        let r = classify_level(&zoo::two_phase(), &[], &Budget::default()).unwrap();
        assert_eq!(r.claim, Some(Level::Sigma(1)));
    }

    #[test]
    fn guess_and_check_stays_within_one_pivot() {
        let m = compile_sigma1(&zoo::matrices::always_accept(1), 1).unwrap();
        let r = classify_level(&m, &input_symbols("a"), &Budget::new(5000, 1000, 100)).unwrap();
        assert!(r.budget_exhausted);
        assert_eq!(r.claim, None);
        assert_eq!(r.observed(), Some(Level::Sigma(1)));
        assert_eq!(r.complete_branch_max, Some(1));
    }
}
