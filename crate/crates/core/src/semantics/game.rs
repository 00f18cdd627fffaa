use std::collections::VecDeque;

use super::{PivotGraph, SolveResult, Verdict};
use crate::machine::StateKind;

/// Attractor of `player`: nodes from which `player` forces a win. The player
/// moves at its own nodes and wins at an opponent node once the opponent's
/// phase is complete and every move lands in the attractor. Truncated nodes
/// belong to nobody. Returns the region and the number of worklist pops.
fn attractor(g: &PivotGraph, player: StateKind, preds: &[Vec<super::NodeId>]) -> (Vec<bool>, usize) {
    let n = g.len();
    let mut won = vec![false; n];
    // Moves still escaping the attractor, per opponent node.
    let mut open = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for id in g.ids() {
        let node = g.node(id);
        let Some(phase) = &node.phase else { continue };
        if node.kind != player && phase.complete {
            let mut distinct = phase.pivots.clone();
            distinct.sort_unstable();
            distinct.dedup();
            open[id.index()] = distinct.len();
            if distinct.is_empty() {
                won[id.index()] = true;
                queue.push_back(id);
            }
        }
    }
    let mut pops = 0;
    while let Some(id) = queue.pop_front() {
        pops += 1;
        for &p in &preds[id.index()] {
            let i = p.index();
            if won[i] {
                continue;
            }
            let node = g.node(p);
            if node.kind == player {
                won[i] = true;
                queue.push_back(p);
            } else if open[i] != usize::MAX {
                open[i] -= 1;
                if open[i] == 0 {
                    won[i] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    (won, pops)
}

/// Verdicts as winning regions of the pivot game: the existential player's
/// attractor is accepted, the universal player's rejected.
pub fn solve_game(g: &PivotGraph) -> SolveResult {
    let mut preds = g.predecessors();
    for p in &mut preds {
        p.sort_unstable();
        p.dedup();
    }
    let (exists_wins, ac_iterations) = attractor(g, StateKind::Existential, &preds);
    let (forall_wins, rc_iterations) = attractor(g, StateKind::Universal, &preds);
    let verdicts = exists_wins
        .iter()
        .zip(&forall_wins)
        .map(|(&e, &a)| {
            if e {
                Verdict::Accepted
            } else if a {
                Verdict::Rejected
            } else {
                Verdict::Unknown
            }
        })
        .collect();
    SolveResult { verdicts, ac_iterations, rc_iterations, budget_exhausted: g.budget_exhausted() }
}
