use super::{PivotGraph, SolveResult, Verdict};
use crate::machine::StateKind;

/// Least set closed under the pivot-level closure conditions for `favored`:
/// a `favored`-kind node joins once some pivot is in the set, an
/// opposite-kind node once its phase is complete and every pivot is in the
/// set. Synchronous rounds; returns the set and the number of rounds that
/// added something.
fn least_closed_set(g: &PivotGraph, favored: StateKind) -> (Vec<bool>, usize) {
    let n = g.len();
    let mut inside = vec![false; n];
    let mut rounds = 0;
    loop {
        let mut next = inside.clone();
        let mut grew = false;
        for id in g.ids() {
            let i = id.index();
            if inside[i] {
                continue;
            }
            let node = g.node(id);
            let Some(phase) = &node.phase else { continue };
            let joins = if node.kind == favored {
                phase.pivots.iter().any(|p| inside[p.index()])
            } else {
                phase.complete && phase.pivots.iter().all(|p| inside[p.index()])
            };
            if joins {
                next[i] = true;
                grew = true;
            }
        }
        if !grew {
            return (inside, rounds);
        }
        inside = next;
        rounds += 1;
    }
}

/// The accepted and rejected sets as computed, before they are merged
/// into verdicts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixpointSets {
    pub ac: Vec<bool>,
    pub rc: Vec<bool>,
    pub ac_iterations: usize,
    pub rc_iterations: usize,
}

/// AC and RC by Kleene iteration, each computed on its own.
pub fn fixpoint_sets(g: &PivotGraph) -> FixpointSets {
    let (ac, ac_iterations) = least_closed_set(g, StateKind::Existential);
    let (rc, rc_iterations) = least_closed_set(g, StateKind::Universal);
    FixpointSets { ac, rc, ac_iterations, rc_iterations }
}

/// AC and RC by Kleene iteration. Truncated nodes never enter either set.
pub fn solve_fixpoint(g: &PivotGraph) -> SolveResult {
    let FixpointSets { ac, rc, ac_iterations, rc_iterations } = fixpoint_sets(g);
    let verdicts = ac
        .iter()
        .zip(&rc)
        .map(|(&a, &r)| match (a, r) {
            (true, false) => Verdict::Accepted,
            (false, true) => Verdict::Rejected,
            (false, false) => Verdict::Unknown,
            (true, true) => unreachable!("configuration both accepted and rejected"),
        })
        .collect();
    SolveResult { verdicts, ac_iterations, rc_iterations, budget_exhausted: g.budget_exhausted() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::initial_config;
    use crate::semantics::{build_pivot_graph, Budget};
    use crate::zoo;

    fn root_verdict(m: &crate::machine::Machine) -> Verdict {
        let g = build_pivot_graph(m, &initial_config(m, &[]).unwrap(), &Budget::default());
        solve_fixpoint(&g).root()
    }

    #[test]
    fn self_loop_is_vacuously_rejected() {
        assert_eq!(root_verdict(&zoo::existential_self_loop()), Verdict::Rejected);
    }

    #[test]
    fn mutual_pivot_is_unknown() {
        assert_eq!(root_verdict(&zoo::mutual_pivot()), Verdict::Unknown);
    }

    #[test]
    fn two_phase_accepts_through_its_pivot() {
        let m = zoo::two_phase();
        let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::default());
        let s = solve_fixpoint(&g);
        assert_eq!(s.verdicts, vec![Verdict::Accepted, Verdict::Accepted]);
        assert_eq!(s.ac_iterations, 2);
        assert_eq!(s.rc_iterations, 0);
        assert!(!s.budget_exhausted);
    }

    #[test]
    fn truncated_pivot_blocks_every_verdict() {
        let m = zoo::two_phase();
        let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::new(1, 10, 10));
        let s = solve_fixpoint(&g);
        assert_eq!(s.verdicts, vec![Verdict::Unknown, Verdict::Unknown]);
        assert!(s.budget_exhausted);
    }
}
