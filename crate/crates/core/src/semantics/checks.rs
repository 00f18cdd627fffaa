use super::{NodeId, PivotGraph, SolveResult, Verdict};
use crate::machine::StateKind;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureViolation {
    pub node: NodeId,
    pub found: Verdict,
    /// The verdict the node's pivots call for.
    pub expected: Verdict,
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct ClosureReport {
    pub checked: usize,
    pub skipped_truncated: usize,
    pub violations: Vec<ClosureViolation>,
}

impl ClosureReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every expanded node against its pivots: an existential node is
/// accepted exactly when some pivot is, and rejected exactly when its phase is
/// complete and every pivot is rejected; universal nodes dually.
pub fn check_local_closure(g: &PivotGraph, s: &SolveResult) -> ClosureReport {
    let mut report = ClosureReport::default();
    for id in g.ids() {
        let node = g.node(id);
        let Some(phase) = &node.phase else {
            report.skipped_truncated += 1;
            continue;
        };
        report.checked += 1;
        let any = |v: Verdict| phase.pivots.iter().any(|p| s.verdict(*p) == v);
        let all = |v: Verdict| phase.complete && phase.pivots.iter().all(|p| s.verdict(*p) == v);
        let (accepted, rejected) = match node.kind {
            StateKind::Existential => (any(Verdict::Accepted), all(Verdict::Rejected)),
            StateKind::Universal => (all(Verdict::Accepted), any(Verdict::Rejected)),
        };
        let expected = match (accepted, rejected) {
            (true, false) => Verdict::Accepted,
            (false, true) => Verdict::Rejected,
            (false, false) => Verdict::Unknown,
            // Only reachable from an inconsistent verdict map; flag whatever was found.
            (true, true) => s.verdict(id).swap(),
        };
        if s.verdict(id) != expected {
            report.violations.push(ClosureViolation { node: id, found: s.verdict(id), expected });
        }
    }
    report
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Wellfounded {
    Yes,
    No,
    Unknown,
}

/// Alternation well-foundedness of the explored part: `No` on any pivot
/// cycle, `Yes` when the graph is acyclic and fully explored.
pub fn is_alternation_wf(g: &PivotGraph) -> Wellfounded {
    if has_pivot_cycle(g) {
        Wellfounded::No
    } else if g.is_fully_explored() {
        Wellfounded::Yes
    } else {
        Wellfounded::Unknown
    }
}

pub(crate) fn has_pivot_cycle(g: &PivotGraph) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark = vec![Mark::New; g.len()];
    for start in g.ids() {
        if mark[start.index()] != Mark::New {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        mark[start.index()] = Mark::Open;
        while let Some(&(id, next)) = stack.last() {
            let pivots = g.node(id).pivots();
            if next < pivots.len() {
                let p = pivots[next];
                stack.last_mut().unwrap().1 += 1;
                match mark[p.index()] {
                    Mark::Open => return true,
                    Mark::New => {
                        mark[p.index()] = Mark::Open;
                        stack.push((p, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[id.index()] = Mark::Done;
                stack.pop();
            }
        }
    }
    false
}
