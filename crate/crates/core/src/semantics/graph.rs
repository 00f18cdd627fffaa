use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::phase::Explorer;
use super::Budget;
use crate::config::Configuration;
use crate::machine::{Machine, StateKind};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Summary of an expanded node's phase.
#[derive(Clone, Debug)]
pub struct Phase {
    pub pivots: Vec<NodeId>,
    pub complete: bool,
    pub internal_leaves: Vec<Configuration>,
    pub explored: usize,
}

#[derive(Clone, Debug)]
pub struct Node {
    pub config: Configuration,
    pub kind: StateKind,
    /// Pivot-edge distance from the root.
    pub depth: usize,
    /// `None` when the node was never expanded (budget or depth cap).
    pub phase: Option<Phase>,
}

impl Node {
    pub fn is_truncated(&self) -> bool {
        self.phase.is_none()
    }

    pub fn pivots(&self) -> &[NodeId] {
        self.phase.as_ref().map_or(&[], |p| &p.pivots)
    }

    pub fn is_complete(&self) -> bool {
        self.phase.as_ref().is_some_and(|p| p.complete)
    }
}

/// Phase roots connected by alternation-pivot edges. Node 0 is the root.
#[derive(Clone, Debug)]
pub struct PivotGraph {
    nodes: Vec<Node>,
    index: FxHashMap<Configuration, NodeId>,
    explored_configs: usize,
}

impl PivotGraph {
    pub const ROOT: NodeId = NodeId(0);

    pub fn root(&self) -> NodeId {
        Self::ROOT
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()]
    }

    pub fn ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len() as u32).map(NodeId)
    }

    pub fn lookup(&self, c: &Configuration) -> Option<NodeId> {
        self.index.get(c).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.iter().map(|n| n.pivots().len()).sum()
    }

    pub fn truncated(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.ids().filter(|&i| self.node(i).is_truncated())
    }

    /// Distinct interior configurations visited across all phases.
    pub fn explored_configs(&self) -> usize {
        self.explored_configs
    }

    /// True when some node was left unexpanded or some phase was cut short.
    pub fn budget_exhausted(&self) -> bool {
        self.nodes.iter().any(|n| !n.is_complete())
    }

    /// Every node expanded and every phase enumerated to the end.
    pub fn is_fully_explored(&self) -> bool {
        !self.budget_exhausted()
    }

    /// Predecessor lists over pivot edges.
    pub fn predecessors(&self) -> Vec<Vec<NodeId>> {
        let mut preds = vec![Vec::new(); self.nodes.len()];
        for id in self.ids() {
            for p in self.node(id).pivots() {
                preds[p.index()].push(id);
            }
        }
        preds
    }
}

/// Worklist closure of phase exploration from `c0`.
///
/// Pivots are always recorded as nodes. A node is expanded only while it is
/// shallower than `max_pivot_depth` and the global configuration cap leaves
/// room; otherwise it stays truncated.
pub fn build_pivot_graph(m: &Machine, c0: &Configuration, budget: &Budget) -> PivotGraph {
    let root = c0.canonicalize(m.blank());
    let mut explorer = Explorer::new(m, budget);
    let mut graph = PivotGraph { nodes: Vec::new(), index: FxHashMap::default(), explored_configs: 0 };
    graph.index.insert(root.clone(), PivotGraph::ROOT);
    graph.nodes.push(Node { kind: m.kind(root.state), config: root, depth: 0, phase: None });

    let mut queue = VecDeque::from([PivotGraph::ROOT]);
    while let Some(id) = queue.pop_front() {
        let node = &graph.nodes[id.index()];
        if node.depth >= budget.max_pivot_depth || !explorer.can_start(&node.config) {
            continue;
        }
        let depth = node.depth;
        let result = explorer.explore(&node.config.clone());
        let mut pivots = Vec::with_capacity(result.pivots.len());
        for p in result.pivots {
            let next = match graph.index.get(&p) {
                Some(&existing) => existing,
                None => {
                    let new_id = NodeId(graph.nodes.len() as u32);
                    graph.index.insert(p.clone(), new_id);
                    graph.nodes.push(Node { kind: m.kind(p.state), config: p, depth: depth + 1, phase: None });
                    queue.push_back(new_id);
                    new_id
                }
            };
            pivots.push(next);
        }
        graph.nodes[id.index()].phase = Some(Phase {
            pivots,
            complete: result.complete,
            internal_leaves: result.internal_leaves,
            explored: result.explored,
        });
    }
    graph.explored_configs = explorer.explored_configs();
    graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{initial_config, input_symbols};
    use crate::zoo;

    #[test]
    fn vacuous_universal_machine_is_a_single_complete_node() {
        let m = zoo::universal_only();
        let g = build_pivot_graph(&m, &initial_config(&m, &input_symbols("a")).unwrap(), &Budget::default());
        assert_eq!(g.len(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_fully_explored());
    }

    #[test]
    fn two_phase_machine_has_one_pivot_edge() {
        let m = zoo::two_phase();
        let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::default());
        assert_eq!(g.len(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.node(NodeId(1)).kind, StateKind::Universal);
        assert!(g.is_fully_explored());
    }

    #[test]
    fn config_cap_of_one_truncates_the_first_pivot() {
        let m = zoo::two_phase();
        let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::new(1, 100, 100));
        assert_eq!(g.len(), 2);
        assert!(!g.node(PivotGraph::ROOT).is_truncated());
        assert_eq!(g.truncated().collect::<Vec<_>>(), vec![NodeId(1)]);
    }

    #[test]
    fn depth_cap_truncates_deeper_nodes() {
        let m = zoo::mutual_pivot();
        let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::new(100, 100, 1));
        assert_eq!(g.len(), 2);
        assert!(g.node(NodeId(1)).is_truncated());
    }

    #[test]
    fn mutual_pivot_closes_a_two_cycle() {
        let m = zoo::mutual_pivot();
        let g = build_pivot_graph(&m, &initial_config(&m, &[]).unwrap(), &Budget::default());
        assert_eq!(g.len(), 2);
        assert_eq!(g.node(NodeId(1)).pivots(), &[PivotGraph::ROOT]);
        assert!(g.is_fully_explored());
    }

    #[test]
    fn edges_alternate_kinds() {
        let m = zoo::even_length_acceptor();
        for w in ["", "a", "aa", "aaa"] {
            let g = build_pivot_graph(&m, &initial_config(&m, &input_symbols(w)).unwrap(), &Budget::default());
            for id in g.ids() {
                for p in g.node(id).pivots() {
                    assert_ne!(g.node(id).kind, g.node(*p).kind);
                }
            }
        }
    }
}
