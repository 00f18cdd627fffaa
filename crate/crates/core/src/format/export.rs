use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::machine::{Machine, StateKind};
use crate::semantics::{PivotGraph, SolveResult, Verdict};

/// Value of the `schema` field in structured exports.
pub const GRAPH_SCHEMA: &str = "atm.pivot-graph.v1";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExportFormat {
    Dot,
    /// JSON following [`GRAPH_SCHEMA`].
    Structured,
}

/// A solved pivot graph in serializable form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphExport {
    pub schema: String,
    pub machine: String,
    pub root: u32,
    pub budget_exhausted: bool,
    pub ac_iterations: usize,
    pub rc_iterations: usize,
    pub nodes: Vec<NodeExport>,
    pub edges: Vec<EdgeExport>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NodeExport {
    pub id: u32,
    pub state: String,
    pub kind: StateKind,
    /// The configuration, one `left[head]right` block per tape.
    pub config: String,
    pub depth: usize,
    pub verdict: Verdict,
    pub truncated: bool,
    pub complete: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EdgeExport {
    pub from: u32,
    pub to: u32,
}

impl GraphExport {
    pub fn new(m: &Machine, g: &PivotGraph, s: &SolveResult) -> Self {
        let nodes = g
            .ids()
            .map(|id| {
                let n = g.node(id);
                NodeExport {
                    id: id.0,
                    state: m.state_name(n.config.state).to_string(),
                    kind: n.kind,
                    config: n.config.display(m).to_string(),
                    depth: n.depth,
                    verdict: s.verdict(id),
                    truncated: n.is_truncated(),
                    complete: n.is_complete(),
                }
            })
            .collect();
        let edges = g
            .ids()
            .flat_map(|id| g.node(id).pivots().iter().map(move |p| EdgeExport { from: id.0, to: p.0 }))
            .collect();
        GraphExport {
            schema: GRAPH_SCHEMA.to_string(),
            machine: m.name().to_string(),
            root: PivotGraph::ROOT.0,
            budget_exhausted: s.budget_exhausted,
            ac_iterations: s.ac_iterations,
            rc_iterations: s.rc_iterations,
            nodes,
            edges,
        }
    }

    /// Verdicts indexed by node id.
    pub fn verdicts(&self) -> Vec<Verdict> {
        let mut v = vec![Verdict::Unknown; self.nodes.len()];
        for n in &self.nodes {
            v[n.id as usize] = n.verdict;
        }
        v
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("export is plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {} {{", quote(&self.machine));
        s.push_str("\trankdir=TB;\n");
        s.push_str("\tnode [style=filled, fontname=\"monospace\"];\n");
        for n in &self.nodes {
            let shape = match n.kind {
                StateKind::Existential => "diamond",
                StateKind::Universal => "box",
            };
            let color = match n.verdict {
                Verdict::Accepted => "palegreen",
                Verdict::Rejected => "lightcoral",
                Verdict::Unknown => "lightgray",
            };
            let mut style = String::from("filled");
            if n.truncated {
                style.push_str(",dashed");
            } else if !n.complete {
                style.push_str(",dotted");
            }
            let _ = write!(
                s,
                "\tn{} [label={}, shape={shape}, fillcolor={color}, style=\"{style}\"",
                n.id,
                quote(&format!("{}\n{}", n.config, n.verdict))
            );
            if n.id == self.root {
                s.push_str(", peripheries=2");
            }
            s.push_str("];\n");
        }
        for e in &self.edges {
            let _ = writeln!(s, "\tn{} -> n{};", e.from, e.to);
        }
        s.push_str("}\n");
        s
    }
}

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders a solved graph as DOT or as structured JSON.
pub fn export_graph(m: &Machine, g: &PivotGraph, s: &SolveResult, format: ExportFormat) -> String {
    let e = GraphExport::new(m, g, s);
    match format {
        ExportFormat::Dot => e.to_dot(),
        ExportFormat::Structured => e.to_json(),
    }
}
