//! Text formats for machines and formula specs, and pivot-graph exports.

mod export;
mod machine_text;
mod spec_text;

pub use export::{export_graph, EdgeExport, ExportFormat, GraphExport, NodeExport, GRAPH_SCHEMA};
pub use machine_text::{parse_machine, serialize_machine, COMMENT};
pub use spec_text::{parse_spec, serialize_spec, SpecDocument, DEFAULT_STEP_BOUND};
