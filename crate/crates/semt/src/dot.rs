//! Graphviz DOT export of a verified labeling.
//!
//! Node text is the vertex label integer and each edge carries its edge
//! label, so rendering reproduces the numbers a hand drawing of the
//! labeling would show. Node identifiers are the structural vertex names,
//! emitted in graph order; output is byte-identical across runs.

use thiserror::Error;

use crate::labeling::{verify_semt, TotalLabeling, Violation};

#[derive(Debug, Error)]
pub enum DotError {
    #[error("labeling fails verification ({} violation(s))", .0.len())]
    NotValid(Vec<Violation>),
}

pub fn export_dot(total: &TotalLabeling) -> Result<String, DotError> {
    let report = verify_semt(total);
    if !report.valid {
        return Err(DotError::NotValid(report.violations));
    }
    let graph = total.graph();
    let mut out = String::new();
    out.push_str("graph semt {\n");
    out.push_str("  node [shape=circle];\n");
    for (&v, &label) in graph.vertices().iter().zip(total.vertex_labels()) {
        out.push_str(&format!("  {v} [label=\"{label}\"];\n"));
    }
    for (&(u, v), &label) in graph.edges().iter().zip(total.edge_labels()) {
        out.push_str(&format!("  {u} -- {v} [label=\"{label}\"];\n"));
    }
    out.push_str("}\n");
    Ok(out)
}
