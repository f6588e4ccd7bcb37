//! JSON interchange format for total labelings.
//!
//! ```json
//! {
//!   "family": "5;2,2,2,2,5",
//!   "vertex_labels": [{"vertex": "a1", "label": 1}, …],
//!   "edge_labels": [{"u": "a1", "v": "a2", "label": 35}, …],
//!   "magic_constant": 40
//! }
//! ```
//!
//! Vertex names follow the grammar `a<i>` (cycle) and `a<i>_<j>` (pendant).
//! Parsing checks *structure* only — every vertex and edge of the family
//! covered exactly once — and leaves label values untouched, so corrupted
//! labelings survive the trip into [`crate::labeling::verify_semt`].
//! Serialization is canonical (graph vertex/edge order), which makes
//! parse → serialize → parse the identity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{build_unicyclic, GraphError, UnicyclicFamily, VertexId};
use crate::labeling::{LabelingError, TotalLabeling};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("vertex {0} is not part of family {1}")]
    UnknownVertex(String, String),
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(String),
    #[error("vertex {0} has no label entry")]
    MissingVertex(String),
    #[error("edge {0}-{1} is not part of family {2}")]
    UnknownEdge(String, String, String),
    #[error("edge {0}-{1} appears more than once")]
    DuplicateEdge(String, String),
    #[error("edge {0}-{1} has no label entry")]
    MissingEdge(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabelEntry {
    pub vertex: String,
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabelEntry {
    pub u: String,
    pub v: String,
    pub label: i64,
}

/// On-disk form of a total labeling. The family string is the interchange
/// key; labels are raw candidate data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub family: String,
    pub vertex_labels: Vec<VertexLabelEntry>,
    pub edge_labels: Vec<EdgeLabelEntry>,
    pub magic_constant: i64,
}

impl LabelingDocument {
    /// Canonical document: vertices and edges in graph order.
    pub fn from_total(total: &TotalLabeling) -> Self {
        let graph = total.graph();
        let vertex_labels = graph
            .vertices()
            .iter()
            .zip(total.vertex_labels())
            .map(|(&v, &label)| VertexLabelEntry {
                vertex: v.to_string(),
                label,
            })
            .collect();
        let edge_labels = graph
            .edges()
            .iter()
            .zip(total.edge_labels())
            .map(|(&(u, v), &label)| EdgeLabelEntry {
                u: u.to_string(),
                v: v.to_string(),
                label,
            })
            .collect();
        LabelingDocument {
            family: graph.family().to_string(),
            vertex_labels,
            edge_labels,
            magic_constant: total.magic_constant(),
        }
    }

    /// Rebuilds the candidate labeling, checking structural coverage.
    pub fn to_total(&self) -> Result<TotalLabeling, DocumentError> {
        let family: UnicyclicFamily = self.family.parse()?;
        let graph = build_unicyclic(&family);

        let mut vertex_labels: Vec<Option<i64>> = vec![None; graph.p()];
        for entry in &self.vertex_labels {
            let id: VertexId = entry.vertex.parse()?;
            let idx = graph.vertex_index(id).ok_or_else(|| {
                DocumentError::UnknownVertex(entry.vertex.clone(), self.family.clone())
            })?;
            if vertex_labels[idx].is_some() {
                return Err(DocumentError::DuplicateVertex(entry.vertex.clone()));
            }
            vertex_labels[idx] = Some(entry.label);
        }
        let vertex_labels = vertex_labels
            .into_iter()
            .enumerate()
            .map(|(idx, slot)| {
                slot.ok_or_else(|| DocumentError::MissingVertex(graph.vertices()[idx].to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;

        let mut edge_labels: Vec<Option<i64>> = vec![None; graph.q()];
        for entry in &self.edge_labels {
            let u: VertexId = entry.u.parse()?;
            let v: VertexId = entry.v.parse()?;
            let u_idx = graph.vertex_index(u);
            let v_idx = graph.vertex_index(v);
            let edge = match (u_idx, v_idx) {
                (Some(a), Some(b)) => graph
                    .edge_indices()
                    .iter()
                    .position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)),
                _ => None,
            };
            let edge = edge.ok_or_else(|| {
                DocumentError::UnknownEdge(entry.u.clone(), entry.v.clone(), self.family.clone())
            })?;
            if edge_labels[edge].is_some() {
                return Err(DocumentError::DuplicateEdge(
                    entry.u.clone(),
                    entry.v.clone(),
                ));
            }
            edge_labels[edge] = Some(entry.label);
        }
        let edge_labels = edge_labels
            .into_iter()
            .enumerate()
            .map(|(e, slot)| {
                slot.ok_or_else(|| {
                    let (u, v) = graph.edges()[e];
                    DocumentError::MissingEdge(u.to_string(), v.to_string())
                })
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(TotalLabeling::from_parts(
            graph,
            vertex_labels,
            edge_labels,
            self.magic_constant,
        )?)
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Deterministic pretty-printed JSON with a trailing newline.
    pub fn to_json_pretty(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::label_g_plus;
    use crate::labeling::verify_semt;

    #[test]
    fn document_round_trips_exactly() {
        let total = label_g_plus(5, 2, 3).unwrap();
        let doc = LabelingDocument::from_total(&total);
        let json = doc.to_json_pretty();
        let reparsed = LabelingDocument::from_json(&json).unwrap();
        assert_eq!(reparsed, doc);
        assert_eq!(reparsed.to_json_pretty(), json);
        let rebuilt = reparsed.to_total().unwrap();
        assert_eq!(&rebuilt, &total);
        assert!(verify_semt(&rebuilt).valid);
    }

    #[test]
    fn shuffled_entries_and_flipped_edges_parse_to_same_labeling() {
        let total = label_g_plus(3, 1, 1).unwrap();
        let mut doc = LabelingDocument::from_total(&total);
        doc.vertex_labels.reverse();
        doc.edge_labels.reverse();
        for entry in &mut doc.edge_labels {
            std::mem::swap(&mut entry.u, &mut entry.v);
        }
        let rebuilt = doc.to_total().unwrap();
        assert_eq!(&rebuilt, &total);
        // Serialization canonicalizes the order again.
        assert_eq!(
            LabelingDocument::from_total(&rebuilt),
            LabelingDocument::from_total(&total)
        );
    }

    #[test]
    fn structural_errors_are_reported() {
        let total = label_g_plus(3, 1, 1).unwrap();
        let base = LabelingDocument::from_total(&total);

        let mut doc = base.clone();
        doc.vertex_labels[0].vertex = "a9".into();
        assert!(matches!(
            doc.to_total(),
            Err(DocumentError::UnknownVertex(_, _))
        ));

        let mut doc = base.clone();
        doc.vertex_labels[0].vertex = doc.vertex_labels[1].vertex.clone();
        assert!(matches!(
            doc.to_total(),
            Err(DocumentError::DuplicateVertex(_))
        ));

        let mut doc = base.clone();
        doc.vertex_labels.pop();
        assert!(matches!(
            doc.to_total(),
            Err(DocumentError::MissingVertex(_))
        ));

        let mut doc = base.clone();
        doc.edge_labels[0].u = "a1_1".into();
        doc.edge_labels[0].v = "a2_1".into();
        assert!(matches!(
            doc.to_total(),
            Err(DocumentError::UnknownEdge(_, _, _))
        ));

        let mut doc = base.clone();
        let first = doc.edge_labels[0].clone();
        doc.edge_labels[1] = first;
        assert!(matches!(
            doc.to_total(),
            Err(DocumentError::DuplicateEdge(_, _))
        ));

        let mut doc = base;
        doc.family = "4;0,0,0,0".into();
        assert!(matches!(doc.to_total(), Err(DocumentError::Graph(_))));
    }

    #[test]
    fn corrupted_labels_parse_but_fail_verification() {
        let total = label_g_plus(3, 1, 1).unwrap();
        let mut doc = LabelingDocument::from_total(&total);
        doc.vertex_labels[0].label = 99;
        let rebuilt = doc.to_total().unwrap();
        assert!(!verify_semt(&rebuilt).valid);
    }
}
