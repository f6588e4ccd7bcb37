//! Vertex and total labelings, the consecutive-edge-sum criterion, and the
//! SEMT verifier.
//!
//! The load-bearing fact: a `(p,q)`-graph admits a super edge-magic total
//! labeling iff some vertex bijection `f : V → {1,…,p}` has edge sums
//! `{f(u)+f(v)}` forming `q` consecutive distinct integers. Such an `f`
//! extends to a total labeling with magic constant `c = p + q + s`, where
//! `s` is the least edge sum, by setting `f(uv) = c - f(u) - f(v)`.
//!
//! [`verify_semt`] is the trust boundary: it takes arbitrary candidate data
//! and reports every violated condition instead of failing fast, so
//! corrupted inputs can be diagnosed by category.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{LabeledGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("vertex labels are not a bijection onto {{1,…,p}}: {0}")]
    NotBijective(String),
    #[error("edge sums are not {q} consecutive distinct integers (min {min_sum})")]
    NotConsecutive { min_sum: i64, q: usize },
    #[error("expected {expected} labels, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// A bijection from the vertices of a graph onto `{1,…,p}`. Construction
/// validates bijectivity, so every value of this type satisfies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    graph: LabeledGraph,
    labels: Vec<i64>,
}

impl VertexLabeling {
    /// `labels[i]` is the label of `graph.vertices()[i]`.
    pub fn new(graph: LabeledGraph, labels: Vec<i64>) -> Result<Self, LabelingError> {
        let p = graph.p();
        if labels.len() != p {
            return Err(LabelingError::WrongLength {
                expected: p,
                got: labels.len(),
            });
        }
        let mut seen = vec![false; p];
        for (idx, &label) in labels.iter().enumerate() {
            if label < 1 || label > p as i64 {
                return Err(LabelingError::NotBijective(format!(
                    "label {label} of {} outside 1..={p}",
                    graph.vertices()[idx]
                )));
            }
            let slot = &mut seen[(label - 1) as usize];
            if *slot {
                return Err(LabelingError::NotBijective(format!(
                    "label {label} used more than once"
                )));
            }
            *slot = true;
        }
        Ok(VertexLabeling { graph, labels })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Option<i64> {
        self.graph.vertex_index(v).map(|idx| self.labels[idx])
    }

    /// Edge sums `f(u)+f(v)` in edge order, their minimum, and whether they
    /// form `q` consecutive distinct integers.
    pub fn edge_sum_profile(&self) -> EdgeSumProfile {
        let sums: Vec<i64> = self
            .graph
            .edge_indices()
            .iter()
            .map(|&(u, v)| self.labels[u] + self.labels[v])
            .collect();
        EdgeSumProfile::from_sums(sums)
    }

    /// Extends to a total labeling per the consecutive-sum criterion:
    /// `c = p + q + s` and `f(uv) = c - f(u) - f(v)`.
    ///
    /// Fails with [`LabelingError::NotConsecutive`] when the vertex labeling
    /// is not SEMT-extendable.
    pub fn extend_to_total(self) -> Result<TotalLabeling, LabelingError> {
        let profile = self.edge_sum_profile();
        if !profile.is_consecutive_distinct {
            return Err(LabelingError::NotConsecutive {
                min_sum: profile.min_sum,
                q: self.graph.q(),
            });
        }
        let p = self.graph.p() as i64;
        let q = self.graph.q() as i64;
        let magic_constant = strength_from_min_sum(p, q, profile.min_sum);
        let edge_labels = profile
            .sums
            .iter()
            .map(|sum| magic_constant - sum)
            .collect();
        Ok(TotalLabeling {
            graph: self.graph,
            vertex_labels: self.labels,
            edge_labels,
            magic_constant,
        })
    }
}

/// The multiset of vertex-label sums over edges.
///
/// `is_consecutive_distinct` demands `q` *distinct* values covering
/// `{s,…,s+q-1}`; a duplicated sum fails even when the value range is
/// contiguous, because `q` edges with a duplicate cannot cover `q`
/// consecutive values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSumProfile {
    /// Per-edge sums, in graph edge order.
    pub sums: Vec<i64>,
    pub min_sum: i64,
    pub is_consecutive_distinct: bool,
}

impl EdgeSumProfile {
    fn from_sums(sums: Vec<i64>) -> Self {
        let q = sums.len();
        let min_sum = sums.iter().copied().min().unwrap_or(0);
        let mut seen = vec![false; q];
        let mut ok = true;
        for &sum in &sums {
            let offset = sum - min_sum;
            if offset < 0 || offset >= q as i64 || seen[offset as usize] {
                ok = false;
                break;
            }
            seen[offset as usize] = true;
        }
        EdgeSumProfile {
            sums,
            min_sum,
            is_consecutive_distinct: ok,
        }
    }
}

/// A candidate total labeling: vertex labels, edge labels (in graph edge
/// order), and a claimed magic constant.
///
/// Values of this type are *not* validated on construction — documents read
/// from disk land here unchanged, and [`verify_semt`] decides. Labelings
/// produced by [`VertexLabeling::extend_to_total`] always verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalLabeling {
    graph: LabeledGraph,
    vertex_labels: Vec<i64>,
    edge_labels: Vec<i64>,
    magic_constant: i64,
}

impl TotalLabeling {
    /// Wraps raw candidate data. Lengths must match the graph; the label
    /// values themselves may be arbitrary.
    pub fn from_parts(
        graph: LabeledGraph,
        vertex_labels: Vec<i64>,
        edge_labels: Vec<i64>,
        magic_constant: i64,
    ) -> Result<Self, LabelingError> {
        if vertex_labels.len() != graph.p() {
            return Err(LabelingError::WrongLength {
                expected: graph.p(),
                got: vertex_labels.len(),
            });
        }
        if edge_labels.len() != graph.q() {
            return Err(LabelingError::WrongLength {
                expected: graph.q(),
                got: edge_labels.len(),
            });
        }
        Ok(TotalLabeling {
            graph,
            vertex_labels,
            edge_labels,
            magic_constant,
        })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn vertex_labels(&self) -> &[i64] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[i64] {
        &self.edge_labels
    }

    pub fn vertex_label(&self, v: VertexId) -> Option<i64> {
        self.graph
            .vertex_index(v)
            .map(|idx| self.vertex_labels[idx])
    }

    pub fn magic_constant(&self) -> i64 {
        self.magic_constant
    }

    /// The vertex restriction, when it is a bijection onto `{1,…,p}`.
    pub fn vertex_restriction(&self) -> Result<VertexLabeling, LabelingError> {
        VertexLabeling::new(self.graph.clone(), self.vertex_labels.clone())
    }
}

/// `c(f) = p + q + s` for a vertex labeling with least edge sum `s`.
pub fn strength_from_min_sum(p: i64, q: i64, s: i64) -> i64 {
    p + q + s
}

/// One violated SEMT condition found by [`verify_semt`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexLabelOutOfRange {
        vertex: String,
        label: i64,
    },
    DuplicateVertexLabel {
        label: i64,
        vertices: Vec<String>,
    },
    EdgeLabelOutOfRange {
        edge: String,
        label: i64,
    },
    DuplicateEdgeLabel {
        label: i64,
        edges: Vec<String>,
    },
    EdgeSumMismatch {
        edge: String,
        expected: i64,
        actual: i64,
    },
}

/// Verification outcome: all violations, and the magic constant when valid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub magic_constant: Option<i64>,
    pub violations: Vec<Violation>,
}

fn edge_name(edge: (VertexId, VertexId)) -> String {
    format!("{}-{}", edge.0, edge.1)
}

/// Checks a candidate total labeling against the SEMT definition: vertex
/// labels biject onto `{1,…,p}`, edge labels biject onto `{p+1,…,p+q}`, and
/// every edge satisfies `f(u)+f(v)+f(uv) = c`. Reports *all* violations.
pub fn verify_semt(total: &TotalLabeling) -> VerificationReport {
    let graph = total.graph();
    let p = graph.p() as i64;
    let q = graph.q() as i64;
    let mut violations = Vec::new();

    // Vertex labels onto {1,…,p}.
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); graph.p()];
    for (idx, &label) in total.vertex_labels.iter().enumerate() {
        if label < 1 || label > p {
            violations.push(Violation::VertexLabelOutOfRange {
                vertex: graph.vertices()[idx].to_string(),
                label,
            });
        } else {
            holders[(label - 1) as usize].push(idx);
        }
    }
    for (offset, idxs) in holders.iter().enumerate() {
        if idxs.len() > 1 {
            violations.push(Violation::DuplicateVertexLabel {
                label: offset as i64 + 1,
                vertices: idxs
                    .iter()
                    .map(|&idx| graph.vertices()[idx].to_string())
                    .collect(),
            });
        }
    }

    // Edge labels onto {p+1,…,p+q}.
    let mut edge_holders: Vec<Vec<usize>> = vec![Vec::new(); graph.q()];
    for (e, &label) in total.edge_labels.iter().enumerate() {
        if label <= p || label > p + q {
            violations.push(Violation::EdgeLabelOutOfRange {
                edge: edge_name(graph.edges()[e]),
                label,
            });
        } else {
            edge_holders[(label - p - 1) as usize].push(e);
        }
    }
    for (offset, es) in edge_holders.iter().enumerate() {
        if es.len() > 1 {
            violations.push(Violation::DuplicateEdgeLabel {
                label: p + 1 + offset as i64,
                edges: es.iter().map(|&e| edge_name(graph.edges()[e])).collect(),
            });
        }
    }

    // Constant edge sums.
    for (e, &(u, v)) in graph.edge_indices().iter().enumerate() {
        let actual = total.vertex_labels[u] + total.vertex_labels[v] + total.edge_labels[e];
        if actual != total.magic_constant {
            violations.push(Violation::EdgeSumMismatch {
                edge: edge_name(graph.edges()[e]),
                expected: total.magic_constant,
                actual,
            });
        }
    }

    VerificationReport {
        valid: violations.is_empty(),
        magic_constant: violations.is_empty().then_some(total.magic_constant),
        violations,
    }
}
