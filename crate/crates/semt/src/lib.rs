//! Super edge-magic total (SEMT) labelings of unicyclic graphs.
//!
//! A total labeling of a `(p,q)`-graph assigns `{1,…,p+q}` bijectively to
//! vertices and edges; it is *edge-magic* when `f(u)+f(v)+f(uv)` is the same
//! constant `c(f)` on every edge, and *super* when the vertex labels are
//! exactly `{1,…,p}`. The smallest constant over all SEMT labelings of `G`
//! is the strength `sm(G)`.
//!
//! This crate works with the family `G(n;k1,…,kn)`: an odd cycle `C_n` with
//! `k_i` pendant vertices attached at the i-th cycle vertex. It provides
//!
//! * [`graph`] — family descriptors and graph construction,
//! * [`labeling`] — vertex/total labelings, the consecutive-edge-sum
//!   criterion, and a verifier that reports every violated condition,
//! * [`constructions`] — closed-form labelers for three subfamilies plus
//!   pendant attachment on an existing SEMT labeling,
//! * [`bounds`] — exact (rational) lower and upper bounds on `sm(G)`,
//! * [`search`] — complete backtracking search for the exact strength and a
//!   sweep harness that compares search results against the conjectured
//!   value `2q + (n+3)/2`,
//! * [`document`] — the JSON interchange format for labelings,
//! * [`dot`] — Graphviz DOT export of a verified labeling.
//!
//! All arithmetic on labels and bounds is exact integer or rational
//! arithmetic; no floating point is used anywhere.

pub mod bounds;
pub mod constructions;
pub mod document;
pub mod dot;
pub mod graph;
pub mod labeling;
pub mod search;

pub use graph::{LabeledGraph, UnicyclicFamily, VertexId};
pub use labeling::{TotalLabeling, VertexLabeling};
