//! The unicyclic family `G(n;k1,…,kn)`: an odd cycle `C_n` with `k_i`
//! pendant vertices attached at the i-th cycle vertex.
//!
//! Vertices keep structural identities ([`VertexId::Cycle`] /
//! [`VertexId::Pendant`]) rather than raw integers, so labelings and exports
//! stay unambiguous. Graph construction is deterministic: cycle vertices in
//! index order, then pendants in `(i, j)` lexicographic order, and the same
//! for edges.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count. Bounds material (sums over
/// degree-weighted labels, quadratic in `p`) stays well inside `i64`.
pub const MAX_FAMILY_ORDER: usize = 100_000_000;

/// Errors from family validation and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// Even cycle lengths never admit a super edge-magic total labeling.
    #[error("cycle length {0} is even; only odd cycles are super edge-magic total")]
    EvenCycle(usize),
    #[error("bad family shape: {0}")]
    BadShape(String),
    #[error("cannot parse family descriptor {input:?}: {reason}")]
    BadDescriptor { input: String, reason: String },
}

/// Descriptor of `G(n;k1,…,kn)`: cycle length `n` (odd, ≥ 3) and the pendant
/// count at each cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnicyclicFamily {
    n: usize,
    pendant_counts: Vec<usize>,
}

impl UnicyclicFamily {
    pub fn new(n: usize, pendant_counts: Vec<usize>) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::BadShape(format!("cycle length {n} < 3")));
        }
        if n.is_multiple_of(2) {
            return Err(GraphError::EvenCycle(n));
        }
        if pendant_counts.len() != n {
            return Err(GraphError::BadShape(format!(
                "expected {n} pendant counts, got {}",
                pendant_counts.len()
            )));
        }
        // Keep p small enough that every label sum and bound fits in i64.
        let order = pendant_counts
            .iter()
            .try_fold(n, |acc, &k| acc.checked_add(k))
            .filter(|&p| p <= MAX_FAMILY_ORDER);
        if order.is_none() {
            return Err(GraphError::BadShape(format!(
                "family order exceeds the supported maximum {MAX_FAMILY_ORDER}"
            )));
        }
        Ok(UnicyclicFamily { n, pendant_counts })
    }

    /// Bare odd cycle `C_n`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Self::new(n, vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pendant_counts(&self) -> &[usize] {
        &self.pendant_counts
    }

    /// Pendant count at cycle vertex `i` (1-based).
    pub fn pendant_count(&self, i: usize) -> usize {
        self.pendant_counts[i - 1]
    }

    pub fn pendant_total(&self) -> usize {
        self.pendant_counts.iter().sum()
    }

    /// Vertex count `p` (equals the edge count `q`).
    pub fn order(&self) -> usize {
        self.n + self.pendant_total()
    }

    pub fn has_zero_counts(&self) -> bool {
        self.pendant_counts.contains(&0)
    }

    /// The lexicographically least vector over all rotations and reflections
    /// of the pendant counts. Families with equal canonical forms are
    /// isomorphic graphs, so a sweep visits one representative per class.
    pub fn canonical(&self) -> UnicyclicFamily {
        let n = self.n;
        let mut best = self.pendant_counts.clone();
        let mut candidate = vec![0usize; n];
        for rot in 0..n {
            for reflect in [false, true] {
                for (idx, slot) in candidate.iter_mut().enumerate() {
                    let src = if reflect {
                        (n + rot + n - idx) % n
                    } else {
                        (rot + idx) % n
                    };
                    *slot = self.pendant_counts[src];
                }
                if candidate < best {
                    std::mem::swap(&mut best, &mut candidate);
                }
            }
        }
        UnicyclicFamily {
            n,
            pendant_counts: best,
        }
    }
}

/// Text form `"n;k1,k2,...,kn"`, the interchange key used by the CLI and
/// embedded in JSON exports.
impl fmt::Display for UnicyclicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (idx, k) in self.pendant_counts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for UnicyclicFamily {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| GraphError::BadDescriptor {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (n_part, counts_part) = s
            .split_once(';')
            .ok_or_else(|| bad("expected \"n;k1,k2,...,kn\""))?;
        let n: usize = n_part
            .trim()
            .parse()
            .map_err(|_| bad("cycle length is not a non-negative integer"))?;
        let counts = counts_part
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| bad("pendant count is not a non-negative integer"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        UnicyclicFamily::new(n, counts)
    }
}

/// Structural identity of a vertex: the i-th cycle vertex, or the j-th
/// pendant at the i-th cycle vertex. Both indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexId {
    Cycle(usize),
    Pendant(usize, usize),
}

/// Names follow the grammar `a<i>` for cycle vertices and `a<i>_<j>` for
/// pendants, e.g. `a3` and `a3_2`.
impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Cycle(i) => write!(f, "a{i}"),
            VertexId::Pendant(i, j) => write!(f, "a{i}_{j}"),
        }
    }
}

impl FromStr for VertexId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| GraphError::BadDescriptor {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let rest = s
            .strip_prefix('a')
            .ok_or_else(|| bad("missing 'a' prefix"))?;
        match rest.split_once('_') {
            None => {
                let i = rest.parse().map_err(|_| bad("bad cycle index"))?;
                Ok(VertexId::Cycle(i))
            }
            Some((i_part, j_part)) => {
                let i = i_part.parse().map_err(|_| bad("bad cycle index"))?;
                let j = j_part.parse().map_err(|_| bad("bad pendant index"))?;
                Ok(VertexId::Pendant(i, j))
            }
        }
    }
}

/// Concrete vertex/edge structure of a family member, with `p = q` and a
/// fixed deterministic ordering. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    family: UnicyclicFamily,
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    /// Edge endpoints as dense vertex indices, parallel to `edges`.
    edge_indices: Vec<(usize, usize)>,
    /// Offset of the first pendant of each cycle vertex in `vertices`.
    pendant_offsets: Vec<usize>,
}

/// Builds the member of `G(n;k1,…,kn)` described by `family`.
///
/// Vertex order: `a1,…,an`, then pendants `(i,j)` lexicographically.
/// Edge order: cycle edges `{a_i, a_{i+1}}` for `i < n`, then `{a_n, a_1}`,
/// then pendant edges `{a_i, a_{i,j}}` in `(i, j)` order.
pub fn build_unicyclic(family: &UnicyclicFamily) -> LabeledGraph {
    let n = family.n();
    let counts = family.pendant_counts();

    let mut vertices = Vec::with_capacity(family.order());
    for i in 1..=n {
        vertices.push(VertexId::Cycle(i));
    }
    let mut pendant_offsets = Vec::with_capacity(n);
    let mut offset = n;
    for (i, &k) in counts.iter().enumerate() {
        pendant_offsets.push(offset);
        for j in 1..=k {
            vertices.push(VertexId::Pendant(i + 1, j));
        }
        offset += k;
    }

    let mut edges = Vec::with_capacity(family.order());
    let mut edge_indices = Vec::with_capacity(family.order());
    for i in 1..n {
        edges.push((VertexId::Cycle(i), VertexId::Cycle(i + 1)));
        edge_indices.push((i - 1, i));
    }
    edges.push((VertexId::Cycle(n), VertexId::Cycle(1)));
    edge_indices.push((n - 1, 0));
    for (i, &k) in counts.iter().enumerate() {
        for j in 1..=k {
            edges.push((VertexId::Cycle(i + 1), VertexId::Pendant(i + 1, j)));
            edge_indices.push((i, pendant_offsets[i] + j - 1));
        }
    }

    LabeledGraph {
        family: family.clone(),
        vertices,
        edges,
        edge_indices,
        pendant_offsets,
    }
}

impl LabeledGraph {
    pub fn family(&self) -> &UnicyclicFamily {
        &self.family
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    /// Vertex count; equals `q` because the graph is unicyclic.
    pub fn p(&self) -> usize {
        self.vertices.len()
    }

    /// Edge count; equals `p`.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Edge endpoints as dense vertex indices, in edge order.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edge_indices
    }

    /// Dense index of a vertex in `vertices()`, or `None` if the id is out
    /// of this family's bounds.
    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        let n = self.family.n();
        match v {
            VertexId::Cycle(i) if i >= 1 && i <= n => Some(i - 1),
            VertexId::Pendant(i, j)
                if i >= 1 && i <= n && j >= 1 && j <= self.family.pendant_count(i) =>
            {
                Some(self.pendant_offsets[i - 1] + j - 1)
            }
            _ => None,
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        match v {
            VertexId::Cycle(i) => self.family.pendant_count(i) + 2,
            VertexId::Pendant(_, _) => 1,
        }
    }

    /// All vertices with their degrees, in vertex order. Degrees sum to `2q`.
    pub fn degree_sequence(&self) -> Vec<(VertexId, usize)> {
        self.vertices.iter().map(|&v| (v, self.degree(v))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(n: usize, counts: &[usize]) -> UnicyclicFamily {
        UnicyclicFamily::new(n, counts.to_vec()).unwrap()
    }

    #[test]
    fn figure_instance_orders() {
        // G_{5,2,3} = G(5;2,2,2,2,5): p = q = n(k+1)+c = 18.
        let g = build_unicyclic(&family(5, &[2, 2, 2, 2, 5]));
        assert_eq!(g.p(), 18);
        assert_eq!(g.q(), 18);

        let g = build_unicyclic(&family(3, &[0, 0, 0]));
        assert_eq!(g.p(), 3);
        assert_eq!(g.q(), 3);

        // G_{5,4,-2} = G(5;4,4,4,4,2): p = q = n(k+1)-c = 23.
        let g = build_unicyclic(&family(5, &[4, 4, 4, 4, 2]));
        assert_eq!(g.p(), 23);
        assert_eq!(g.q(), 23);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(
            UnicyclicFamily::new(4, vec![0; 4]).unwrap_err(),
            GraphError::EvenCycle(4)
        );
        assert!(matches!(
            UnicyclicFamily::new(5, vec![1, 2]).unwrap_err(),
            GraphError::BadShape(_)
        ));
        assert!(matches!(
            UnicyclicFamily::new(1, vec![0]).unwrap_err(),
            GraphError::BadShape(_)
        ));
        assert!(matches!(
            UnicyclicFamily::new(3, vec![MAX_FAMILY_ORDER, 0, 0]).unwrap_err(),
            GraphError::BadShape(_)
        ));
        assert!(matches!(
            UnicyclicFamily::new(3, vec![usize::MAX, usize::MAX, 1]).unwrap_err(),
            GraphError::BadShape(_)
        ));
    }

    #[test]
    fn degree_sequences() {
        let g = build_unicyclic(&family(3, &[0, 0, 0]));
        assert!(g.degree_sequence().iter().all(|&(_, d)| d == 2));

        let g = build_unicyclic(&family(3, &[1, 1, 1]));
        let degs: Vec<usize> = g.degree_sequence().iter().map(|&(_, d)| d).collect();
        assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 3);
        assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 3);

        // G_{5,2,3}: deg(a5) = 7, deg(a_i) = 4 for i < 5, 13 pendants of degree 1.
        let g = build_unicyclic(&family(5, &[2, 2, 2, 2, 5]));
        assert_eq!(g.degree(VertexId::Cycle(5)), 7);
        for i in 1..5 {
            assert_eq!(g.degree(VertexId::Cycle(i)), 4);
        }
        let pendant_degrees = g
            .degree_sequence()
            .iter()
            .filter(|(v, _)| matches!(v, VertexId::Pendant(_, _)))
            .count();
        assert_eq!(pendant_degrees, 13);
    }

    #[test]
    fn degrees_sum_to_twice_edge_count() {
        for (n, counts) in [
            (3, vec![0, 2, 5]),
            (5, vec![1, 0, 3, 2, 2]),
            (7, vec![0; 7]),
        ] {
            let g = build_unicyclic(&family(n, &counts));
            let total: usize = g.degree_sequence().iter().map(|&(_, d)| d).sum();
            assert_eq!(total, 2 * g.q());
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let f = family(5, &[1, 0, 3, 2, 2]);
        assert_eq!(build_unicyclic(&f), build_unicyclic(&f));
    }

    #[test]
    fn removing_any_cycle_edge_leaves_connected_acyclic_graph() {
        let f = family(5, &[1, 0, 3, 2, 2]);
        let g = build_unicyclic(&f);
        for removed in 0..g.n() {
            // Adjacency over the remaining edges.
            let mut adj = vec![Vec::new(); g.p()];
            for (e, &(u, v)) in g.edge_indices().iter().enumerate() {
                if e != removed {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
            // BFS from vertex 0; a connected graph on p vertices with p-1
            // edges is a tree.
            let mut seen = vec![false; g.p()];
            let mut queue = vec![0usize];
            seen[0] = true;
            while let Some(u) = queue.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push(v);
                    }
                }
            }
            assert!(
                seen.iter().all(|&s| s),
                "graph disconnected after removing edge {removed}"
            );
        }
    }

    #[test]
    fn vertex_index_round_trips() {
        let g = build_unicyclic(&family(5, &[2, 0, 1, 4, 3]));
        for (idx, &v) in g.vertices().iter().enumerate() {
            assert_eq!(g.vertex_index(v), Some(idx));
        }
        assert_eq!(g.vertex_index(VertexId::Cycle(6)), None);
        assert_eq!(g.vertex_index(VertexId::Pendant(2, 1)), None);
        assert_eq!(g.vertex_index(VertexId::Pendant(1, 3)), None);
    }

    #[test]
    fn family_descriptor_round_trips() {
        let f = family(5, &[2, 2, 2, 2, 5]);
        assert_eq!(f.to_string(), "5;2,2,2,2,5");
        assert_eq!("5;2,2,2,2,5".parse::<UnicyclicFamily>().unwrap(), f);
        assert_eq!(" 5 ; 2, 2,2 ,2, 5".parse::<UnicyclicFamily>().unwrap(), f);
        assert!("5;2,2".parse::<UnicyclicFamily>().is_err());
        assert!("4;1,1,1,1".parse::<UnicyclicFamily>().is_err());
        assert!("5;2,2,2,2,-1".parse::<UnicyclicFamily>().is_err());
        assert!("x".parse::<UnicyclicFamily>().is_err());
    }

    #[test]
    fn vertex_names_round_trip() {
        assert_eq!("a3".parse::<VertexId>().unwrap(), VertexId::Cycle(3));
        assert_eq!("a3_2".parse::<VertexId>().unwrap(), VertexId::Pendant(3, 2));
        assert_eq!(VertexId::Pendant(12, 7).to_string(), "a12_7");
        assert!("b3".parse::<VertexId>().is_err());
        assert!("a3_".parse::<VertexId>().is_err());
    }

    #[test]
    fn canonical_form_is_rotation_reflection_invariant() {
        let f = family(5, &[0, 1, 2, 0, 0]);
        let canon = f.canonical();
        assert_eq!(canon.pendant_counts(), &[0, 0, 0, 1, 2]);
        // Every rotation and reflection canonicalizes to the same vector.
        let rotated = family(5, &[2, 0, 0, 0, 1]);
        assert_eq!(rotated.canonical(), canon);
        let reflected = family(5, &[0, 0, 2, 1, 0]);
        assert_eq!(reflected.canonical(), canon);
    }
}
