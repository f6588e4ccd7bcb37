//! Closed-form SEMT labelings for three subfamilies of `G(n;k1,…,kn)`, the
//! shared odd-cycle base labeling, and pendant attachment on an arbitrary
//! valid labeling.
//!
//! Every labeler is a total function of its parameters — no randomness, no
//! search — and each produces the minimum-strength labeling of its family:
//!
//! * [`label_g_plus`]: `G(n;k,…,k,k+c)` with constant `2n(k+1)+2c+(n+3)/2`,
//! * [`label_g_minus`]: `G(n;k,…,k,k-c)` with constant `2n(k+1)-2c+(n+3)/2`,
//! * [`label_g_sym`]: `G(n;k,r)` (counts `k` except `k+1` at positions `r`
//!   and `n-r`, `r` odd) with constant `2n(k+1)+4+(n+3)/2`,
//! * [`label_equal_k`]: the equal-count member, constant `2n(k+1)+(n+3)/2`.
//!
//! All of these share minimum edge sum `(n+3)/2`, so each constant is
//! `2q + (n+3)/2` for its own `q`.

use thiserror::Error;

use crate::graph::{build_unicyclic, GraphError, UnicyclicFamily, VertexId};
use crate::labeling::{verify_semt, LabelingError, TotalLabeling, VertexLabeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("parameter constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("k must be at least 1 for this family (the k-th pendant carries a case split)")]
    KTooSmall,
    #[error("input labeling is not a valid SEMT labeling")]
    NotValid,
    #[error("attachment vertex {0} is a pendant; the enlarged graph would leave G(n;k1,…,kn)")]
    AttachVertexNotOnCycle(String),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// The parametrized subfamilies with closed-form labelers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `G(n;k,…,k,k+c)`, `c ≥ 1` (and `c(n-3) < 2n(k+1)` when `n > 3`).
    GPlus { n: usize, k: usize, c: usize },
    /// `G(n;k,…,k,k-c)`, `1 ≤ c ≤ k`.
    GMinus { n: usize, k: usize, c: usize },
    /// `G(n;k,r)`: counts `k` everywhere except `k+1` at `r` and `n-r`.
    GSym { n: usize, k: usize, r: usize },
    /// `G(n;k,…,k)`.
    EqualK { n: usize, k: usize },
    /// Bare odd cycle `C_n`.
    Cycle { n: usize },
}

impl FamilyKind {
    pub fn family(&self) -> Result<UnicyclicFamily, ConstructionError> {
        match *self {
            FamilyKind::GPlus { n, k, c } => {
                let mut counts = vec![k; n.max(1)];
                if let Some(last) = counts.last_mut() {
                    *last = k + c;
                }
                Ok(UnicyclicFamily::new(n, counts)?)
            }
            FamilyKind::GMinus { n, k, c } => {
                if c > k {
                    return Err(ConstructionError::ConstraintViolated(format!(
                        "c = {c} exceeds k = {k}"
                    )));
                }
                let mut counts = vec![k; n.max(1)];
                if let Some(last) = counts.last_mut() {
                    *last = k - c;
                }
                Ok(UnicyclicFamily::new(n, counts)?)
            }
            FamilyKind::GSym { n, k, r } => {
                if r < 1 || r >= n {
                    return Err(ConstructionError::ConstraintViolated(format!(
                        "r = {r} must satisfy 1 ≤ r < n = {n}"
                    )));
                }
                let mut counts = vec![k; n];
                counts[r - 1] = k + 1;
                counts[n - r - 1] = k + 1;
                Ok(UnicyclicFamily::new(n, counts)?)
            }
            FamilyKind::EqualK { n, k } => Ok(UnicyclicFamily::new(n, vec![k; n.max(1)])?),
            FamilyKind::Cycle { n } => Ok(UnicyclicFamily::cycle(n)?),
        }
    }

    /// The family's exact strength by its theorem formula. Every case equals
    /// `2q + (n+3)/2` for the family's own edge count `q`.
    pub fn closed_form_strength(&self) -> i64 {
        match *self {
            FamilyKind::GPlus { n, k, c } => {
                let (n, k, c) = (n as i64, k as i64, c as i64);
                2 * n * (k + 1) + 2 * c + (n + 3) / 2
            }
            FamilyKind::GMinus { n, k, c } => {
                let (n, k, c) = (n as i64, k as i64, c as i64);
                2 * n * (k + 1) - 2 * c + (n + 3) / 2
            }
            FamilyKind::GSym { n, k, .. } => {
                let (n, k) = (n as i64, k as i64);
                2 * n * (k + 1) + 4 + (n + 3) / 2
            }
            FamilyKind::EqualK { n, k } => {
                let (n, k) = (n as i64, k as i64);
                2 * n * (k + 1) + (n + 3) / 2
            }
            FamilyKind::Cycle { n } => (5 * n as i64 + 3) / 2,
        }
    }

    pub fn label(&self) -> Result<TotalLabeling, ConstructionError> {
        match *self {
            FamilyKind::GPlus { n, k, c } => label_g_plus(n, k, c),
            FamilyKind::GMinus { n, k, c } => label_g_minus(n, k, c),
            FamilyKind::GSym { n, k, r } => label_g_sym(n, k, r),
            FamilyKind::EqualK { n, k } => label_equal_k(n, k),
            FamilyKind::Cycle { n } => label_cycle(n),
        }
    }
}

/// The base labeling of the odd cycle: `f(a_i) = (i+1)/2` for odd `i` and
/// `(n+i+1)/2` for even `i`. Its edge sums are `n` consecutive integers with
/// minimum `(n+3)/2`.
pub fn cycle_vertex_labels(n: usize) -> Result<VertexLabeling, ConstructionError> {
    let family = UnicyclicFamily::cycle(n)?;
    let graph = build_unicyclic(&family);
    let labels = (1..=n as i64).map(cycle_label_of(n as i64)).collect();
    Ok(VertexLabeling::new(graph, labels)?)
}

fn cycle_label_of(n: i64) -> impl Fn(i64) -> i64 {
    move |i| {
        if i % 2 == 1 {
            (i + 1) / 2
        } else {
            (n + i + 1) / 2
        }
    }
}

pub fn label_cycle(n: usize) -> Result<TotalLabeling, ConstructionError> {
    Ok(cycle_vertex_labels(n)?.extend_to_total()?)
}

/// Labels `G(n;k,…,k,k+c)`. The labeling extends the equal-count one: the
/// `c` extra pendants at `a_n` take the labels `n(k+1)+1,…,n(k+1)+c`, whose
/// edge sums continue the consecutive run upward.
pub fn label_g_plus(n: usize, k: usize, c: usize) -> Result<TotalLabeling, ConstructionError> {
    if c < 1 {
        return Err(ConstructionError::ConstraintViolated(
            "c must be at least 1 (use the equal-count labeler for c = 0)".into(),
        ));
    }
    // The lower-bound argument needs (n-1)c < 2(n(k+1)+c); for n = 3 that
    // holds for every c, so only n > 3 constrains it.
    if n > 3 && c * (n - 3) >= 2 * n * (k + 1) {
        return Err(ConstructionError::ConstraintViolated(format!(
            "c = {c} out of range: need c(n-3) < 2n(k+1) = {}",
            2 * n * (k + 1)
        )));
    }
    let family = FamilyKind::GPlus { n, k, c }.family()?;
    let graph = build_unicyclic(&family);
    let (ni, ki, ci) = (n as i64, k as i64, c as i64);
    let cycle = cycle_label_of(ni);
    let mut labels = vec![0i64; graph.p()];
    for i in 1..=ni {
        labels[graph.vertex_index(VertexId::Cycle(i as usize)).unwrap()] = cycle(i);
    }
    for i in 1..ni {
        for j in 1..=ki {
            let idx = graph
                .vertex_index(VertexId::Pendant(i as usize, j as usize))
                .unwrap();
            labels[idx] = ni * (ki + 1) - (ni - 1) * (j - 1) - (i - 1);
        }
    }
    for j in 1..=(ki + ci) {
        let idx = graph
            .vertex_index(VertexId::Pendant(n, j as usize))
            .unwrap();
        labels[idx] = if j <= ki {
            ni + j
        } else {
            ni * (ki + 1) + j - ki
        };
    }
    Ok(VertexLabeling::new(graph, labels)?.extend_to_total()?)
}

/// Labels `G(n;k,…,k,k-c)` for `1 ≤ c ≤ k`.
pub fn label_g_minus(n: usize, k: usize, c: usize) -> Result<TotalLabeling, ConstructionError> {
    if c < 1 || c > k {
        return Err(ConstructionError::ConstraintViolated(format!(
            "need 1 ≤ c ≤ k, got c = {c}, k = {k}"
        )));
    }
    label_k_minus_c(n, k, c)
}

/// Labels the equal-count family `G(n;k,…,k)`. The `c = 0` degenerate case
/// of the deficit labeler, constant `2n(k+1)+(n+3)/2`.
pub fn label_equal_k(n: usize, k: usize) -> Result<TotalLabeling, ConstructionError> {
    label_k_minus_c(n, k, 0)
}

fn label_k_minus_c(n: usize, k: usize, c: usize) -> Result<TotalLabeling, ConstructionError> {
    let family = FamilyKind::GMinus { n, k, c }.family()?;
    let graph = build_unicyclic(&family);
    let (ni, ki, ci) = (n as i64, k as i64, c as i64);
    let cycle = cycle_label_of(ni);
    let mut labels = vec![0i64; graph.p()];
    for i in 1..=ni {
        labels[graph.vertex_index(VertexId::Cycle(i as usize)).unwrap()] = cycle(i);
    }
    for i in 1..ni {
        for j in 1..=ki {
            let idx = graph
                .vertex_index(VertexId::Pendant(i as usize, j as usize))
                .unwrap();
            labels[idx] = ni * (ki + 2) - ci - (ni - 1) * j - i;
        }
    }
    for j in 1..=(ki - ci) {
        let idx = graph
            .vertex_index(VertexId::Pendant(n, j as usize))
            .unwrap();
        labels[idx] = ni + j;
    }
    Ok(VertexLabeling::new(graph, labels)?.extend_to_total()?)
}

/// Labels `G(n;k,r)` for odd `r`, `1 ≤ r < n`, `k ≥ 1`.
///
/// The k-th pendant label splits into three branches on `f(a_i)` relative to
/// `(n+1)/2` and `n - f(a_r)`; the two `(k+1)`-th pendants at `a_r` and
/// `a_{n-r}` take fixed labels `n(k+1)+2` and `nk+r+3`.
pub fn label_g_sym(n: usize, k: usize, r: usize) -> Result<TotalLabeling, ConstructionError> {
    if r.is_multiple_of(2) || r < 1 || r >= n {
        return Err(ConstructionError::ConstraintViolated(format!(
            "r = {r} must be odd with 1 ≤ r < n = {n}"
        )));
    }
    if k == 0 {
        return Err(ConstructionError::KTooSmall);
    }
    let family = FamilyKind::GSym { n, k, r }.family()?;
    let graph = build_unicyclic(&family);
    let (ni, ki, ri) = (n as i64, k as i64, r as i64);
    let cycle = cycle_label_of(ni);
    // r is odd, so f(a_r) = (r+1)/2.
    let fr = (ri + 1) / 2;
    let mut labels = vec![0i64; graph.p()];
    for i in 1..=ni {
        labels[graph.vertex_index(VertexId::Cycle(i as usize)).unwrap()] = cycle(i);
    }
    for i in 1..=ni {
        let fi = cycle(i);
        for j in 1..ki {
            let idx = graph
                .vertex_index(VertexId::Pendant(i as usize, j as usize))
                .unwrap();
            labels[idx] = ni * (ki - j + 2) - 2 * fi + 2;
        }
        let idx = graph
            .vertex_index(VertexId::Pendant(i as usize, k))
            .unwrap();
        labels[idx] = if fi <= (ni + 1) / 2 {
            2 * ni + 2 - 2 * fi
        } else if fi <= ni - fr {
            ni * (ki + 2) + 4 - 2 * fi
        } else {
            ni * (ki + 2) + 2 - 2 * fi
        };
    }
    labels[graph.vertex_index(VertexId::Pendant(r, k + 1)).unwrap()] = ni * (ki + 1) + 2;
    labels[graph.vertex_index(VertexId::Pendant(n - r, k + 1)).unwrap()] = ni * ki + ri + 3;
    Ok(VertexLabeling::new(graph, labels)?.extend_to_total()?)
}

/// Attaches `m` new pendant vertices to the vertex `a` whose label `t`
/// satisfies `max{f(u)+f(v)} = p + t`, labeling them `p+1,…,p+m`. The edge
/// sums extend the consecutive run upward, so the result is again a valid
/// SEMT labeling and its constant grows by exactly `2m`.
pub fn attach_pendants(
    total: &TotalLabeling,
    m: usize,
) -> Result<TotalLabeling, ConstructionError> {
    if !verify_semt(total).valid {
        return Err(ConstructionError::NotValid);
    }
    if m == 0 {
        return Ok(total.clone());
    }
    let graph = total.graph();
    let p = graph.p() as i64;
    let restriction = total.vertex_restriction()?;
    let profile = restriction.edge_sum_profile();
    let max_sum = profile.min_sum + graph.q() as i64 - 1;
    let target_label = max_sum - p;
    let attach_at = graph
        .vertices()
        .iter()
        .copied()
        .find(|&v| total.vertex_label(v) == Some(target_label))
        .expect("a valid SEMT labeling has max edge sum p + t with t <= p");
    let cycle_index = match attach_at {
        VertexId::Cycle(i) => i,
        VertexId::Pendant(_, _) => {
            return Err(ConstructionError::AttachVertexNotOnCycle(
                attach_at.to_string(),
            ))
        }
    };

    let mut counts = graph.family().pendant_counts().to_vec();
    let old_count = counts[cycle_index - 1];
    counts[cycle_index - 1] += m;
    let family = UnicyclicFamily::new(graph.n(), counts)?;
    let enlarged = build_unicyclic(&family);

    let mut labels = vec![0i64; enlarged.p()];
    for (idx, &v) in graph.vertices().iter().enumerate() {
        labels[enlarged.vertex_index(v).unwrap()] = total.vertex_labels()[idx];
    }
    for extra in 1..=m {
        let v = VertexId::Pendant(cycle_index, old_count + extra);
        labels[enlarged.vertex_index(v).unwrap()] = p + extra as i64;
    }
    Ok(VertexLabeling::new(enlarged, labels)?.extend_to_total()?)
}
