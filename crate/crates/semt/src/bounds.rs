//! Exact strength bounds for members of `G(n;k1,…,kn)`.
//!
//! Everything here is integer or rational arithmetic — no floating point.
//! The degree-sum bound comes from summing the magic equation over all
//! edges: `q·c(f) = Σ deg(v)·f(v) + Σ f(e)`. Minimizing the right side over
//! vertex bijections (largest degrees take the smallest labels, by the
//! rearrangement inequality) and dividing by `q` gives an exact rational
//! lower bound on every magic constant; `sm(G)` is an integer, so its
//! ceiling is the tightest integer consequence. The same ceiling convention
//! applies to the sorted-counts lower bound of the general family theorem.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::graph::{LabeledGraph, UnicyclicFamily};

/// Exact rational with normalized sign, backed by `num_rational::Ratio`.
pub type Rational = Ratio<i64>;

/// Every bound this crate knows how to compute for one family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrengthBounds {
    /// `p + q + 3`: the least conceivable constant.
    pub trivial_lower: i64,
    /// `3p`: the largest conceivable constant.
    pub trivial_upper: i64,
    /// Exact rational degree-sum bound, rendered `"num/den"`.
    #[serde(with = "rational_string")]
    pub degsum_lower_exact: Rational,
    /// Ceiling of `degsum_lower_exact`.
    pub degsum_lower: i64,
    /// Sorted-counts lower bound from the general family theorem.
    pub family_lower: i64,
    /// Position-weighted upper bound, counts taken in the given order.
    pub family_upper: i64,
    /// `2q + (n+3)/2`, the conjectured exact strength.
    pub conjecture_value: i64,
}

mod rational_string {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format!("{}/{}", value.numer(), value.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        let (numer, denom) = text
            .split_once('/')
            .ok_or_else(|| D::Error::custom("expected \"numer/denom\""))?;
        let numer: i64 = numer.parse().map_err(D::Error::custom)?;
        let denom: i64 = denom.parse().map_err(D::Error::custom)?;
        if denom == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational::new(numer, denom))
    }
}

/// Minimum and maximum of `Σ deg(v)·f(v)` over all vertex bijections
/// `f : V → {1,…,p}`: sorted degrees paired with ascending labels give the
/// minimum, with descending labels the maximum.
pub(crate) fn degree_label_sum_range(graph: &LabeledGraph) -> (i64, i64) {
    let mut degrees: Vec<i64> = graph
        .degree_sequence()
        .iter()
        .map(|&(_, d)| d as i64)
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let p = degrees.len() as i64;
    let mut min = 0i64;
    let mut max = 0i64;
    for (idx, d) in degrees.iter().enumerate() {
        min += d * (idx as i64 + 1);
        max += d * (p - idx as i64);
    }
    (min, max)
}

/// The degree-sum lower bound on `sm(G)`: exact rational and its ceiling.
pub fn degsum_lower_bound(graph: &LabeledGraph) -> (Rational, i64) {
    let (deg_sum_min, _) = degree_label_sum_range(graph);
    let p = graph.p() as i64;
    let q = graph.q() as i64;
    // Σ of the edge labels {p+1,…,p+q}.
    let edge_label_sum = q * p + q * (q + 1) / 2;
    let exact = Rational::new(deg_sum_min + edge_label_sum, q);
    (exact, exact.ceil().to_integer())
}

/// Lower and upper bounds from the general family theorem.
///
/// The lower bound sorts the pendant counts descending into `m_1 ≥ … ≥ m_n`
/// and takes the ceiling of `2q + 2 + (m_2 + 2m_3 + … + (n-1)m_n +
/// n(n-1)/2)/q`. The upper bound uses the counts in the family's *given*
/// order: `2(k_1 + k_3 + …) + 3(k_2 + k_4 + …) + 2n + s + 2` with `n = 2s+1`.
pub fn family_theorem_bounds(family: &UnicyclicFamily) -> (i64, i64) {
    let n = family.n() as i64;
    let q = family.order() as i64;
    let s = (n - 1) / 2;

    let mut sorted: Vec<i64> = family.pendant_counts().iter().map(|&k| k as i64).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let weighted: i64 = sorted
        .iter()
        .enumerate()
        .map(|(idx, &m)| idx as i64 * m)
        .sum();
    let lower = Rational::new(2 * q * q + 2 * q + weighted + n * (n - 1) / 2, q)
        .ceil()
        .to_integer();

    let upper = family_upper_for_order(family.pendant_counts(), n, s);
    (lower, upper)
}

fn family_upper_for_order(counts: &[usize], n: i64, s: i64) -> i64 {
    let mut odd_positions = 0i64;
    let mut even_positions = 0i64;
    for (idx, &k) in counts.iter().enumerate() {
        if idx % 2 == 0 {
            odd_positions += k as i64; // positions 1, 3, …, 2s+1
        } else {
            even_positions += k as i64; // positions 2, 4, …, 2s
        }
    }
    2 * odd_positions + 3 * even_positions + 2 * n + s + 2
}

/// Extension (not part of the theorem statement): the least value the upper
/// bound takes over all rotations and reflections of the count vector. All
/// of those describe isomorphic graphs, so this is still an upper bound on
/// `sm(G)`.
pub fn family_upper_min_rotation(family: &UnicyclicFamily) -> i64 {
    let n = family.n();
    let s = (n as i64 - 1) / 2;
    let counts = family.pendant_counts();
    let mut arranged = vec![0usize; n];
    let mut best = i64::MAX;
    for rot in 0..n {
        for reflect in [false, true] {
            for (idx, slot) in arranged.iter_mut().enumerate() {
                let src = if reflect {
                    (n + rot + n - idx) % n
                } else {
                    (rot + idx) % n
                };
                *slot = counts[src];
            }
            best = best.min(family_upper_for_order(&arranged, n as i64, s));
        }
    }
    best
}

/// `2q + (n+3)/2`, the conjectured strength of every family member.
pub fn conjecture_value(family: &UnicyclicFamily) -> i64 {
    let n = family.n() as i64;
    let q = family.order() as i64;
    2 * q + (n + 3) / 2
}

/// Computes all bounds for one family member.
pub fn strength_bounds(graph: &LabeledGraph) -> StrengthBounds {
    let p = graph.p() as i64;
    let q = graph.q() as i64;
    let (exact, degsum_lower) = degsum_lower_bound(graph);
    let (family_lower, family_upper) = family_theorem_bounds(graph.family());
    StrengthBounds {
        trivial_lower: p + q + 3,
        trivial_upper: 3 * p,
        degsum_lower_exact: exact,
        degsum_lower,
        family_lower,
        family_upper,
        conjecture_value: conjecture_value(graph.family()),
    }
}
