//! Complete backtracking search for the exact strength `sm(G)` and the
//! conjecture sweep harness.
//!
//! Because a vertex labeling with consecutive edge sums and minimum `s`
//! extends to constant `p + q + s`, minimizing `c(f)` over all labelings
//! reduces to finding the least `s` for which such a labeling exists. The
//! search probes candidate `s` values in ascending order; each probe is a
//! complete two-phase backtracking search:
//!
//! 1. *Cycle phase*: labels are assigned to cycle vertices along a walk
//!    starting at the highest-degree vertex, so every assignment after the
//!    first closes a cycle edge immediately. Candidate labels are tried in
//!    ascending order. Cuts: an edge sum outside `[s, s+q-1]`, a duplicate
//!    edge sum, and a frontier edge whose sum can no longer reach any
//!    unclaimed target.
//! 2. *Pendant phase*: the remaining targets must come from pendant edges.
//!    Each target `t` needs a cycle vertex `v` with spare pendant capacity
//!    and an unused label `t - f(v)`; targets are matched in ascending
//!    order with full backtracking. Before each step, every remaining
//!    target must be coverable and every unused label placeable, or the
//!    branch is cut.
//!
//! Pendants at one vertex are interchangeable, so the pendant phase never
//! enumerates their permutations. When all pendant counts are equal the
//! cycle's rotations and reflections are graph automorphisms, so the walk
//! start is pinned to carry the least label among cycle vertices and its
//! two neighbors are ordered.
//!
//! Budgets apply per probe, so each layer's outcome is a pure function of
//! `(graph, s, budget)` and results are deterministic under any
//! `parallel_width`. An exhausted probe is an honest indeterminate, never
//! converted to a guess.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{degree_label_sum_range, degsum_lower_bound, strength_bounds, StrengthBounds};
use crate::document::LabelingDocument;
use crate::graph::{build_unicyclic, LabeledGraph, UnicyclicFamily, VertexId};
use crate::labeling::{TotalLabeling, VertexLabeling};

/// Largest graph order the bitset-based search accepts.
pub const MAX_SEARCH_ORDER: usize = 120;

/// Default per-probe node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph order {0} exceeds the search limit {MAX_SEARCH_ORDER}")]
    GraphTooLarge(usize),
    #[error("invalid s range override ({0}, {1}): lower end exceeds upper end")]
    InvalidSRange(i64, i64),
    #[error("node budget exhausted probing s = {s} after {nodes_explored} nodes")]
    BudgetExhausted { s: i64, nodes_explored: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Backtrack-node budget per feasibility probe; `None` means unlimited.
    pub node_budget: Option<u64>,
    /// Overrides the probed range of candidate minimum sums.
    pub s_range_override: Option<(i64, i64)>,
    /// How many candidate `s` values may be probed concurrently.
    pub parallel_width: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: Some(DEFAULT_NODE_BUDGET),
            s_range_override: None,
            parallel_width: 1,
        }
    }
}

/// Outcome of probing one candidate minimum sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayerStatus {
    Feasible,
    Infeasible,
    /// Probed but the node budget ran out: indeterminate at this `s`.
    BudgetExhausted,
    /// Not probed because an earlier layer exhausted its budget.
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    Exact,
    BudgetExhausted,
    Infeasible,
}

/// Result of an exact-strength search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub status: SearchStatus,
    /// The exact strength, present iff `status` is `Exact`.
    pub sm: Option<i64>,
    /// A minimum-constant labeling, present iff `status` is `Exact`.
    pub witness: Option<TotalLabeling>,
    /// Nodes spent on the probes recorded in `per_s_feasibility`.
    pub nodes_explored: u64,
    pub per_s_feasibility: Vec<(i64, LayerStatus)>,
}

/// Result of [`feasible_for_min_sum`].
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityOutcome {
    pub feasible: bool,
    pub witness: Option<VertexLabeling>,
    pub nodes_explored: u64,
}

enum ProbeOutcome {
    Feasible(Vec<i64>),
    Infeasible,
    Exhausted,
}

enum Step {
    Found,
    NotFound,
    OutOfBudget,
}

fn shift_mask(mask: u128, amount: i64) -> u128 {
    if amount >= 0 {
        if amount >= 128 {
            0
        } else {
            mask << amount
        }
    } else if amount <= -128 {
        0
    } else {
        mask >> -amount
    }
}

struct Probe<'g> {
    graph: &'g LabeledGraph,
    s: i64,
    p: i64,
    q: usize,
    n: usize,
    /// Dense indices of cycle vertices in walk order.
    order: Vec<usize>,
    cycle_labels: Vec<i64>,
    /// Bit `l-1` set means label `l` is still free.
    free_labels: u128,
    /// Bit `t-s` set means target sum `t` is still unclaimed.
    open_targets: u128,
    /// Remaining pendant capacity, by walk position.
    caps: Vec<usize>,
    /// Matched pendant choices `(walk position, label)`, in target order.
    pendant_choices: Vec<(usize, i64)>,
    symmetric: bool,
    budget: Option<u64>,
    nodes: u64,
}

impl<'g> Probe<'g> {
    fn new(graph: &'g LabeledGraph, s: i64, budget: Option<u64>) -> Self {
        let n = graph.n();
        let counts = graph.family().pendant_counts();

        // Walk start: highest degree, ties to the lowest index. Direction:
        // toward the higher-degree neighbor, ties clockwise.
        let start = (0..n)
            .max_by_key(|&i| (counts[i], std::cmp::Reverse(i)))
            .unwrap();
        let next = (start + 1) % n;
        let prev = (start + n - 1) % n;
        let forward = counts[next] >= counts[prev];
        let order: Vec<usize> = (0..n)
            .map(|step| {
                if forward {
                    (start + step) % n
                } else {
                    (start + n - step) % n
                }
            })
            .collect();

        let p = graph.p() as i64;
        let q = graph.q();
        Probe {
            graph,
            s,
            p,
            q,
            n,
            caps: order.iter().map(|&i| counts[i]).collect(),
            order,
            cycle_labels: vec![0; n],
            free_labels: (1u128 << p) - 1,
            open_targets: (1u128 << q) - 1,
            pendant_choices: Vec::new(),
            symmetric: counts.iter().all(|&k| k == counts[0]),
            budget,
            nodes: 0,
        }
    }

    fn spend_node(&mut self) -> bool {
        self.nodes += 1;
        match self.budget {
            Some(limit) => self.nodes <= limit,
            None => true,
        }
    }

    fn target_bit(&self, sum: i64) -> Option<u128> {
        let offset = sum - self.s;
        if offset < 0 || offset >= self.q as i64 {
            None
        } else {
            Some(1u128 << offset)
        }
    }

    /// Can the walk edge leaving a vertex labeled `label` still produce an
    /// unclaimed target with some free label?
    fn frontier_open(&self, label: i64) -> bool {
        shift_mask(self.free_labels, label + 1 - self.s) & self.open_targets != 0
    }

    fn run(&mut self) -> ProbeOutcome {
        match self.cycle_step(0) {
            Step::Found => ProbeOutcome::Feasible(self.collect_witness()),
            Step::NotFound => ProbeOutcome::Infeasible,
            Step::OutOfBudget => ProbeOutcome::Exhausted,
        }
    }

    fn cycle_step(&mut self, pos: usize) -> Step {
        if pos == self.n {
            return self.pendant_phase();
        }
        let mut candidates = self.free_labels;
        if self.symmetric && pos > 0 {
            // Rotations are automorphisms when all counts are equal, so the
            // walk start may be pinned to the least cycle label: later
            // positions only take larger labels.
            candidates &= !((1u128 << self.cycle_labels[0]) - 1);
        }
        while candidates != 0 {
            let label = candidates.trailing_zeros() as i64 + 1;
            candidates &= candidates - 1;
            // Labels below the pinned minimum cycle label must all end up
            // on pendants.
            if self.symmetric && pos == 0 && label - 1 > (self.q - self.n) as i64 {
                break;
            }
            // Reflection through the walk start is an automorphism too;
            // demand labels[1] < labels[n-1].
            if self.symmetric && pos == self.n - 1 && label < self.cycle_labels[1] {
                continue;
            }
            if !self.spend_node() {
                return Step::OutOfBudget;
            }

            let mut claim = 0u128;
            if pos > 0 {
                match self.target_bit(self.cycle_labels[pos - 1] + label) {
                    Some(bit) if self.open_targets & bit != 0 => claim |= bit,
                    _ => continue,
                }
            }
            if pos == self.n - 1 {
                match self.target_bit(self.cycle_labels[0] + label) {
                    Some(bit) if self.open_targets & bit != 0 && claim & bit == 0 => claim |= bit,
                    _ => continue,
                }
            }

            self.cycle_labels[pos] = label;
            self.free_labels &= !(1u128 << (label - 1));
            self.open_targets &= !claim;

            let viable = pos == self.n - 1 || self.frontier_open(label);
            if viable {
                match self.cycle_step(pos + 1) {
                    Step::Found => return Step::Found,
                    Step::OutOfBudget => return Step::OutOfBudget,
                    Step::NotFound => {}
                }
            }

            self.open_targets |= claim;
            self.free_labels |= 1u128 << (label - 1);
            self.cycle_labels[pos] = 0;
        }
        Step::NotFound
    }

    /// Every open target must be producible by some vertex with spare
    /// capacity, and every free label must be usable at one.
    fn pendant_prune(&self) -> bool {
        let mut coverable = 0u128;
        let mut usable = 0u128;
        for pos in 0..self.n {
            if self.caps[pos] == 0 {
                continue;
            }
            let shift = self.cycle_labels[pos] + 1 - self.s;
            coverable |= shift_mask(self.free_labels, shift);
            usable |= shift_mask(self.open_targets, -shift);
        }
        self.open_targets & !coverable == 0 && self.free_labels & !usable == 0
    }

    fn pendant_phase(&mut self) -> Step {
        self.pendant_choices.clear();
        if self.open_targets == 0 {
            return Step::Found;
        }
        if !self.pendant_prune() {
            return Step::NotFound;
        }
        // Providers in descending cycle-label order, so the pendant label
        // for a fixed target is tried in ascending order.
        let mut providers: Vec<usize> = (0..self.n).filter(|&pos| self.caps[pos] > 0).collect();
        providers.sort_unstable_by_key(|&pos| std::cmp::Reverse(self.cycle_labels[pos]));
        self.match_target(&providers)
    }

    fn match_target(&mut self, providers: &[usize]) -> Step {
        if self.open_targets == 0 {
            return Step::Found;
        }
        let target = self.s + self.open_targets.trailing_zeros() as i64;
        let target_bit = 1u128 << (target - self.s);
        for idx in 0..providers.len() {
            let pos = providers[idx];
            if self.caps[pos] == 0 {
                continue;
            }
            let label = target - self.cycle_labels[pos];
            if label < 1 || label > self.p {
                continue;
            }
            let label_bit = 1u128 << (label - 1);
            if self.free_labels & label_bit == 0 {
                continue;
            }
            if !self.spend_node() {
                return Step::OutOfBudget;
            }
            self.caps[pos] -= 1;
            self.free_labels &= !label_bit;
            self.open_targets &= !target_bit;
            self.pendant_choices.push((pos, label));

            if self.pendant_prune() {
                match self.match_target(providers) {
                    Step::Found => return Step::Found,
                    Step::OutOfBudget => return Step::OutOfBudget,
                    Step::NotFound => {}
                }
            }

            self.pendant_choices.pop();
            self.open_targets |= target_bit;
            self.free_labels |= label_bit;
            self.caps[pos] += 1;
        }
        Step::NotFound
    }

    /// Assembles witness labels by dense vertex index. Pendant labels at
    /// one cycle vertex are dealt out in the order their targets were
    /// matched, i.e. ascending.
    fn collect_witness(&self) -> Vec<i64> {
        let mut labels = vec![0i64; self.graph.p()];
        for (pos, &dense) in self.order.iter().enumerate() {
            labels[dense] = self.cycle_labels[pos];
        }
        let mut next_slot = vec![0usize; self.n];
        for &(pos, label) in &self.pendant_choices {
            let cycle_vertex = self.order[pos] + 1;
            next_slot[pos] += 1;
            let dense = self
                .graph
                .vertex_index(VertexId::Pendant(cycle_vertex, next_slot[pos]))
                .expect("capacity bound keeps pendant indices in range");
            labels[dense] = label;
        }
        labels
    }
}

fn probe_layer(
    graph: &LabeledGraph,
    s: i64,
    budget: Option<u64>,
) -> Result<(ProbeOutcome, u64), SearchError> {
    if graph.p() > MAX_SEARCH_ORDER {
        return Err(SearchError::GraphTooLarge(graph.p()));
    }
    let p = graph.p() as i64;
    let q = graph.q() as i64;
    // Two distinct labels sum to at least 3 and at most 2p-1.
    if s < 3 || s + q - 1 > 2 * p - 1 {
        return Ok((ProbeOutcome::Infeasible, 0));
    }
    // The targets sum to Σ deg(v)·f(v), which the rearrangement inequality
    // bounds over all bijections; a mismatch kills the layer outright.
    let target_total = q * s + q * (q - 1) / 2;
    let (deg_min, deg_max) = degree_label_sum_range(graph);
    if target_total < deg_min || target_total > deg_max {
        return Ok((ProbeOutcome::Infeasible, 0));
    }

    let mut probe = Probe::new(graph, s, budget);
    let outcome = probe.run();
    Ok((outcome, probe.nodes))
}

/// Decides whether some vertex bijection has edge sums exactly
/// `{s, …, s+q-1}`, returning a witness when one exists.
///
/// Fails with [`SearchError::BudgetExhausted`] when the probe could not
/// settle the question within its node budget.
pub fn feasible_for_min_sum(
    graph: &LabeledGraph,
    s: i64,
    node_budget: Option<u64>,
) -> Result<FeasibilityOutcome, SearchError> {
    let (outcome, nodes) = probe_layer(graph, s, node_budget)?;
    match outcome {
        ProbeOutcome::Feasible(labels) => Ok(FeasibilityOutcome {
            feasible: true,
            witness: Some(
                VertexLabeling::new(graph.clone(), labels)
                    .expect("search witnesses are bijections"),
            ),
            nodes_explored: nodes,
        }),
        ProbeOutcome::Infeasible => Ok(FeasibilityOutcome {
            feasible: false,
            witness: None,
            nodes_explored: nodes,
        }),
        ProbeOutcome::Exhausted => Err(SearchError::BudgetExhausted {
            s,
            nodes_explored: nodes,
        }),
    }
}

/// Determines `sm(G)` exactly by probing candidate minimum sums upward from
/// the degree-sum bound. The first feasible layer `s` yields
/// `sm = p + q + s` and a witness; every smaller layer has been proved
/// infeasible. Identical inputs produce identical results, including the
/// witness, for any `parallel_width`.
pub fn search_exact_strength(
    graph: &LabeledGraph,
    config: &SearchConfig,
) -> Result<SearchResult, SearchError> {
    if graph.p() > MAX_SEARCH_ORDER {
        return Err(SearchError::GraphTooLarge(graph.p()));
    }
    let p = graph.p() as i64;
    let q = graph.q() as i64;
    let (s_lo, s_hi) = match config.s_range_override {
        Some((lo, hi)) => {
            if lo > hi {
                return Err(SearchError::InvalidSRange(lo, hi));
            }
            (lo, hi)
        }
        None => {
            let (_, degsum) = degsum_lower_bound(graph);
            ((degsum - (p + q)).max(3), 3 * p - (p + q))
        }
    };

    let width = config.parallel_width.max(1) as i64;
    let mut per_s: Vec<(i64, LayerStatus)> = Vec::new();
    let mut nodes_explored = 0u64;

    let mut chunk_lo = s_lo;
    while chunk_lo <= s_hi {
        let chunk_hi = (chunk_lo + width - 1).min(s_hi);
        let chunk: Vec<i64> = (chunk_lo..=chunk_hi).collect();
        let outcomes = probe_chunk(graph, &chunk, config.node_budget)?;

        let mut exhausted_here = false;
        for (s, (outcome, nodes)) in chunk.iter().zip(outcomes) {
            if let ProbeOutcome::Feasible(labels) = outcome {
                if !exhausted_here {
                    per_s.push((*s, LayerStatus::Feasible));
                    nodes_explored += nodes;
                    let witness = VertexLabeling::new(graph.clone(), labels)
                        .expect("search witnesses are bijections")
                        .extend_to_total()
                        .expect("witness sums are consecutive by construction");
                    let sm = witness.magic_constant();
                    debug_assert_eq!(sm, p + q + s);
                    return Ok(SearchResult {
                        status: SearchStatus::Exact,
                        sm: Some(sm),
                        witness: Some(witness),
                        nodes_explored,
                        per_s_feasibility: per_s,
                    });
                }
                per_s.push((*s, LayerStatus::Feasible));
                nodes_explored += nodes;
            } else {
                let status = match outcome {
                    ProbeOutcome::Infeasible => LayerStatus::Infeasible,
                    ProbeOutcome::Exhausted => {
                        exhausted_here = true;
                        LayerStatus::BudgetExhausted
                    }
                    ProbeOutcome::Feasible(_) => unreachable!(),
                };
                per_s.push((*s, status));
                nodes_explored += nodes;
            }
        }
        if exhausted_here {
            for s in (chunk_hi + 1)..=s_hi {
                per_s.push((s, LayerStatus::Skipped));
            }
            return Ok(SearchResult {
                status: SearchStatus::BudgetExhausted,
                sm: None,
                witness: None,
                nodes_explored,
                per_s_feasibility: per_s,
            });
        }
        chunk_lo = chunk_hi + 1;
    }

    Ok(SearchResult {
        status: SearchStatus::Infeasible,
        sm: None,
        witness: None,
        nodes_explored,
        per_s_feasibility: per_s,
    })
}

fn probe_chunk(
    graph: &LabeledGraph,
    chunk: &[i64],
    budget: Option<u64>,
) -> Result<Vec<(ProbeOutcome, u64)>, SearchError> {
    if chunk.len() == 1 {
        return Ok(vec![probe_layer(graph, chunk[0], budget)?]);
    }
    let results: Vec<Result<(ProbeOutcome, u64), SearchError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunk
            .iter()
            .map(|&s| scope.spawn(move || probe_layer(graph, s, budget)))
            .collect();
        handles
            .into_iter()
            .map(|handle| handle.join().expect("probe thread panicked"))
            .collect()
    });
    results.into_iter().collect()
}

/// How one sweep instance relates to the conjectured value `2q + (n+3)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SweepOutcome {
    MatchesConjecture,
    /// The exact strength differs from the conjectured value; the instance
    /// carries a verifier-checkable witness of the true strength.
    Counterexample {
        sm: i64,
        conjecture: i64,
    },
    Indeterminate,
}

/// One line of a sweep report. `wall_time_ms` is the only field that varies
/// between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepInstance {
    pub family: String,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// Flags degenerate members with some `k_i = 0`, whose membership in
    /// the conjecture's intended scope is unclear.
    pub has_zero_counts: bool,
    pub bounds: StrengthBounds,
    pub search_status: SearchStatus,
    pub outcome: SweepOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sm: Option<i64>,
    pub nodes: u64,
    pub wall_time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LabelingDocument>,
    /// Per-layer outcomes, kept for counterexamples so the line carries the
    /// whole evidence chain: infeasibility below `sm`, a witness at it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_s_feasibility: Option<Vec<(i64, LayerStatus)>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub pendant_sum_max: usize,
    pub instances: Vec<SweepInstance>,
}

impl SweepReport {
    /// One JSON object per instance, one instance per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for instance in &self.instances {
            out.push_str(&serde_json::to_string(instance).expect("instance serializes"));
            out.push('\n');
        }
        out
    }

    /// Flat summary table. The family field is quoted (it contains commas).
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "family,n,p,q,degsum_lower,family_lower,family_upper,conjecture,sm,outcome,nodes,wall_time_ms\n",
        );
        for i in &self.instances {
            let outcome = match i.outcome {
                SweepOutcome::MatchesConjecture => "matches-conjecture",
                SweepOutcome::Counterexample { .. } => "counterexample",
                SweepOutcome::Indeterminate => "indeterminate",
            };
            let sm = i.sm.map_or(String::new(), |v| v.to_string());
            out.push_str(&format!(
                "\"{}\",{},{},{},{},{},{},{},{},{},{},{}\n",
                i.family,
                i.n,
                i.p,
                i.q,
                i.bounds.degsum_lower,
                i.bounds.family_lower,
                i.bounds.family_upper,
                i.bounds.conjecture_value,
                sm,
                outcome,
                i.nodes,
                i.wall_time_ms
            ));
        }
        out
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &SweepInstance> {
        self.instances
            .iter()
            .filter(|i| matches!(i.outcome, SweepOutcome::Counterexample { .. }))
    }

    pub fn indeterminate_count(&self) -> usize {
        self.instances
            .iter()
            .filter(|i| matches!(i.outcome, SweepOutcome::Indeterminate))
            .count()
    }
}

/// All families with odd `3 ≤ n ≤ n_max` and pendant totals at most
/// `pendant_sum_max`, one lexicographically-least representative per
/// rotation/reflection class, in deterministic order.
pub fn enumerate_canonical_families(n_max: usize, pendant_sum_max: usize) -> Vec<UnicyclicFamily> {
    let mut families = Vec::new();
    let mut n = 3;
    while n <= n_max {
        let mut counts = vec![0usize; n];
        enumerate_counts(&mut counts, 0, pendant_sum_max, &mut |counts| {
            let family = UnicyclicFamily::new(n, counts.to_vec()).expect("valid family");
            if family.canonical() == family {
                families.push(family);
            }
        });
        n += 2;
    }
    families
}

fn enumerate_counts(
    counts: &mut Vec<usize>,
    position: usize,
    remaining: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if position == counts.len() {
        visit(counts);
        return;
    }
    for value in 0..=remaining {
        counts[position] = value;
        enumerate_counts(counts, position + 1, remaining - value, visit);
    }
    counts[position] = 0;
}

/// Searches every canonical family in range and compares the exact strength
/// against the conjectured value. Counterexamples ship their full witness;
/// budget exhaustion is reported as indeterminate.
pub fn conjecture_sweep(
    n_max: usize,
    pendant_sum_max: usize,
    config: &SearchConfig,
) -> Result<SweepReport, SearchError> {
    let mut instances = Vec::new();
    for family in enumerate_canonical_families(n_max, pendant_sum_max) {
        let graph = build_unicyclic(&family);
        let bounds = strength_bounds(&graph);
        let started = Instant::now();
        let result = search_exact_strength(&graph, config)?;
        let wall_time_ms = started.elapsed().as_millis() as u64;
        let conjecture = bounds.conjecture_value;
        let (outcome, witness, per_s) = match (result.status, result.sm) {
            (SearchStatus::Exact, Some(sm)) if sm == conjecture => {
                (SweepOutcome::MatchesConjecture, None, None)
            }
            (SearchStatus::Exact, Some(sm)) => (
                SweepOutcome::Counterexample { sm, conjecture },
                result.witness.as_ref().map(LabelingDocument::from_total),
                Some(result.per_s_feasibility.clone()),
            ),
            _ => (SweepOutcome::Indeterminate, None, None),
        };
        instances.push(SweepInstance {
            family: family.to_string(),
            n: family.n(),
            p: graph.p(),
            q: graph.q(),
            has_zero_counts: family.has_zero_counts(),
            bounds,
            search_status: result.status,
            outcome,
            sm: result.sm,
            nodes: result.nodes_explored,
            wall_time_ms,
            witness,
            per_s_feasibility: per_s,
        });
    }
    Ok(SweepReport {
        n_max,
        pendant_sum_max,
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::verify_semt;

    fn graph(n: usize, counts: &[usize]) -> LabeledGraph {
        build_unicyclic(&UnicyclicFamily::new(n, counts.to_vec()).unwrap())
    }

    #[test]
    fn triangle_feasible_at_three() {
        let g = graph(3, &[0, 0, 0]);
        let outcome = feasible_for_min_sum(&g, 3, None).unwrap();
        assert!(outcome.feasible);
        assert_eq!(outcome.witness.unwrap().labels(), &[1, 2, 3]);
    }

    #[test]
    fn five_cycle_feasible_only_at_four() {
        let g = graph(5, &[0; 5]);
        assert!(!feasible_for_min_sum(&g, 3, None).unwrap().feasible);
        assert!(feasible_for_min_sum(&g, 4, None).unwrap().feasible);
        assert!(!feasible_for_min_sum(&g, 5, None).unwrap().feasible);
    }

    #[test]
    fn cycle_strengths() {
        for n in [3usize, 5, 7, 9] {
            let g = graph(n, &vec![0; n]);
            let result = search_exact_strength(&g, &SearchConfig::default()).unwrap();
            assert_eq!(result.status, SearchStatus::Exact);
            assert_eq!(result.sm, Some((5 * n as i64 + 3) / 2), "C{n}");
            let witness = result.witness.unwrap();
            assert!(verify_semt(&witness).valid);
            // Regular graph: every labeling has constant (4p+q+3)/2.
            assert_eq!(
                witness.magic_constant(),
                (4 * g.p() as i64 + g.q() as i64 + 3) / 2
            );
        }
    }

    #[test]
    fn search_matches_equal_count_value_on_triangle_with_pendants() {
        let g = graph(3, &[1, 1, 1]);
        let result = search_exact_strength(&g, &SearchConfig::default()).unwrap();
        assert_eq!(result.status, SearchStatus::Exact);
        assert_eq!(result.sm, Some(15));
        assert!(verify_semt(&result.witness.unwrap()).valid);
    }

    #[test]
    fn search_matches_surplus_theorem_at_desk_scale() {
        // G(5;1,1,1,1,2) is the surplus family with k = 1, c = 1.
        let g = graph(5, &[1, 1, 1, 1, 2]);
        let result = search_exact_strength(&g, &SearchConfig::default()).unwrap();
        assert_eq!(result.sm, Some(26));
    }

    #[test]
    fn per_layer_statuses_are_recorded() {
        let g = graph(5, &[0; 5]);
        let config = SearchConfig {
            s_range_override: Some((3, 5)),
            ..SearchConfig::default()
        };
        let result = search_exact_strength(&g, &config).unwrap();
        assert_eq!(
            result.per_s_feasibility,
            vec![(3, LayerStatus::Infeasible), (4, LayerStatus::Feasible)]
        );
    }

    #[test]
    fn infeasible_range_is_reported() {
        let g = graph(5, &[0; 5]);
        let config = SearchConfig {
            s_range_override: Some((3, 3)),
            ..SearchConfig::default()
        };
        let result = search_exact_strength(&g, &config).unwrap();
        assert_eq!(result.status, SearchStatus::Infeasible);
        assert_eq!(result.sm, None);
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let g = graph(5, &[2, 1, 0, 3, 1]);
        let config = SearchConfig {
            node_budget: Some(3),
            ..SearchConfig::default()
        };
        let result = search_exact_strength(&g, &config).unwrap();
        assert_eq!(result.status, SearchStatus::BudgetExhausted);
        assert_eq!(result.sm, None);
        assert!(result
            .per_s_feasibility
            .iter()
            .any(|&(_, status)| status == LayerStatus::BudgetExhausted));
        // s = 3 dies in the arithmetic precheck without spending nodes; the
        // first genuinely probed layer is where the budget can run out.
        assert!(feasible_for_min_sum(&g, 3, Some(3)).is_ok());
        assert!(matches!(
            feasible_for_min_sum(&g, 4, Some(3)),
            Err(SearchError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn parallel_width_does_not_change_the_result() {
        let g = graph(5, &[2, 0, 1, 0, 1]);
        let sequential = search_exact_strength(&g, &SearchConfig::default()).unwrap();
        let parallel = search_exact_strength(
            &g,
            &SearchConfig {
                parallel_width: 4,
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert_eq!(sequential, parallel);
    }

    #[test]
    fn strength_is_rotation_invariant() {
        let a =
            search_exact_strength(&graph(5, &[1, 0, 2, 0, 0]), &SearchConfig::default()).unwrap();
        let b =
            search_exact_strength(&graph(5, &[0, 2, 0, 0, 1]), &SearchConfig::default()).unwrap();
        assert_eq!(a.sm, b.sm);
    }

    #[test]
    fn canonical_enumeration_is_small_and_canonical() {
        let families = enumerate_canonical_families(3, 2);
        let descriptors: Vec<String> = families.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            descriptors,
            vec!["3;0,0,0", "3;0,0,1", "3;0,0,2", "3;0,1,1"]
        );
        for family in &families {
            assert_eq!(&family.canonical(), family);
        }
    }

    #[test]
    fn sweep_on_triangles_matches_conjecture() {
        let report = conjecture_sweep(3, 3, &SearchConfig::default()).unwrap();
        assert!(report.instances.len() > 4);
        assert_eq!(report.indeterminate_count(), 0);
        assert_eq!(report.counterexamples().count(), 0);
        for instance in &report.instances {
            assert_eq!(instance.search_status, SearchStatus::Exact);
            assert_eq!(instance.outcome, SweepOutcome::MatchesConjecture);
        }
        // The bare triangle is flagged as a zero-count member.
        assert!(report.instances[0].has_zero_counts);
    }

    #[test]
    fn pendant_free_sweep_covers_both_cycles() {
        let report = conjecture_sweep(5, 0, &SearchConfig::default()).unwrap();
        let summary: Vec<(String, Option<i64>)> = report
            .instances
            .iter()
            .map(|i| (i.family.clone(), i.sm))
            .collect();
        assert_eq!(
            summary,
            vec![
                ("3;0,0,0".to_string(), Some(9)),
                ("5;0,0,0,0,0".to_string(), Some(14)),
            ]
        );
        // sm(C5) = 14 = 2q + (n+3)/2 at q = n = 5.
        assert_eq!(report.instances[1].bounds.conjecture_value, 14);
        assert_eq!(report.instances[1].outcome, SweepOutcome::MatchesConjecture);
    }

    #[test]
    fn sweep_is_deterministic_modulo_wall_time() {
        let config = SearchConfig::default();
        let mut a = conjecture_sweep(3, 2, &config).unwrap();
        let mut b = conjecture_sweep(3, 2, &config).unwrap();
        for instance in a.instances.iter_mut().chain(b.instances.iter_mut()) {
            instance.wall_time_ms = 0;
        }
        assert_eq!(a, b);
        assert_eq!(a.to_jsonl(), b.to_jsonl());
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let g = graph(3, &[200, 0, 0]);
        assert!(matches!(
            search_exact_strength(&g, &SearchConfig::default()),
            Err(SearchError::GraphTooLarge(_))
        ));
    }
}
