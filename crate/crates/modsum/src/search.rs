//! Backtracking existence search for labelings with a target property over a
//! fixed modulus, and minimum-modulus search on top of it.
//!
//! The search assigns nonempty subsets of `Z_n` to vertices depth-first in a
//! fixed order (descending degree, ties by index) with candidate masks tried
//! in ascending bit-pattern order, so outcomes and witnesses are
//! deterministic. `Exhausted` is a proof of nonexistence at the given
//! modulus; every `Found` witness is re-verified through the labeling
//! module's classifiers before it is returned.

use crate::graph::Graph;
use crate::labeling::{Labeling, LabelingError};
use crate::zn::{diff_word, sumset_word, word_mask, ZnSet};
use std::time::{Duration, Instant};

/// Moduli above this make subset enumeration pointless; the search refuses
/// rather than spinning.
pub const MAX_SEARCH_MODULUS: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("search requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("modulus {0} exceeds the search maximum {MAX_SEARCH_MODULUS}")]
    ModulusTooLarge(u32),
    #[error("uniformity parameter k must be at least 1")]
    ZeroK,
    #[error("vertex count {0} must be at least 1 for the size formula")]
    ZeroVertices(usize),
}

/// The property a sought labeling must satisfy, beyond injectivity.
///
/// `Weak` is the singleton-end reading (every edge has a monocardinal end),
/// matching the proofs it is audited against; `WeakLiteral` is the literal
/// cardinality definition. Both are first-class because they differ over
/// `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertySpec {
    Plain,
    Indexer,
    Weak,
    WeakLiteral,
    WeakKUniform(u32),
    Strong,
    StrongKUniform(u32),
    Maximal,
    Exquisite,
}

impl PropertySpec {
    pub fn uniformity(&self) -> Option<u32> {
        match self {
            PropertySpec::WeakKUniform(k) | PropertySpec::StrongKUniform(k) => Some(*k),
            _ => None,
        }
    }

    /// Re-checks a labeling against this property through the classifier,
    /// independently of the incremental checks the search itself performs.
    /// Edge-quantified properties hold vacuously on edgeless graphs.
    pub fn holds(&self, labeling: &Labeling) -> Result<bool, LabelingError> {
        let report = labeling.classify()?;
        let edgeless = labeling.graph().edge_count() == 0;
        Ok(match *self {
            PropertySpec::Plain => true,
            PropertySpec::Indexer => report.is_indexer,
            PropertySpec::Weak => report.weak_singleton_form,
            PropertySpec::WeakLiteral => report.weak,
            PropertySpec::WeakKUniform(k) => {
                report.weak_singleton_form && (edgeless || report.edge_uniform_k == Some(k))
            }
            PropertySpec::Strong => report.strong,
            PropertySpec::StrongKUniform(k) => {
                report.strong && (edgeless || report.edge_uniform_k == Some(k))
            }
            PropertySpec::Maximal => report.maximal,
            PropertySpec::Exquisite => report.exquisite,
        })
    }
}

impl std::fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PropertySpec::Plain => write!(f, "plain"),
            PropertySpec::Indexer => write!(f, "indexer"),
            PropertySpec::Weak => write!(f, "weak"),
            PropertySpec::WeakLiteral => write!(f, "weak-literal"),
            PropertySpec::WeakKUniform(k) => write!(f, "weak-{k}-uniform"),
            PropertySpec::Strong => write!(f, "strong"),
            PropertySpec::StrongKUniform(k) => write!(f, "strong-{k}-uniform"),
            PropertySpec::Maximal => write!(f, "maximal"),
            PropertySpec::Exquisite => write!(f, "exquisite"),
        }
    }
}

/// Node and wall-clock limits for one `(graph, modulus, spec)` call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 10_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::Found => "FOUND",
            SearchStatus::Exhausted => "EXHAUSTED",
            SearchStatus::BudgetExceeded => "BUDGET_EXCEEDED",
        }
    }
}

/// Result of one existence search. `nodes_expanded` counts candidate label
/// assignments attempted, which is deterministic for fixed inputs and node
/// budget.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<Labeling>,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

/// Result of a minimum-modulus search. `exact` means every modulus below
/// `value` was exhausted (not budget-limited), so `value` is the true
/// minimum; when no modulus in range works, `exact` means the whole range
/// was exhausted.
#[derive(Debug, Clone)]
pub struct MinResult {
    pub value: Option<u32>,
    pub per_n: Vec<(u32, SearchOutcome)>,
    pub exact: bool,
}

/// Searches for an injective labeling of `graph` over `Z_n` satisfying
/// `spec`. The witness returned on `Found` is the first in the documented
/// order: vertices by descending degree then index, candidate masks
/// ascending. For `Weak` the search runs in its canonical cover-singleton
/// form — the lexicographically least minimum vertex cover is assigned
/// first and takes singleton labels only (completeness argued below) — so
/// its witness is the least within that form rather than over all weak
/// labelings.
pub fn exists_labeling(
    graph: &Graph,
    n: u32,
    spec: &PropertySpec,
    budget: &Budget,
) -> Result<SearchOutcome, SearchError> {
    if graph.vertex_count() == 0 {
        return Err(SearchError::EmptyGraph);
    }
    if n == 0 {
        return Err(SearchError::ZeroModulus);
    }
    if n > MAX_SEARCH_MODULUS {
        return Err(SearchError::ModulusTooLarge(n));
    }
    if spec.uniformity() == Some(0) {
        return Err(SearchError::ZeroK);
    }
    let start = Instant::now();
    let m = graph.vertex_count();

    // Pigeonhole preflight: an injective labeling needs m distinct nonempty
    // subsets, and Z_n has exactly 2^n - 1 of them.
    let nonempty_subsets = (1u64 << n) - 1;
    if nonempty_subsets < m as u64 {
        return Ok(SearchOutcome {
            status: SearchStatus::Exhausted,
            witness: None,
            nodes_expanded: 0,
            elapsed: start.elapsed(),
        });
    }

    // For the singleton-end weak property the search space is restricted to
    // labelings whose canonical minimum vertex cover C* is all-singleton.
    // This is complete: in any weak labeling the singleton-labeled vertices
    // cover every edge, so n >= alpha and (injectivity) 2^n - 1 >= m; and
    // whenever n >= alpha and 2^n - 1 >= m, assigning C* distinct singletons
    // and the remaining vertices arbitrary distinct unused subsets is again
    // weak. Exhausting the restricted space therefore proves nonexistence.
    let weak_cover: Option<Vec<usize>> = match spec {
        PropertySpec::Weak => Some(graph.covering_number().1),
        _ => None,
    };
    if let Some(cover) = &weak_cover {
        if (n as usize) < cover.len() {
            return Ok(SearchOutcome {
                status: SearchStatus::Exhausted,
                witness: None,
                nodes_expanded: 0,
                elapsed: start.elapsed(),
            });
        }
    }

    // Vertex order: descending degree, ties by index. For the weak spec
    // the cover block comes first: cover vertices are restricted to the n
    // singleton labels, and letting unrestricted vertices consume
    // singletons first causes deep backtracking for no gain (any
    // permutation of the remaining subsets completes a weak labeling).
    let cover_mask = weak_cover
        .as_ref()
        .map(|cover| cover.iter().fold(0u64, |mask, &v| mask | 1 << v))
        .unwrap_or(0);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&v| {
        (
            cover_mask & (1 << v) == 0,
            std::cmp::Reverse(graph.degree(v)),
            v,
        )
    });

    let mut searcher = Searcher {
        graph,
        n,
        spec: *spec,
        order,
        cover_mask,
        assigned: vec![0; m],
        assigned_diff: vec![0; m],
        assigned_vertices: 0,
        used: std::collections::HashSet::new(),
        seen_edge_labels: std::collections::HashSet::new(),
        forced_cards: vec![(0, 0); m],
        forced_generation: 0,
        nodes: 0,
        ticks: 0,
        max_nodes: budget.max_nodes,
        max_time: budget.max_time,
        start,
        out_of_budget: false,
    };
    let found = searcher.dfs(0);
    let nodes_expanded = searcher.nodes;

    let outcome = if found {
        let labels: Vec<ZnSet> = searcher
            .assigned
            .iter()
            .map(|&mask| ZnSet::from_mask(n, mask).expect("assigned masks are valid"))
            .collect();
        let labeling =
            Labeling::new(graph.clone(), n, labels).expect("search assigns nonempty labels");
        // Certificate soundness: re-verify through the classifier path.
        let verified = spec
            .holds(&labeling)
            .expect("search witnesses are injective");
        assert!(verified, "search returned a witness violating {spec}");
        SearchOutcome {
            status: SearchStatus::Found,
            witness: Some(labeling),
            nodes_expanded,
            elapsed: start.elapsed(),
        }
    } else if searcher.out_of_budget {
        SearchOutcome {
            status: SearchStatus::BudgetExceeded,
            witness: None,
            nodes_expanded,
            elapsed: start.elapsed(),
        }
    } else {
        SearchOutcome {
            status: SearchStatus::Exhausted,
            witness: None,
            nodes_expanded,
            elapsed: start.elapsed(),
        }
    };
    Ok(outcome)
}

struct Searcher<'a> {
    graph: &'a Graph,
    n: u32,
    spec: PropertySpec,
    order: Vec<usize>,
    cover_mask: u64,
    assigned: Vec<u64>,
    assigned_diff: Vec<u64>,
    assigned_vertices: u64,
    used: std::collections::HashSet<u64>,
    seen_edge_labels: std::collections::HashSet<u64>,
    forced_cards: Vec<(u64, u64)>,
    forced_generation: u64,
    nodes: u64,
    ticks: u64,
    max_nodes: u64,
    max_time: Duration,
    start: Instant,
    out_of_budget: bool,
}

impl Searcher<'_> {
    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let full = word_mask(self.n);
        let mut mask = 0u64;
        while mask < full {
            mask += 1;
            self.ticks += 1;
            if self.ticks.is_multiple_of(65_536) && self.start.elapsed() > self.max_time {
                self.out_of_budget = true;
                return false;
            }
            if !self.candidate_allowed(v, mask) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                self.out_of_budget = true;
                return false;
            }
            if self.used.contains(&mask) {
                continue;
            }
            let mut new_edge_labels: Vec<u64> = Vec::new();
            if !self.edges_admit(v, mask, &mut new_edge_labels) {
                for label in new_edge_labels {
                    self.seen_edge_labels.remove(&label);
                }
                continue;
            }
            self.assigned[v] = mask;
            self.assigned_vertices |= 1 << v;
            if !self.forced_cards_feasible(v) {
                self.assigned[v] = 0;
                self.assigned_vertices &= !(1 << v);
                for label in new_edge_labels {
                    self.seen_edge_labels.remove(&label);
                }
                continue;
            }
            self.assigned_diff[v] = diff_word(mask, self.n);
            self.used.insert(mask);
            if self.dfs(pos + 1) {
                return true;
            }
            self.assigned[v] = 0;
            self.assigned_diff[v] = 0;
            self.assigned_vertices &= !(1 << v);
            self.used.remove(&mask);
            for label in new_edge_labels {
                self.seen_edge_labels.remove(&label);
            }
            if self.out_of_budget {
                return false;
            }
        }
        false
    }

    /// Unary candidate restrictions. Each is forced by the property on any
    /// non-isolated vertex, so filtering here cannot lose solutions:
    /// - `Weak`: vertices of the canonical minimum cover take singletons
    ///   (completeness argued at the call site);
    /// - `WeakKUniform(k)`: an edge needs one singleton end and edge
    ///   cardinality k, which is the other end's cardinality, so every
    ///   non-isolated vertex has cardinality 1 or k;
    /// - `StrongKUniform(k)`: endpoint cardinalities multiply to k, so every
    ///   non-isolated vertex's cardinality divides k.
    fn candidate_allowed(&self, v: usize, mask: u64) -> bool {
        match self.spec {
            PropertySpec::Weak => {
                self.cover_mask & (1 << v) == 0 || mask.count_ones() == 1
            }
            PropertySpec::WeakKUniform(k) => {
                let c = mask.count_ones();
                self.graph.degree(v) == 0 || c == 1 || c == k
            }
            PropertySpec::StrongKUniform(k) => {
                self.graph.degree(v) == 0 || k % mask.count_ones() == 0
            }
            _ => true,
        }
    }

    /// Forward check for the uniform specs after assigning `v`. On every
    /// edge the two label cardinalities determine each other (strongly
    /// k-uniform: partner has `k / c` elements; weakly k-uniform: a
    /// singleton sits opposite a k-set and vice versa), so the cardinality
    /// of `v` forces the cardinality of every vertex reachable from it,
    /// assigned or not. The propagation walks that closure; a vertex
    /// forced to two different values, or to a value above `n`, proves no
    /// completion of the current assignment exists, which keeps the prune
    /// sound for `Exhausted` verdicts.
    fn forced_cards_feasible(&mut self, v: usize) -> bool {
        let (k, strong) = match self.spec {
            PropertySpec::StrongKUniform(k) => (u64::from(k), true),
            PropertySpec::WeakKUniform(k) => (u64::from(k), false),
            _ => return true,
        };
        let partner = |c: u64| -> Option<u64> {
            if strong {
                (k % c == 0).then_some(k / c)
            } else if c == 1 && k > 1 {
                Some(k)
            } else {
                Some(1)
            }
        };
        self.forced_generation += 1;
        let generation = self.forced_generation;
        let start_card = u64::from(self.assigned[v].count_ones());
        self.forced_cards[v] = (generation, start_card);
        let mut queue = vec![v];
        while let Some(x) = queue.pop() {
            let cx = self.forced_cards[x].1;
            let mut rest = self.graph.neighbors(x);
            if rest == 0 {
                continue;
            }
            // The partner constraint binds only along edges.
            let Some(need) = partner(cx) else {
                return false;
            };
            if need > u64::from(self.n) {
                return false;
            }
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let known = if self.assigned_vertices & (1 << u) != 0 {
                    Some(u64::from(self.assigned[u].count_ones()))
                } else if self.forced_cards[u].0 == generation {
                    Some(self.forced_cards[u].1)
                } else {
                    None
                };
                match known {
                    Some(cu) if cu != need => return false,
                    Some(_) => {}
                    None => {
                        self.forced_cards[u] = (generation, need);
                        queue.push(u);
                    }
                }
            }
        }
        true
    }

    /// Checks every edge between `v` and an already-assigned neighbor. All
    /// properties here are per-edge conditions (the indexer additionally
    /// keeps a global set of seen edge labels), so checking each edge once,
    /// when its second endpoint is assigned, is exact.
    fn edges_admit(&mut self, v: usize, a: u64, new_edge_labels: &mut Vec<u64>) -> bool {
        let n = self.n;
        let a_card = a.count_ones() as u64;
        let a_diff = diff_word(a, n);
        let mut rest = self.graph.neighbors(v) & self.assigned_vertices;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let b = self.assigned[u];
            let b_card = b.count_ones() as u64;
            let ok = match self.spec {
                PropertySpec::Plain => true,
                PropertySpec::Indexer => {
                    let label = sumset_word(a, b, n);
                    if self.seen_edge_labels.contains(&label) {
                        false
                    } else {
                        self.seen_edge_labels.insert(label);
                        new_edge_labels.push(label);
                        true
                    }
                }
                PropertySpec::Weak => a_card == 1 || b_card == 1,
                PropertySpec::WeakLiteral => {
                    let s = sumset_word(a, b, n).count_ones() as u64;
                    s == a_card || s == b_card
                }
                PropertySpec::WeakKUniform(k) => {
                    (a_card == 1 || b_card == 1)
                        && sumset_word(a, b, n).count_ones() == k
                }
                // |A+B| = |A||B| iff the modular difference sets are
                // disjoint: a repeated sum a+b = a'+b' with distinct pairs
                // forces a-a' = b'-b to be a shared nonzero difference, and
                // conversely.
                PropertySpec::Strong => a_diff & self.assigned_diff[u] == 0,
                PropertySpec::StrongKUniform(k) => {
                    a_card * b_card == u64::from(k) && a_diff & self.assigned_diff[u] == 0
                }
                PropertySpec::Maximal => {
                    // Necessary first: |A||B| >= n, since |A+B| <= |A||B|.
                    a_card * b_card >= u64::from(n)
                        && sumset_word(a, b, n) == word_mask(n)
                }
                PropertySpec::Exquisite => {
                    let s = sumset_word(a, b, n);
                    a & !s == 0 && b & !s == 0
                }
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Tries moduli 1, 2, …, `n_max` in order and reports the first that admits
/// a labeling satisfying `spec`, with the full per-modulus trace.
pub fn min_modulus(
    graph: &Graph,
    spec: &PropertySpec,
    n_max: u32,
    budget: &Budget,
) -> Result<MinResult, SearchError> {
    let mut per_n = Vec::new();
    for n in 1..=n_max {
        let outcome = exists_labeling(graph, n, spec, budget)?;
        let found = outcome.status == SearchStatus::Found;
        per_n.push((n, outcome));
        if found {
            let exact = per_n[..per_n.len() - 1]
                .iter()
                .all(|(_, o)| o.status == SearchStatus::Exhausted);
            return Ok(MinResult {
                value: Some(n),
                per_n,
                exact,
            });
        }
    }
    let exact = per_n
        .iter()
        .all(|(_, o)| o.status == SearchStatus::Exhausted);
    Ok(MinResult {
        value: None,
        per_n,
        exact,
    })
}

/// Default modulus ceiling for minimum-modulus searches on `graph`:
/// vertex count plus two, clamped to the search maximum.
pub fn default_n_max(graph: &Graph) -> u32 {
    (graph.vertex_count() as u32 + 2).min(MAX_SEARCH_MODULUS)
}

/// Smallest `n` with at least `m` nonempty subsets of `Z_n`, i.e.
/// `1 + floor(log2 m)`, in exact integer arithmetic.
pub fn sigma_formula(m: usize) -> Result<u32, SearchError> {
    if m == 0 {
        return Err(SearchError::ZeroVertices(m));
    }
    Ok(1 + (m as u64).ilog2())
}

/// `max(alpha, r)` where `r` is the smallest positive integer with
/// `2^r - r - 1 >= beta`: the claimed weak minimum ground-set size in terms
/// of the covering number `alpha` and independence number `beta`.
pub fn weak_number_formula(graph: &Graph) -> u32 {
    let (alpha, _) = graph.covering_number();
    let (beta, _) = graph.independence_number();
    let mut r = 1u32;
    while (1u64 << r) - u64::from(r) - 1 < beta as u64 {
        r += 1;
    }
    (alpha as u32).max(r)
}

/// The claimed weakly-k-uniform minimum ground-set size: for `k < alpha`,
/// `max(alpha, r)` with `r` minimal such that `C(r, k) >= beta`; for
/// `k >= alpha`, the smallest `n` with `C(n, k) >= beta`.
pub fn weak_uniform_min_formula(graph: &Graph, k: u32) -> Result<u32, SearchError> {
    if k == 0 {
        return Err(SearchError::ZeroK);
    }
    let (alpha, _) = graph.covering_number();
    let (beta, _) = graph.independence_number();
    let mut r = 1u32;
    while binomial(u64::from(r), u64::from(k)) < beta as u128 {
        r += 1;
    }
    if (k as usize) < alpha {
        Ok((alpha as u32).max(r))
    } else {
        Ok(r)
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * u128::from(n - i) / u128::from(i + 1);
    }
    result
}
