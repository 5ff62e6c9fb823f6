//! Finite simple graphs on up to 64 vertices: the standard families, exact
//! covering and independence numbers, bipartiteness, and exhaustive
//! enumeration of small labeled graphs.

use serde::{Deserialize, Serialize};

/// Vertex count cap; adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

/// Exhaustive enumeration cap: 2^(m(m-1)/2) labeled graphs at m vertices.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("family size {size} below the minimum {minimum} for {family}")]
    SizeBelowMinimum {
        family: &'static str,
        size: usize,
        minimum: usize,
    },
    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),
    #[error("family '{0}' requires a size parameter")]
    MissingSize(&'static str),
    #[error("enumeration over {0} vertices exceeds the budget (max {MAX_ENUMERATION_VERTICES})")]
    EnumerationBudget(usize),
}

/// A finite simple undirected graph: per-vertex neighbor bitsets plus the
/// canonical sorted edge list (u < v in every pair).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing the edge list: reversed pairs are flipped,
    /// duplicates dropped, the result sorted. Self-loops are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        let mut adj = vec![0u64; vertex_count];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut canonical = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            let mut rest = row >> u >> 1;
            while rest != 0 {
                let v = u + 1 + rest.trailing_zeros() as usize;
                canonical.push((u, v));
                rest &= rest - 1;
            }
        }
        Ok(Graph {
            vertex_count,
            adj,
            edges: canonical,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted lexicographically with u < v.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.adj[u] & (1 << v) != 0
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.vertex_count
    }

    pub fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for root in 0..self.vertex_count {
            if seen & (1 << root) != 0 {
                continue;
            }
            count += 1;
            let mut frontier = 1u64 << root;
            while frontier != 0 {
                seen |= frontier;
                let mut next = 0u64;
                let mut rest = frontier;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[v];
                }
                frontier = next & !seen;
            }
        }
        count
    }

    /// Number of connected components that contain an odd cycle.
    pub fn non_bipartite_component_count(&self) -> usize {
        let mut color = vec![None::<bool>; self.vertex_count];
        let mut count = 0;
        for root in 0..self.vertex_count {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = std::collections::VecDeque::from([root]);
            let mut odd_cycle = false;
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                let mut rest = self.adj[u];
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => odd_cycle = true,
                        Some(_) => {}
                    }
                }
            }
            if odd_cycle {
                count += 1;
            }
        }
        count
    }

    /// True for K_{1,t}: one center adjacent to every other vertex, no other
    /// edges, and at least one edge.
    pub fn is_star(&self) -> bool {
        if self.edges.is_empty() {
            return false;
        }
        (0..self.vertex_count).any(|c| {
            self.degree(c) == self.vertex_count - 1
                && (0..self.vertex_count).all(|v| v == c || self.degree(v) == 1)
        })
    }

    /// Two-coloring by breadth-first layering, one component at a time;
    /// component roots are the smallest unvisited indices and land in the
    /// first side. `None` iff some component has an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![None::<bool>; self.vertex_count];
        for root in 0..self.vertex_count {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                let mut rest = self.adj[u];
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side = |want: bool| {
            (0..self.vertex_count)
                .filter(|&v| color[v] == Some(want))
                .collect()
        };
        Some((side(false), side(true)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Minimum vertex cover: exact size by branch and bound, then the
    /// lexicographically smallest cover of that size.
    pub fn covering_number(&self) -> (usize, Vec<usize>) {
        let alpha = self.min_cover_size();
        let witness = self.lex_smallest_cover(alpha);
        (alpha, witness)
    }

    fn min_cover_size(&self) -> usize {
        // Trivial upper bound: every non-isolated vertex.
        let mut best = (0..self.vertex_count)
            .filter(|&v| self.adj[v] != 0)
            .count();
        self.cover_branch(0u64, 0, &mut best);
        best
    }

    /// Branch on an uncovered edge: one endpoint or the other must join the
    /// cover. Prunes with a greedy-matching lower bound.
    fn cover_branch(&self, chosen: u64, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        match self.first_uncovered_edge(chosen) {
            None => *best = size,
            Some((u, v)) => {
                if size + self.matching_lower_bound(chosen) >= *best {
                    return;
                }
                self.cover_branch(chosen | 1 << u, size + 1, best);
                self.cover_branch(chosen | 1 << v, size + 1, best);
            }
        }
    }

    fn first_uncovered_edge(&self, chosen: u64) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| chosen & (1 << u) == 0 && chosen & (1 << v) == 0)
    }

    /// Size of a greedy maximal matching among edges not yet covered; each
    /// matching edge requires its own cover vertex.
    fn matching_lower_bound(&self, chosen: u64) -> usize {
        let mut used = chosen;
        let mut size = 0;
        for &(u, v) in &self.edges {
            if used & (1 << u) == 0 && used & (1 << v) == 0 {
                used |= (1 << u) | (1 << v);
                size += 1;
            }
        }
        size
    }

    /// Depth-first over vertices in ascending order, trying "include" before
    /// "exclude", so the first cover of the target size found is the
    /// lexicographically smallest.
    fn lex_smallest_cover(&self, target: usize) -> Vec<usize> {
        let mut chosen = Vec::new();
        let found = self.lex_cover_dfs(0, target, &mut chosen);
        debug_assert!(found, "a cover of the optimal size always exists");
        chosen
    }

    fn lex_cover_dfs(&self, v: usize, remaining: usize, chosen: &mut Vec<usize>) -> bool {
        let chosen_mask = chosen.iter().fold(0u64, |m, &c| m | 1 << c);
        if remaining == 0 {
            // No cover is smaller than the optimum, so reaching the target
            // size is exactly when every edge must already be covered.
            return self.first_uncovered_edge(chosen_mask).is_none();
        }
        if v >= self.vertex_count {
            return false;
        }
        // Edges with both endpoints already passed over are permanently
        // uncovered on this branch.
        if self
            .edges
            .iter()
            .any(|&(a, b)| b < v && chosen_mask & (1 << a) == 0 && chosen_mask & (1 << b) == 0)
        {
            return false;
        }
        if self.matching_lower_bound(chosen_mask) > remaining {
            return false;
        }
        chosen.push(v);
        if self.lex_cover_dfs(v + 1, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
        self.lex_cover_dfs(v + 1, remaining, chosen)
    }

    /// Maximum independent set, computed as a maximum clique of the
    /// complement so the Gallai identity against
    /// [`covering_number`](Self::covering_number) is a genuine cross-check.
    /// Returns the size and the lexicographically smallest witness.
    pub fn independence_number(&self) -> (usize, Vec<usize>) {
        let complement = self.complement();
        let beta = complement.max_clique_size();
        let witness = complement.lex_smallest_clique(beta);
        (beta, witness)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.vertex_count {
            for v in u + 1..self.vertex_count {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.vertex_count, &edges).expect("complement of a valid graph is valid")
    }

    fn max_clique_size(&self) -> usize {
        let mut best = 0;
        let full = if self.vertex_count == 0 {
            0
        } else if self.vertex_count == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertex_count) - 1
        };
        self.clique_branch(0, full, &mut best);
        best
    }

    fn clique_branch(&self, size: usize, candidates: u64, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let mut rest = candidates;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Candidates are consumed in ascending order, so every clique is
            // enumerated once with its vertices sorted.
            self.clique_branch(size + 1, rest & self.adj[v], best);
        }
    }

    fn lex_smallest_clique(&self, target: usize) -> Vec<usize> {
        let mut chosen = Vec::new();
        let full = if self.vertex_count == 0 {
            0
        } else if self.vertex_count == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertex_count) - 1
        };
        let found = self.lex_clique_dfs(full, target, &mut chosen);
        debug_assert!(found, "a clique of the computed maximum size always exists");
        chosen
    }

    fn lex_clique_dfs(&self, candidates: u64, remaining: usize, chosen: &mut Vec<usize>) -> bool {
        if remaining == 0 {
            return true;
        }
        if (candidates.count_ones() as usize) < remaining {
            return false;
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            chosen.push(v);
            if self.lex_clique_dfs(rest & self.adj[v], remaining - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(m={}, edges={:?})", self.vertex_count, self.edges)
    }
}

/// The graph families named by the generators, with their size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Path P_m on m vertices, m ≥ 1.
    Path(usize),
    /// Cycle C_m, m ≥ 3.
    Cycle(usize),
    /// Wheel on a rim C_m plus a hub, m ≥ 3: hub 0, rim 1..=m.
    Wheel(usize),
    /// Helm: wheel plus one pendant per rim vertex, m ≥ 3:
    /// hub 0, rim 1..=m, pendant of rim vertex i at m+i.
    Helm(usize),
    /// Ladder P_m □ P_2, m ≥ 2: rails 0..m and m..2m, rungs (i, m+i).
    Ladder(usize),
    /// Complete graph K_m, m ≥ 1.
    Complete(usize),
    /// Star K_{1,t}, t ≥ 1: center 0, leaves 1..=t.
    Star(usize),
    /// Complete bipartite K_{a,b}, a,b ≥ 1: parts 0..a and a..a+b.
    CompleteBipartite(usize, usize),
    /// The Petersen graph: outer cycle 0..5, spokes i—(i+5), inner
    /// pentagram (i+5)—((i+2) mod 5 + 5).
    Petersen,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Wheel(_) => "wheel",
            Family::Helm(_) => "helm",
            Family::Ladder(_) => "ladder",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Petersen => "petersen",
        }
    }

    /// Parses a family from its name and size flags (as the CLI supplies them).
    pub fn from_parts(
        name: &str,
        size: Option<usize>,
        size2: Option<usize>,
    ) -> Result<Self, GraphError> {
        let need = |s: Option<usize>, family| s.ok_or(GraphError::MissingSize(family));
        Ok(match name {
            "path" => Family::Path(need(size, "path")?),
            "cycle" => Family::Cycle(need(size, "cycle")?),
            "wheel" => Family::Wheel(need(size, "wheel")?),
            "helm" => Family::Helm(need(size, "helm")?),
            "ladder" => Family::Ladder(need(size, "ladder")?),
            "complete" => Family::Complete(need(size, "complete")?),
            "star" => Family::Star(need(size, "star")?),
            "complete_bipartite" => Family::CompleteBipartite(
                need(size, "complete_bipartite")?,
                need(size2, "complete_bipartite")?,
            ),
            "petersen" => Family::Petersen,
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        })
    }

    pub fn generate(&self) -> Result<Graph, GraphError> {
        let check = |family, size, minimum| {
            if size < minimum {
                Err(GraphError::SizeBelowMinimum {
                    family,
                    size,
                    minimum,
                })
            } else {
                Ok(())
            }
        };
        match *self {
            Family::Path(m) => {
                check("path", m, 1)?;
                let edges: Vec<_> = (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Graph::new(m, &edges)
            }
            Family::Cycle(m) => {
                check("cycle", m, 3)?;
                let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
                Graph::new(m, &edges)
            }
            Family::Wheel(m) => {
                check("wheel", m, 3)?;
                let mut edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
                edges.extend((1..=m).map(|i| (i, i % m + 1)));
                Graph::new(m + 1, &edges)
            }
            Family::Helm(m) => {
                check("helm", m, 3)?;
                let mut edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
                edges.extend((1..=m).map(|i| (i, i % m + 1)));
                edges.extend((1..=m).map(|i| (i, m + i)));
                Graph::new(2 * m + 1, &edges)
            }
            Family::Ladder(m) => {
                check("ladder", m, 2)?;
                let mut edges: Vec<_> = (0..m - 1).map(|i| (i, i + 1)).collect();
                edges.extend((0..m - 1).map(|i| (m + i, m + i + 1)));
                edges.extend((0..m).map(|i| (i, m + i)));
                Graph::new(2 * m, &edges)
            }
            Family::Complete(m) => {
                check("complete", m, 1)?;
                let mut edges = Vec::new();
                for u in 0..m {
                    for v in u + 1..m {
                        edges.push((u, v));
                    }
                }
                Graph::new(m, &edges)
            }
            Family::Star(t) => {
                check("star", t, 1)?;
                let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
                Graph::new(t + 1, &edges)
            }
            Family::CompleteBipartite(a, b) => {
                check("complete_bipartite", a, 1)?;
                check("complete_bipartite", b, 1)?;
                let mut edges = Vec::new();
                for u in 0..a {
                    for v in 0..b {
                        edges.push((u, a + v));
                    }
                }
                Graph::new(a + b, &edges)
            }
            Family::Petersen => {
                let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
                edges.extend((0..5).map(|i| (i, i + 5)));
                edges.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
                Graph::new(10, &edges)
            }
        }
    }
}

/// Yields every labeled simple graph on `m` vertices exactly once, in
/// ascending edge-mask order. Bit `k` of the mask is the `k`-th pair in the
/// canonical order (0,1), (0,2), …, (0,m-1), (1,2), ….
pub fn enumerate_graphs(
    m: usize,
    require_no_isolated: bool,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if m > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::EnumerationBudget(m));
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        let graph = Graph::new(m, &edges).expect("enumerated edges are valid");
        if require_no_isolated && graph.has_isolated_vertices() {
            None
        } else {
            Some(graph)
        }
    }))
}
