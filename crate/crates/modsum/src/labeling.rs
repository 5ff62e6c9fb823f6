//! Vertex labelings by subsets of `Z_n`, induced edge labels, and exact
//! classifiers for every labeling class: weak (in both readings), uniform,
//! strong (definition and difference-set criterion), maximal and exquisite.

use crate::graph::Graph;
use crate::zn::{SetError, ZnSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelingError {
    #[error("expected {vertices} labels, got {labels}")]
    LabelCountMismatch { labels: usize, vertices: usize },
    #[error("vertex {0} has an empty label")]
    EmptyLabel(usize),
    #[error("label of vertex {vertex} has modulus {found}, expected {expected}")]
    WrongModulus {
        vertex: usize,
        expected: u32,
        found: u32,
    },
    #[error("labeling is not injective: vertices {0} and {1} share a label")]
    NotInjective(usize, usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// A graph with one nonempty subset of `Z_n` per vertex.
///
/// Construction enforces label count, nonemptiness and a common modulus.
/// Injectivity is a checked predicate rather than a construction-time
/// constraint, so invalid labelings can be represented and reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    graph: Graph,
    modulus: u32,
    labels: Vec<ZnSet>,
}

impl Labeling {
    pub fn new(graph: Graph, modulus: u32, labels: Vec<ZnSet>) -> Result<Self, LabelingError> {
        if labels.len() != graph.vertex_count() {
            return Err(LabelingError::LabelCountMismatch {
                labels: labels.len(),
                vertices: graph.vertex_count(),
            });
        }
        for (v, label) in labels.iter().enumerate() {
            if label.modulus() != modulus {
                return Err(LabelingError::WrongModulus {
                    vertex: v,
                    expected: modulus,
                    found: label.modulus(),
                });
            }
            if label.is_empty() {
                return Err(LabelingError::EmptyLabel(v));
            }
        }
        Ok(Labeling {
            graph,
            modulus,
            labels,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn labels(&self) -> &[ZnSet] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &ZnSet {
        &self.labels[v]
    }

    /// Sumset of the endpoint labels. Defined on edges only.
    pub fn induced_edge_label(&self, u: usize, v: usize) -> Result<ZnSet, LabelingError> {
        if !self.graph.has_edge(u, v) {
            return Err(LabelingError::NotAnEdge(u, v));
        }
        Ok(self.labels[u].sumset(&self.labels[v])?)
    }

    /// First pair of vertices sharing a label, in lexicographic order.
    pub fn injectivity_clash(&self) -> Option<(usize, usize)> {
        for u in 0..self.labels.len() {
            for v in u + 1..self.labels.len() {
                if self.labels[u] == self.labels[v] {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_clash().is_none()
    }

    /// First pair of edges sharing an induced label, in canonical edge
    /// order. Requires an injective labeling.
    #[allow(clippy::type_complexity)]
    pub fn indexer_clash(
        &self,
    ) -> Result<Option<((usize, usize), (usize, usize))>, LabelingError> {
        if let Some((u, v)) = self.injectivity_clash() {
            return Err(LabelingError::NotInjective(u, v));
        }
        let mut seen: std::collections::HashMap<u64, (usize, usize)> =
            std::collections::HashMap::new();
        for &(u, v) in self.graph.edges() {
            let label = self.induced_edge_label(u, v)?;
            if let Some(&first) = seen.get(&label.mask()) {
                return Ok(Some((first, (u, v))));
            }
            seen.insert(label.mask(), (u, v));
        }
        Ok(None)
    }

    /// Evaluates every classifier at once. Requires an injective labeling.
    pub fn classify(&self) -> Result<ClassificationReport, LabelingError> {
        if let Some((u, v)) = self.injectivity_clash() {
            return Err(LabelingError::NotInjective(u, v));
        }
        let full = ZnSet::full(self.modulus)?;
        let mut report = ClassificationReport {
            is_injective: true,
            is_indexer: true,
            weak: true,
            weak_singleton_form: true,
            edge_uniform_k: None,
            vertex_uniform_l: None,
            strong: true,
            strong_absolute_criterion: true,
            maximal: true,
            exquisite: true,
            monocardinal_vertices: Vec::new(),
            monocardinal_edges: Vec::new(),
            witnesses: Witnesses::default(),
        };

        for (v, label) in self.labels.iter().enumerate() {
            if label.card() == 1 {
                report.monocardinal_vertices.push(v);
            }
        }
        let cards: Vec<u32> = self.labels.iter().map(ZnSet::card).collect();
        if !cards.is_empty() && cards.iter().all(|&c| c == cards[0]) {
            report.vertex_uniform_l = Some(cards[0]);
        }

        let mut seen_edges: std::collections::HashMap<u64, (usize, usize)> =
            std::collections::HashMap::new();
        let mut uniform: Option<Option<u32>> = None;
        for &(u, v) in self.graph.edges() {
            let a = &self.labels[u];
            let b = &self.labels[v];
            let sum = a.sumset(b)?;
            let edge = (u, v);

            if let Some(&first) = seen_edges.get(&sum.mask()) {
                if report.is_indexer {
                    report.is_indexer = false;
                    report.witnesses.indexer = Some((first, edge));
                }
            } else {
                seen_edges.insert(sum.mask(), edge);
            }

            if sum.card() == 1 {
                report.monocardinal_edges.push(edge);
            }
            uniform = match uniform {
                None => Some(Some(sum.card())),
                Some(Some(k)) if k == sum.card() => Some(Some(k)),
                _ => Some(None),
            };

            if sum.card() != a.card() && sum.card() != b.card() && report.weak {
                report.weak = false;
                report.witnesses.weak = Some(edge);
            }
            if a.card() != 1 && b.card() != 1 && report.weak_singleton_form {
                report.weak_singleton_form = false;
                report.witnesses.weak_singleton_form = Some(edge);
            }
            if u64::from(sum.card()) != u64::from(a.card()) * u64::from(b.card())
                && report.strong
            {
                report.strong = false;
                report.witnesses.strong = Some(edge);
            }
            let absolute_disjoint = a
                .absolute_difference_set()?
                .intersection(&b.absolute_difference_set()?)
                .next()
                .is_none();
            if !absolute_disjoint && report.strong_absolute_criterion {
                report.strong_absolute_criterion = false;
                report.witnesses.strong_absolute_criterion = Some(edge);
            }
            if sum != full && report.maximal {
                report.maximal = false;
                report.witnesses.maximal = Some(edge);
            }
            if !(a.is_subset_of(&sum) && b.is_subset_of(&sum)) && report.exquisite {
                report.exquisite = false;
                report.witnesses.exquisite = Some(edge);
            }
        }
        report.edge_uniform_k = uniform.flatten();
        Ok(report)
    }
}

/// Truth values and witnesses for every labeling class.
///
/// `weak` is the literal cardinality definition (the edge label is as large
/// as some endpoint label); `weak_singleton_form` is the singleton-end reading
/// (no two adjacent non-singleton labels). `strong` compares the edge
/// cardinality with the product of the endpoint cardinalities;
/// `strong_absolute_criterion` is the absolute-value difference-set
/// disjointness test, retained to demonstrate where it diverges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub is_injective: bool,
    pub is_indexer: bool,
    pub weak: bool,
    pub weak_singleton_form: bool,
    pub edge_uniform_k: Option<u32>,
    pub vertex_uniform_l: Option<u32>,
    pub strong: bool,
    pub strong_absolute_criterion: bool,
    pub maximal: bool,
    pub exquisite: bool,
    pub monocardinal_vertices: Vec<usize>,
    pub monocardinal_edges: Vec<(usize, usize)>,
    pub witnesses: Witnesses,
}

/// One violating edge (or edge pair) per false flag.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub indexer: Option<((usize, usize), (usize, usize))>,
    pub weak: Option<(usize, usize)>,
    pub weak_singleton_form: Option<(usize, usize)>,
    pub strong: Option<(usize, usize)>,
    pub strong_absolute_criterion: Option<(usize, usize)>,
    pub maximal: Option<(usize, usize)>,
    pub exquisite: Option<(usize, usize)>,
}

/// Elementwise reading of `A ⊆ A + B`: every member of `a` is the sum mod n
/// of some member of `a` and some member of `b`.
pub fn member_sum_criterion(a: &ZnSet, b: &ZnSet) -> Result<bool, SetError> {
    let sum = a.sumset(b)?;
    Ok(a.is_subset_of(&sum))
}

/// Stricter variant requiring the contributing member of `a` to be a
/// different element. False for singleton `a` even when `A ⊆ A + B` holds.
pub fn member_sum_criterion_distinct(a: &ZnSet, b: &ZnSet) -> Result<bool, SetError> {
    if a.is_empty() || b.is_empty() {
        return Err(SetError::EmptyOperand);
    }
    let n = a.modulus();
    Ok(a.iter().all(|ai| {
        a.iter()
            .filter(|&aj| aj != ai)
            .any(|aj| b.iter().any(|bl| (aj + bl) % n == ai))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn set(n: u32, members: &[u32]) -> ZnSet {
        ZnSet::new(n, members).unwrap()
    }

    fn labeling(graph: Graph, n: u32, labels: &[&[u32]]) -> Labeling {
        let labels = labels.iter().map(|m| set(n, m)).collect();
        Labeling::new(graph, n, labels).unwrap()
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        let p2 = Family::Path(2).generate().unwrap();
        assert!(matches!(
            Labeling::new(p2.clone(), 2, vec![set(2, &[0])]),
            Err(LabelingError::LabelCountMismatch { .. })
        ));
        assert!(matches!(
            Labeling::new(
                p2.clone(),
                2,
                vec![set(2, &[0]), ZnSet::empty(2).unwrap()]
            ),
            Err(LabelingError::EmptyLabel(1))
        ));
        assert!(matches!(
            Labeling::new(p2, 2, vec![set(2, &[0]), set(3, &[1])]),
            Err(LabelingError::WrongModulus { vertex: 1, .. })
        ));
    }

    #[test]
    fn induced_edge_label_examples() {
        let p2 = Family::Path(2).generate().unwrap();
        let l = labeling(p2.clone(), 4, &[&[0, 1], &[0, 2]]);
        assert_eq!(
            l.induced_edge_label(0, 1).unwrap(),
            set(4, &[0, 1, 2, 3])
        );
        let l = labeling(p2.clone(), 6, &[&[1], &[2]]);
        assert_eq!(l.induced_edge_label(0, 1).unwrap(), set(6, &[3]));
        let l = labeling(p2, 5, &[&[0, 1, 2, 3, 4], &[3]]);
        assert_eq!(
            l.induced_edge_label(1, 0).unwrap(),
            ZnSet::full(5).unwrap()
        );
        assert!(matches!(
            l.induced_edge_label(0, 0),
            Err(LabelingError::NotAnEdge(0, 0))
        ));
    }

    #[test]
    fn injectivity_detection() {
        let p2 = Family::Path(2).generate().unwrap();
        assert!(labeling(p2.clone(), 2, &[&[0], &[1]]).is_injective());
        let bad = labeling(p2, 2, &[&[0], &[0]]);
        assert_eq!(bad.injectivity_clash(), Some((0, 1)));
        assert!(matches!(
            bad.classify(),
            Err(LabelingError::NotInjective(0, 1))
        ));
        assert!(matches!(
            bad.indexer_clash(),
            Err(LabelingError::NotInjective(0, 1))
        ));
    }

    #[test]
    fn indexer_examples() {
        let p3 = Family::Path(3).generate().unwrap();
        // Edges {1} and {3} are distinct.
        let l = labeling(p3.clone(), 4, &[&[0], &[1], &[2]]);
        assert_eq!(l.indexer_clash().unwrap(), None);
        assert!(l.classify().unwrap().is_indexer);

        let c3 = Family::Cycle(3).generate().unwrap();
        let l = labeling(c3, 3, &[&[0], &[1], &[2]]);
        assert_eq!(l.indexer_clash().unwrap(), None);

        // A full-set center absorbs both leaves: both edges label Z_2.
        let star = Family::Star(2).generate().unwrap();
        let l = labeling(star, 2, &[&[0, 1], &[0], &[1]]);
        let clash = l.indexer_clash().unwrap().unwrap();
        assert_eq!(clash, ((0, 1), (0, 2)));
        assert!(!l.classify().unwrap().is_indexer);
    }

    #[test]
    fn classify_star_ground_set_center() {
        // Center Z_4, leaves distinct singletons: maximal, weak, exquisite.
        let star = Family::Star(3).generate().unwrap();
        let l = labeling(star, 4, &[&[0, 1, 2, 3], &[0], &[1], &[2]]);
        let report = l.classify().unwrap();
        assert!(report.maximal);
        assert!(report.exquisite);
        assert!(report.weak);
        assert!(report.weak_singleton_form);
        assert_eq!(report.edge_uniform_k, Some(4));
        assert_eq!(report.monocardinal_vertices, vec![1, 2, 3]);
    }

    #[test]
    fn strong_definition_vs_absolute_criterion_diverge() {
        // |{0,1} + {0,3}| = 3 over Z_4, but the absolute-value difference
        // sets {1} and {3} are disjoint.
        let p2 = Family::Path(2).generate().unwrap();
        let l = labeling(p2, 4, &[&[0, 1], &[0, 3]]);
        let report = l.classify().unwrap();
        assert!(!report.strong);
        assert!(report.strong_absolute_criterion);
        assert_eq!(report.witnesses.strong, Some((0, 1)));
        assert_eq!(l.induced_edge_label(0, 1).unwrap().card(), 3);
    }

    #[test]
    fn weak_literal_without_singleton_end() {
        // {0,2} + {1,3} = {1,3} over Z_4: the edge label matches both end
        // cardinalities with no singleton end.
        let c4 = Family::Cycle(4).generate().unwrap();
        let l = labeling(c4, 4, &[&[0, 2], &[1, 3], &[0], &[1]]);
        assert_eq!(l.induced_edge_label(0, 1).unwrap(), set(4, &[1, 3]));
        let report = l.classify().unwrap();
        assert!(report.weak);
        assert!(!report.weak_singleton_form);
        assert_eq!(report.witnesses.weak_singleton_form, Some((0, 1)));
    }

    #[test]
    fn monocardinal_edges_need_monocardinal_ends() {
        let p3 = Family::Path(3).generate().unwrap();
        let l = labeling(p3, 6, &[&[1], &[2], &[0, 3]]);
        let report = l.classify().unwrap();
        assert_eq!(report.monocardinal_edges, vec![(0, 1)]);
        assert_eq!(report.monocardinal_vertices, vec![0, 1]);
        assert_eq!(report.edge_uniform_k, None);
    }

    #[test]
    fn exquisite_without_zero_labels_or_maximality() {
        // {2} + {0,2} = {0,2} over Z_4 contains both labels, yet one label
        // misses 0 and the edge label is not all of Z_4.
        let p2 = Family::Path(2).generate().unwrap();
        let l = labeling(p2, 4, &[&[2], &[0, 2]]);
        let report = l.classify().unwrap();
        assert!(report.exquisite);
        assert!(!report.maximal);
    }

    #[test]
    fn member_sum_criteria() {
        let a = set(4, &[0, 1]);
        let b = set(4, &[0]);
        assert!(member_sum_criterion(&a, &b).unwrap());
        // Singletons never satisfy the distinct-element variant.
        let s = set(4, &[0]);
        assert!(member_sum_criterion(&s, &b).unwrap());
        assert!(!member_sum_criterion_distinct(&s, &b).unwrap());
    }

    #[test]
    fn relaxed_member_sum_criterion_matches_subset_check_exhaustively() {
        for n in 1..=5u32 {
            for ma in 1..(1u64 << n) {
                for mb in 1..(1u64 << n) {
                    let a = ZnSet::from_mask(n, ma).unwrap();
                    let b = ZnSet::from_mask(n, mb).unwrap();
                    let direct = a.is_subset_of(&a.sumset(&b).unwrap());
                    assert_eq!(member_sum_criterion(&a, &b).unwrap(), direct);
                }
            }
        }
    }
}
