//! Exhaustive classifier invariants over every injective labeling of every
//! graph with up to 4 vertices and modulus up to 4:
//! - a singleton end on every edge implies the literal weak reading;
//! - maximal implies exquisite;
//! - 0 in every vertex label implies exquisite;
//! - the exquisite flag agrees with the elementwise membership criterion
//!   evaluated edge by edge.

use modsum::graph::{enumerate_graphs, Graph};
use modsum::labeling::{member_sum_criterion, Labeling};
use modsum::zn::ZnSet;

fn for_each_labeling<F: FnMut(&Labeling)>(graph: &Graph, n: u32, f: &mut F) {
    fn rec<F: FnMut(&Labeling)>(
        graph: &Graph,
        n: u32,
        labels: &mut Vec<u64>,
        used: u64,
        f: &mut F,
    ) {
        if labels.len() == graph.vertex_count() {
            let sets = labels
                .iter()
                .map(|&mask| ZnSet::from_mask(n, mask).expect("valid mask"))
                .collect();
            f(&Labeling::new(graph.clone(), n, sets).expect("nonempty labels"));
            return;
        }
        for mask in 1..(1u64 << n) {
            if used & (1 << mask) == 0 {
                labels.push(mask);
                rec(graph, n, labels, used | (1 << mask), f);
                labels.pop();
            }
        }
    }
    if (1u64 << n) > graph.vertex_count() as u64 {
        rec(graph, n, &mut Vec::new(), 0, f);
    }
}

#[test]
fn implications_hold_on_every_small_labeling() {
    let mut maximal_seen = 0u64;
    let mut zero_seen = 0u64;
    for m in 1..=4usize {
        for graph in enumerate_graphs(m, false).expect("small enumeration") {
            for n in 1..=4u32 {
                for_each_labeling(&graph, n, &mut |labeling| {
                    let report = labeling.classify().expect("injective");
                    if report.weak_singleton_form {
                        assert!(report.weak, "{labeling:?}");
                    }
                    if report.maximal {
                        maximal_seen += 1;
                        assert!(report.exquisite, "{labeling:?}");
                    }
                    if labeling.labels().iter().all(|l| l.contains(0)) {
                        zero_seen += 1;
                        assert!(report.exquisite, "{labeling:?}");
                    }
                    let elementwise = labeling.graph().edges().iter().all(|&(u, v)| {
                        member_sum_criterion(labeling.label(u), labeling.label(v)).unwrap()
                            && member_sum_criterion(labeling.label(v), labeling.label(u)).unwrap()
                    });
                    assert_eq!(report.exquisite, elementwise, "{labeling:?}");
                });
            }
        }
    }
    // The implications must not have held vacuously.
    assert!(maximal_seen > 0);
    assert!(zero_seen > 0);
}
