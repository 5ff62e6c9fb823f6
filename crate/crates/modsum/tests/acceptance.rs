//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured time. Every tolerance is asserted in code.

use modsum::claims::{audit, AuditParams, ClaimStatus, Witness};
use modsum::graph::{enumerate_graphs, Family, Graph};
use modsum::labeling::{member_sum_criterion, Labeling};
use modsum::search::{
    default_n_max, exists_labeling, min_modulus, sigma_formula, Budget, PropertySpec,
    SearchStatus,
};
use modsum::zn::ZnSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

fn assert_within(start: Instant, limit: Duration, criterion: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= limit,
        "{criterion} exceeded its time limit: {elapsed:?} > {limit:?}"
    );
    println!("{criterion}: PASS in {elapsed:?}");
}

fn nonempty_sets(n: u32) -> impl Iterator<Item = ZnSet> {
    (1..(1u64 << n)).map(move |mask| ZnSet::from_mask(n, mask).expect("valid mask"))
}

fn naive_sumset(a: &ZnSet, b: &ZnSet) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for x in a.iter() {
        for y in b.iter() {
            out.insert((x + y) % a.modulus());
        }
    }
    out
}

/// Criterion 1: bit-vector sumsets equal the naive double loop for every
/// ordered pair of nonempty subsets of Z_n, n <= 6.
#[test]
fn criterion_01_sumset_oracle_equivalence() {
    let start = Instant::now();
    let mut pairs = 0u64;
    for n in 1..=6u32 {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                pairs += 1;
                let fast: BTreeSet<u32> = a.sumset(&b).expect("same modulus").iter().collect();
                assert_eq!(fast, naive_sumset(&a, &b), "mismatch at n={n} A={a} B={b}");
            }
        }
    }
    assert_eq!(pairs, 5214);
    assert_within(start, Duration::from_secs(5), "criterion 1 (sumset oracle)");
}

/// Criterion 2: commutativity, associativity, identity {0}, translation
/// cardinality and absorption by Z_n; exhaustive for n <= 5 plus 10^4
/// random cases for n <= 32.
#[test]
fn criterion_02_algebra_property_suite() {
    let start = Instant::now();
    let check_pair = |a: &ZnSet, b: &ZnSet| {
        let n = a.modulus();
        let ab = a.sumset(b).expect("same modulus");
        assert_eq!(ab, b.sumset(a).expect("same modulus"), "commutativity");
        let zero = ZnSet::new(n, &[0]).expect("zero");
        assert_eq!(a.sumset(&zero).expect("same modulus"), *a, "identity");
        for shift in b.iter() {
            let singleton = ZnSet::new(n, &[shift]).expect("residue");
            assert_eq!(
                a.sumset(&singleton).expect("same modulus").card(),
                a.card(),
                "translation"
            );
        }
        let full = ZnSet::full(n).expect("full");
        assert_eq!(full.sumset(b).expect("same modulus"), full, "absorption");
    };
    for n in 1..=5u32 {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check_pair(&a, &b);
                for c in nonempty_sets(n) {
                    let left = a.sumset(&b).unwrap().sumset(&c).unwrap();
                    let right = a.sumset(&b.sumset(&c).unwrap()).unwrap();
                    assert_eq!(left, right, "associativity at n={n}");
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=32u32);
        let full = if n == 32 { u64::from(u32::MAX) } else { (1u64 << n) - 1 };
        let rand_set = |rng: &mut ChaCha8Rng| {
            ZnSet::from_mask(n, rng.gen_range(1..=full)).expect("valid mask")
        };
        let (a, b, c) = (rand_set(&mut rng), rand_set(&mut rng), rand_set(&mut rng));
        check_pair(&a, &b);
        let left = a.sumset(&b).unwrap().sumset(&c).unwrap();
        let right = a.sumset(&b.sumset(&c).unwrap()).unwrap();
        assert_eq!(left, right, "associativity (random)");
    }
    assert_within(start, Duration::from_secs(5), "criterion 2 (algebra properties)");
}

/// Criterion 3: Cauchy-Davenport holds exhaustively for prime n in
/// {2,3,5,7,11}; the unguarded integer bound is refuted with the full-set
/// pair over Z_4.
#[test]
fn criterion_03_cauchy_davenport_audit() {
    let start = Instant::now();
    let params = AuditParams {
        max_modulus: 11,
        ..AuditParams::default()
    };
    let cd = audit("CL-CD", &params).expect("registered claim");
    assert_eq!(cd.status, ClaimStatus::ConfirmedExhaustive);
    for n in [2u32, 3, 5, 7, 11] {
        assert!(
            cd.details.iter().any(|d| d.contains(&format!("n={n}"))),
            "prime {n} missing from the audit"
        );
    }

    let t11 = audit("CL-T11", &AuditParams::default()).expect("registered claim");
    assert_eq!(t11.status, ClaimStatus::Refuted);
    match t11.witness.as_ref().expect("refutation carries a witness") {
        Witness::SetPair { n, a, b, .. } => {
            assert_eq!(*n, 4);
            assert_eq!(a, &vec![0, 1, 2, 3]);
            assert_eq!(b, &vec![0, 1, 2, 3]);
        }
        other => panic!("unexpected witness shape: {other:?}"),
    }
    let full = ZnSet::full(4).expect("Z_4");
    assert!(!full.check_bounds(&full).expect("same modulus").integer_lower_holds);
    assert_within(start, Duration::from_secs(60), "criterion 3 (Cauchy-Davenport)");
}

/// Criterion 4: for every generated family instance with at most 12
/// vertices, the minimum-modulus search is exact and matches the size
/// formula.
#[test]
fn criterion_04_sigma_formula_vs_search() {
    let start = Instant::now();
    let mut instances: Vec<Graph> = Vec::new();
    for m in 1..=12 {
        instances.push(Family::Path(m).generate().expect("path"));
        instances.push(Family::Complete(m).generate().expect("complete"));
    }
    for m in 3..=12 {
        instances.push(Family::Cycle(m).generate().expect("cycle"));
    }
    for m in 3..=11 {
        instances.push(Family::Wheel(m).generate().expect("wheel"));
    }
    for m in 3..=5 {
        instances.push(Family::Helm(m).generate().expect("helm"));
    }
    for m in 2..=6 {
        instances.push(Family::Ladder(m).generate().expect("ladder"));
    }
    for t in 1..=11 {
        instances.push(Family::Star(t).generate().expect("star"));
    }
    for a in 1..=6 {
        for b in a..=(12 - a) {
            instances.push(Family::CompleteBipartite(a, b).generate().expect("bipartite"));
        }
    }
    instances.push(Family::Petersen.generate().expect("petersen"));

    for graph in &instances {
        let m = graph.vertex_count();
        assert!(m <= 12);
        let formula = sigma_formula(m).expect("m >= 1");
        let result = min_modulus(
            graph,
            &PropertySpec::Plain,
            default_n_max(graph),
            &Budget::default(),
        )
        .expect("valid search");
        assert!(result.exact, "inexact search on {m}-vertex instance");
        assert_eq!(result.value, Some(formula), "formula mismatch at m={m}");
    }
    assert_within(start, Duration::from_secs(60), "criterion 4 (size formula vs search)");
}

/// Criterion 5: the Petersen graph has a plain labeling over Z_4 and an
/// indexer over Z_5, each inside a 10^7-node / 120 s budget, with witnesses
/// re-verified through the classifier.
#[test]
fn criterion_05_petersen_reproductions() {
    let start = Instant::now();
    let petersen = Family::Petersen.generate().expect("petersen");
    let budget = Budget {
        max_nodes: 10_000_000,
        max_time: Duration::from_secs(120),
    };
    let plain = exists_labeling(&petersen, 4, &PropertySpec::Plain, &budget).expect("valid");
    assert_eq!(plain.status, SearchStatus::Found);
    let witness = plain.witness.expect("found implies witness");
    let report = witness.classify().expect("injective witness");
    assert!(report.is_injective);

    let indexer = exists_labeling(&petersen, 5, &PropertySpec::Indexer, &budget).expect("valid");
    assert_eq!(indexer.status, SearchStatus::Found);
    let witness = indexer.witness.expect("found implies witness");
    let report = witness.classify().expect("injective witness");
    assert!(report.is_injective && report.is_indexer);
    assert_within(start, Duration::from_secs(240), "criterion 5 (Petersen reproductions)");
}

/// Criterion 6: |A+B| = |A||B| iff the modular difference sets are disjoint
/// (and the product fits in n), exhaustively for n <= 6; the literal
/// absolute-value criterion is refuted by A={0,1}, B={0,3} over Z_4.
#[test]
fn criterion_06_strong_criterion_equivalence() {
    let start = Instant::now();
    for n in 1..=6u32 {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                let product = a.card() as u64 * b.card() as u64;
                let strong = u64::from(a.sumset(&b).expect("same modulus").card()) == product;
                let disjoint = a.modular_difference_set().expect("nonempty").mask()
                    & b.modular_difference_set().expect("nonempty").mask()
                    == 0;
                assert_eq!(
                    strong,
                    disjoint && product <= u64::from(n),
                    "equivalence fails at n={n} A={a} B={b}"
                );
            }
        }
    }
    let outcome = audit("CL-STR", &AuditParams::default()).expect("registered claim");
    assert_eq!(outcome.status, ClaimStatus::Refuted);
    match outcome.witness.as_ref().expect("witness") {
        Witness::SetPair { n, a, b, .. } => {
            assert_eq!((*n, a.as_slice(), b.as_slice()), (4, &[0, 1][..], &[0, 3][..]));
        }
        other => panic!("unexpected witness shape: {other:?}"),
    }
    assert_within(start, Duration::from_secs(30), "criterion 6 (strong criterion)");
}

/// Criterion 7: over all graphs with at most 5 vertices and no isolated
/// vertices, weakly k-uniform labelings (k <= 3, n <= 5) exist exactly for
/// the bipartite ones.
#[test]
fn criterion_07_weakly_uniform_iff_bipartite() {
    let start = Instant::now();
    let outcome = audit("CL-W2", &AuditParams::default()).expect("registered claim");
    assert_eq!(outcome.status, ClaimStatus::ConfirmedWithinBudget);
    assert!(outcome.witness.is_none());

    // Spot checks on both directions of the biconditional.
    let c4 = Family::Cycle(4).generate().expect("cycle");
    let found = min_modulus(&c4, &PropertySpec::WeakKUniform(2), 5, &Budget::default())
        .expect("valid search");
    assert!(found.value.is_some());
    let c5 = Family::Cycle(5).generate().expect("cycle");
    for k in 2..=3 {
        let result = min_modulus(&c5, &PropertySpec::WeakKUniform(k), 5, &Budget::default())
            .expect("valid search");
        assert_eq!(result.value, None);
        assert!(result.exact, "non-bipartite exhaustion must be conclusive");
    }
    assert_within(start, Duration::from_secs(600), "criterion 7 (weakly uniform vs bipartite)");
}

/// Criterion 8: the family audits report closed form, general formula and
/// search oracle for every instance; the path formula is refuted at m=4
/// (pigeonhole at n=2), the complete-graph value at m=4 agrees.
#[test]
fn criterion_08_family_weak_number_audit() {
    let start = Instant::now();
    let params = AuditParams::default();
    let ids = [
        "CL-PATH",
        "CL-CYCLE",
        "CL-WHEEL",
        "CL-HELM",
        "CL-LADDER",
        "CL-COMPLETE",
    ];
    for id in ids {
        let outcome = audit(id, &params).expect("registered claim");
        for detail in &outcome.details {
            assert!(
                detail.contains("closed form")
                    && detail.contains("general formula")
                    && detail.contains("oracle"),
                "{id} detail lacks the three quantities: {detail}"
            );
        }
        assert_eq!(outcome.details.len() as u64, outcome.instances_checked);
        match id {
            "CL-PATH" => {
                assert_eq!(outcome.status, ClaimStatus::Refuted);
                assert!(outcome
                    .details
                    .iter()
                    .any(|d| d.contains("path m=4: closed form 2, general formula 3, oracle 3")));
            }
            "CL-COMPLETE" => {
                assert_eq!(outcome.status, ClaimStatus::ConfirmedWithinBudget);
                assert!(outcome
                    .details
                    .iter()
                    .any(|d| d.contains("complete m=4: closed form 3") && d.contains("oracle 3")));
            }
            _ => assert_eq!(outcome.status, ClaimStatus::ConfirmedWithinBudget),
        }
    }
    // The m=4 refutation reduces to a pigeonhole fact checked directly.
    let p4 = Family::Path(4).generate().expect("path");
    let outcome = exists_labeling(&p4, 2, &PropertySpec::Plain, &Budget::default()).expect("valid");
    assert_eq!(outcome.status, SearchStatus::Exhausted);
    assert_within(start, Duration::from_secs(600), "criterion 8 (family audits)");
}

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

fn random_labeling(rng: &mut ChaCha8Rng) -> Labeling {
    loop {
        let m = rng.gen_range(2..=6usize);
        let pair_count = m * (m - 1) / 2;
        let edge_mask: u64 = rng.gen_range(0..(1u64 << pair_count));
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| edge_mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let graph = Graph::new(m, &edges).expect("valid graph");
        let n = rng.gen_range(3..=6u32);
        if (1u64 << n) - 1 < m as u64 {
            continue;
        }
        let mut chosen = std::collections::HashSet::new();
        let mut labels = Vec::with_capacity(m);
        while labels.len() < m {
            let mask = rng.gen_range(1..(1u64 << n));
            if chosen.insert(mask) {
                labels.push(ZnSet::from_mask(n, mask).expect("valid mask"));
            }
        }
        return Labeling::new(graph, n, labels).expect("valid labeling");
    }
}

fn check_classifier_invariants(labeling: &Labeling) {
    let report = labeling.classify().expect("injective");
    if report.weak_singleton_form {
        assert!(report.weak, "singleton-end weakness must imply literal weakness");
    }
    if report.maximal {
        assert!(report.exquisite, "maximal must imply exquisite");
    }
    if labeling.labels().iter().all(|l| l.contains(0)) {
        assert!(report.exquisite, "all-zero labels must imply exquisite");
    }
    let elementwise = labeling.graph().edges().iter().all(|&(u, v)| {
        member_sum_criterion(labeling.label(u), labeling.label(v)).expect("nonempty")
            && member_sum_criterion(labeling.label(v), labeling.label(u)).expect("nonempty")
    });
    assert_eq!(
        report.exquisite, elementwise,
        "exquisite must match the elementwise criterion"
    );
}

/// Criterion 9: classifier invariants over every labeling of every graph
/// with m <= 3, n <= 3, plus 10^4 random labelings at m <= 6, n <= 6.
#[test]
fn criterion_09_classifier_invariant_suite() {
    let start = Instant::now();
    let mut enumerated = 0u64;
    for m in 1..=3usize {
        for graph in enumerate_graphs(m, false).expect("small enumeration") {
            for n in 1..=3u32 {
                for_each_labeling(&graph, n, &mut |labeling| {
                    enumerated += 1;
                    check_classifier_invariants(labeling);
                });
            }
        }
    }
    assert!(enumerated > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        check_classifier_invariants(&random_labeling(&mut rng));
    }
    assert_within(start, Duration::from_secs(60), "criterion 9 (classifier invariants)");
}

/// Criterion 10: the ground-set-center star construction classifies as
/// maximal, weak and exquisite for up to 6 leaves; conversely every
/// weak-and-maximal labeling with m <= 4, n <= 4 lives on a star.
#[test]
fn criterion_10_star_characterizations() {
    let start = Instant::now();
    for leaves in 1..=6usize {
        let star = Family::Star(leaves).generate().expect("star");
        let n = (leaves + 1) as u32;
        let mut labels = vec![ZnSet::full(n).expect("full")];
        labels.extend((0..leaves as u32).map(|i| ZnSet::new(n, &[i]).expect("residue")));
        let labeling = Labeling::new(star, n, labels).expect("valid labeling");
        let report = labeling.classify().expect("injective");
        assert!(report.maximal && report.weak && report.weak_singleton_form && report.exquisite);
    }
    for m in 2..=4usize {
        for graph in enumerate_graphs(m, true).expect("small enumeration") {
            for n in 1..=4u32 {
                for_each_labeling(&graph, n, &mut |labeling| {
                    let report = labeling.classify().expect("injective");
                    if report.weak && report.maximal {
                        assert!(
                            labeling.graph().is_star(),
                            "weak+maximal labeling on a non-star: {:?} labels {:?}",
                            labeling.graph(),
                            labeling.labels()
                        );
                    }
                });
            }
        }
    }
    assert_within(start, Duration::from_secs(600), "criterion 10 (star characterizations)");
}

/// Criterion 11: JSON round-trips are lossless on all graphs with m <= 4
/// and 10^3 random labelings; DOT output is byte-identical across runs.
#[test]
fn criterion_11_serialization_round_trips() {
    let start = Instant::now();
    use modsum::io::{emit_dot, emit_graph, emit_labeling, parse_graph, parse_labeling};
    for m in 0..=4usize {
        for graph in enumerate_graphs(m, false).expect("small enumeration") {
            let text = emit_graph(&graph);
            assert_eq!(parse_graph(&text).expect("round trip"), graph);
            assert_eq!(emit_graph(&graph), text);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1_000 {
        let labeling = random_labeling(&mut rng);
        let text = emit_labeling(&labeling);
        assert_eq!(parse_labeling(&text).expect("round trip"), labeling);
        if labeling.is_injective() {
            let dot = emit_dot(&labeling).expect("injective");
            assert_eq!(emit_dot(&labeling).expect("injective"), dot);
        }
    }
    assert_within(start, Duration::from_secs(60), "criterion 11 (serialization)");
}
