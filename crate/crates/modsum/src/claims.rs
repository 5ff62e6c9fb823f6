//! A registry of combinatorial claims about modular sumset labelings, each
//! audited against brute-force ground truth on small instances.
//!
//! Every claim pairs a machine-checkable statement (see `anchors.txt`) with
//! an instance generator and a checker. Checkers that quantify over an
//! unbounded domain (all graphs, all moduli) can at best report
//! `ConfirmedWithinBudget`; only claims whose stated domain is fully
//! enumerated may report `ConfirmedExhaustive`. A `Refuted` outcome always
//! carries a witness that replays through the set-algebra and labeling
//! modules.

use crate::graph::{enumerate_graphs, Family, Graph};
use crate::io::{GraphDoc, LabelingDoc};
use crate::labeling::{member_sum_criterion, member_sum_criterion_distinct, Labeling};
use crate::search::{
    default_n_max, min_modulus, sigma_formula, weak_number_formula,
    weak_uniform_min_formula, Budget, MinResult, PropertySpec,
    MAX_SEARCH_MODULUS,
};
use crate::zn::ZnSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::time::Instant;

const ANCHORS: &str = include_str!("anchors.txt");

/// Modulus ceiling for the weakly-uniform-vs-bipartite audit.
const W2_N_MAX: u32 = 5;
/// Uniformity values scanned by the strongly-k-uniform audits; includes the
/// perfect square 4 so the square branch is exercised.
const SKU_K_RANGE: std::ops::RangeInclusive<u32> = 1..=4;
/// Full labeling enumeration caps for the per-labeling biconditional audits.
const LABELING_VERTICES: usize = 4;
const LABELING_MODULUS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AuditError {
    #[error("unknown claim id '{0}'")]
    UnknownClaim(String),
}

/// Instance ranges and budgets for one audit run.
#[derive(Debug, Clone)]
pub struct AuditParams {
    /// Labeled-graph enumeration cap (graphs with no isolated vertices).
    pub max_vertices: usize,
    /// Modulus cap for exhaustive set-pair scans.
    pub max_modulus: u32,
    /// Size range for named-family instances.
    pub family_min: usize,
    pub family_max: usize,
    /// Largest k for weakly-uniform audits.
    pub k_max: u32,
    /// Random labelings drawn by the sampled implications.
    pub random_samples: u64,
    pub seed: u64,
    pub budget: Budget,
    /// Overrides the per-instance modulus ceiling of search-based claims.
    pub n_max_override: Option<u32>,
}

impl Default for AuditParams {
    fn default() -> Self {
        AuditParams {
            max_vertices: 5,
            max_modulus: 6,
            family_min: 3,
            family_max: 8,
            k_max: 3,
            random_samples: 2_000,
            seed: 0x6d6f_6473,
            budget: Budget::default(),
            n_max_override: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimStatus {
    ConfirmedExhaustive,
    ConfirmedWithinBudget,
    Refuted,
    Inconclusive,
}

impl ClaimStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::ConfirmedExhaustive => "CONFIRMED_EXHAUSTIVE",
            ClaimStatus::ConfirmedWithinBudget => "CONFIRMED_WITHIN_BUDGET",
            ClaimStatus::Refuted => "REFUTED",
            ClaimStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// What the registry anticipates for a claim at default parameters. The
/// audit never trusts this; it only drives the process exit status when a
/// claim expected to confirm comes back refuted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Expectation {
    Confirmed,
    Refuted,
    Open,
}

impl Expectation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Expectation::Confirmed => "CONFIRMED",
            Expectation::Refuted => "REFUTED",
            Expectation::Open => "OPEN",
        }
    }
}

/// A replayable counterexample or certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    SetPair {
        n: u32,
        a: Vec<u32>,
        b: Vec<u32>,
        note: String,
    },
    Labeling {
        labeling: LabelingDoc,
        param: Option<u32>,
        note: String,
    },
    Graph {
        graph: GraphDoc,
        note: String,
    },
    Instance {
        family: String,
        size: usize,
        graph: GraphDoc,
        param: Option<u32>,
        note: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub claim_id: String,
    pub status: ClaimStatus,
    pub expected: Expectation,
    pub witness: Option<Witness>,
    pub instances_checked: u64,
    pub nodes_spent: u64,
    pub elapsed_ms: u64,
    pub details: Vec<String>,
}

/// Accumulator shared by all checkers.
#[derive(Default)]
struct Check {
    instances: u64,
    nodes: u64,
    mismatches: u64,
    inconclusive: bool,
    witness: Option<Witness>,
    details: Vec<String>,
}

impl Check {
    fn mismatch(&mut self, witness: impl FnOnce() -> Witness) {
        if self.witness.is_none() {
            self.witness = Some(witness());
        }
        self.mismatches += 1;
    }

    fn spend(&mut self, result: &MinResult) {
        self.nodes += result
            .per_n
            .iter()
            .map(|(_, o)| o.nodes_expanded)
            .sum::<u64>();
    }

    fn detail(&mut self, line: String) {
        self.details.push(line);
    }

    fn status(&self, bounded: bool) -> ClaimStatus {
        if self.mismatches > 0 {
            ClaimStatus::Refuted
        } else if self.inconclusive {
            ClaimStatus::Inconclusive
        } else if bounded {
            ClaimStatus::ConfirmedExhaustive
        } else {
            ClaimStatus::ConfirmedWithinBudget
        }
    }
}

pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    pub statement: &'static str,
    pub expected: Expectation,
    /// Whether the statement's quantifier domain is fully enumerated by the
    /// checker (allowing `ConfirmedExhaustive`).
    bounded: bool,
    run: fn(&AuditParams) -> Check,
}

fn anchor_statement(id: &str) -> &'static str {
    for line in ANCHORS.lines() {
        if let Some((line_id, statement)) = line.split_once('\t') {
            if line_id == id {
                return statement;
            }
        }
    }
    panic!("claim id {id} missing from anchors.txt");
}

type ClaimRow = (
    &'static str,
    &'static str,
    Expectation,
    bool,
    fn(&AuditParams) -> Check,
);

/// The static claim registry, in audit order.
pub fn registry() -> Vec<Claim> {
    let table: Vec<ClaimRow> = vec![
        ("CL-T11", "integer sumset lower bound in Z_n", Expectation::Refuted, false, check_t11),
        ("CL-CD", "Cauchy-Davenport bound for prime moduli", Expectation::Confirmed, true, check_cd),
        ("CL-APEQ", "sumset cardinality equality vs arithmetic progressions", Expectation::Open, false, check_apeq),
        ("CL-T23", "edge label cardinality bound chain", Expectation::Refuted, false, check_t23),
        ("CL-T24", "every graph admits a labeling and an indexer", Expectation::Confirmed, false, check_t24),
        ("CL-T26", "minimum labeling modulus formula", Expectation::Confirmed, false, check_t26),
        ("CL-P31", "sumset cardinality equal to a summand", Expectation::Refuted, false, check_p31),
        ("CL-W1", "weak existence vs bipartite or monocardinal edges", Expectation::Confirmed, false, check_w1),
        ("CL-W2", "weakly uniform iff bipartite", Expectation::Confirmed, false, check_w2),
        ("CL-WNUM", "weak minimum modulus formula", Expectation::Open, false, check_wnum),
        ("CL-PATH", "weak minimum modulus of paths", Expectation::Refuted, false, check_family_path),
        ("CL-CYCLE", "weak minimum modulus of cycles", Expectation::Confirmed, false, check_family_cycle),
        ("CL-WHEEL", "weak minimum modulus of wheels", Expectation::Confirmed, false, check_family_wheel),
        ("CL-HELM", "weak minimum modulus of helms", Expectation::Confirmed, false, check_family_helm),
        ("CL-LADDER", "weak minimum modulus of ladders", Expectation::Confirmed, false, check_family_ladder),
        ("CL-COMPLETE", "weak minimum modulus of complete graphs", Expectation::Confirmed, false, check_family_complete),
        ("CL-WKU", "weakly k-uniform minimum modulus formula", Expectation::Open, false, check_wku),
        ("CL-STR", "strong labeling difference-set criterion", Expectation::Refuted, false, check_str),
        ("CL-SKU", "strongly k-uniform iff square k or bipartite", Expectation::Confirmed, false, check_sku),
        ("CL-SCOMP", "component bound for strongly k-uniform graphs", Expectation::Open, false, check_scomp),
        ("CL-SNB", "at most one non-bipartite component", Expectation::Open, false, check_snb),
        ("CL-MAXC", "maximality conditions on edge label pairs", Expectation::Open, false, check_maxc),
        ("CL-WMAX", "weak and maximal iff star", Expectation::Confirmed, false, check_wmax),
        ("CL-SMAX", "strong and maximal iff square modulus or bipartite", Expectation::Open, false, check_smax),
        ("CL-ESUB", "elementwise subset criterion with distinct contributor", Expectation::Open, false, check_esub),
        ("CL-E0", "zero in every label implies exquisite", Expectation::Confirmed, false, check_e0),
        ("CL-MAXE", "maximal implies exquisite", Expectation::Confirmed, false, check_maxe),
        ("CL-EIFF", "exquisite iff zero labels or maximal", Expectation::Open, false, check_eiff),
        ("CL-EWS", "exquisite and weak iff star", Expectation::Open, false, check_ews),
    ];
    table
        .into_iter()
        .map(|(id, title, expected, bounded, run)| Claim {
            id,
            title,
            statement: anchor_statement(id),
            expected,
            bounded,
            run,
        })
        .collect()
}

/// Runs one claim by id.
pub fn audit(claim_id: &str, params: &AuditParams) -> Result<ClaimOutcome, AuditError> {
    let claim = registry()
        .into_iter()
        .find(|c| c.id == claim_id)
        .ok_or_else(|| AuditError::UnknownClaim(claim_id.to_string()))?;
    Ok(run_claim(&claim, params))
}

fn run_claim(claim: &Claim, params: &AuditParams) -> ClaimOutcome {
    let start = Instant::now();
    let check = (claim.run)(params);
    ClaimOutcome {
        claim_id: claim.id.to_string(),
        status: check.status(claim.bounded),
        expected: claim.expected,
        witness: check.witness,
        instances_checked: check.instances,
        nodes_spent: check.nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
        details: check.details,
    }
}

/// Runs every registered claim. Claims are independent and run on a rayon
/// pool; `MODSUM_THREADS` caps the pool size (absent or 0 means the rayon
/// default). Outcomes are returned in registry order regardless of
/// scheduling.
pub fn audit_all(params: &AuditParams) -> Vec<ClaimOutcome> {
    use rayon::prelude::*;
    let threads = std::env::var("MODSUM_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool construction");
    let claims = registry();
    pool.install(|| {
        claims
            .par_iter()
            .map(|claim| run_claim(claim, params))
            .collect()
    })
}

// ---------------------------------------------------------------------------
// Shared instance generators
// ---------------------------------------------------------------------------

fn scope_graphs(params: &AuditParams) -> Vec<Graph> {
    (1..=params.max_vertices)
        .flat_map(|m| {
            enumerate_graphs(m, true)
                .expect("enumeration cap respected")
                .collect::<Vec<_>>()
        })
        .collect()
}

fn nonempty_sets(n: u32) -> impl Iterator<Item = ZnSet> {
    (1..(1u64 << n)).map(move |mask| ZnSet::from_mask(n, mask).expect("mask in range"))
}

/// Visits every injective labeling of `graph` over `Z_n` (vertices take
/// distinct nonempty subsets, assigned in vertex order with masks
/// ascending). Returns the number visited.
fn for_each_injective_labeling<F>(graph: &Graph, n: u32, f: &mut F) -> u64
where
    F: FnMut(&Labeling) -> ControlFlow<()>,
{
    assert!(n <= 6, "full labeling enumeration is capped at n = 6");
    let m = graph.vertex_count();
    if (1u64 << n) - 1 < m as u64 {
        return 0;
    }
    let mut labels: Vec<u64> = Vec::with_capacity(m);
    let mut count = 0u64;
    fn rec<F: FnMut(&Labeling) -> ControlFlow<()>>(
        graph: &Graph,
        n: u32,
        labels: &mut Vec<u64>,
        used: u64,
        count: &mut u64,
        f: &mut F,
    ) -> ControlFlow<()> {
        if labels.len() == graph.vertex_count() {
            let sets = labels
                .iter()
                .map(|&mask| ZnSet::from_mask(n, mask).expect("mask in range"))
                .collect();
            let labeling = Labeling::new(graph.clone(), n, sets).expect("nonempty labels");
            *count += 1;
            return f(&labeling);
        }
        for mask in 1..(1u64 << n) {
            if used & (1 << mask) != 0 {
                continue;
            }
            labels.push(mask);
            let flow = rec(graph, n, labels, used | (1 << mask), count, f);
            labels.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    let _ = rec(graph, n, &mut labels, 0, &mut count, f);
    count
}

/// Graphs × moduli for the per-labeling biconditional audits, clamped to
/// the full-enumeration caps.
fn labeling_scopes(params: &AuditParams) -> (usize, u32) {
    (
        params.max_vertices.min(LABELING_VERTICES),
        params.max_modulus.min(LABELING_MODULUS),
    )
}

struct FamilyRange {
    name: &'static str,
    make: fn(usize) -> Option<Graph>,
    sizes: Vec<usize>,
}

fn named_families(min: usize, max: usize) -> Vec<FamilyRange> {
    vec![
        FamilyRange {
            name: "path",
            make: |m| Family::Path(m).generate().ok(),
            sizes: (min.max(1)..=max).collect(),
        },
        FamilyRange {
            name: "cycle",
            make: |m| Family::Cycle(m).generate().ok(),
            sizes: (min.max(3)..=max).collect(),
        },
        FamilyRange {
            name: "wheel",
            make: |m| Family::Wheel(m).generate().ok(),
            sizes: (min.max(3)..=max).collect(),
        },
        FamilyRange {
            name: "helm",
            make: |m| Family::Helm(m).generate().ok(),
            sizes: (min.max(3)..=max).collect(),
        },
        FamilyRange {
            name: "ladder",
            make: |m| Family::Ladder(m).generate().ok(),
            sizes: (min.max(3)..=max).collect(),
        },
        FamilyRange {
            name: "complete",
            make: |m| Family::Complete(m).generate().ok(),
            sizes: (min.max(4)..=max).collect(),
        },
        FamilyRange {
            name: "star",
            make: |m| Family::Star(m).generate().ok(),
            sizes: (min.max(1)..=max).collect(),
        },
    ]
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_square(k: u32) -> bool {
    let r = (k as f64).sqrt() as u32;
    (r.saturating_sub(1)..=r + 1).any(|x| x * x == k)
}

fn divisor_pairs(k: u32) -> u32 {
    (1..=k).filter(|r| k.is_multiple_of(*r) && r * r <= k).count() as u32
}

fn set_pair_witness(n: u32, a: &ZnSet, b: &ZnSet, note: String) -> Witness {
    Witness::SetPair {
        n,
        a: a.members(),
        b: b.members(),
        note,
    }
}

fn labeling_witness(labeling: &Labeling, param: Option<u32>, note: String) -> Witness {
    Witness::Labeling {
        labeling: labeling.into(),
        param,
        note,
    }
}

// ---------------------------------------------------------------------------
// Set-pair claims
// ---------------------------------------------------------------------------

/// The integer lower bound |A|+|B|-1 <= |A+B| fails under wraparound. The
/// headline witness is pinned to the full-set pair over Z_4 whenever it is
/// in range (it is the canonical demonstration); the scan still counts
/// every violation.
fn check_t11(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let mut first: Option<Witness> = None;
    for n in 1..=params.max_modulus {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let report = a.check_bounds(&b).expect("same modulus");
                if !report.integer_lower_holds {
                    check.mismatches += 1;
                    if first.is_none() {
                        first = Some(set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!(
                                "|A+B| = {} < {} = |A|+|B|-1",
                                report.actual, report.lower_integer
                            ),
                        ));
                    }
                }
            }
        }
    }
    if check.mismatches > 0 {
        let full4 = ZnSet::full(4).expect("Z_4");
        check.witness = if params.max_modulus >= 4 {
            let report = full4.check_bounds(&full4).expect("same modulus");
            assert!(!report.integer_lower_holds);
            Some(set_pair_witness(
                4,
                &full4,
                &full4,
                format!(
                    "|A+B| = {} < {} = |A|+|B|-1",
                    report.actual, report.lower_integer
                ),
            ))
        } else {
            first
        };
        check.detail(format!(
            "{} of {} pairs violate the unguarded bound",
            check.mismatches, check.instances
        ));
    }
    check
}

/// With the min(n, .) guard the bound becomes Cauchy-Davenport for prime
/// moduli; exhaustive over all pairs for every prime in range.
fn check_cd(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for n in (2..=params.max_modulus).filter(|&n| is_prime(n)) {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let report = a.check_bounds(&b).expect("same modulus");
                if report.actual < report.lower_safe {
                    check.mismatch(|| {
                        set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!(
                                "|A+B| = {} < min(n, |A|+|B|-1) = {}",
                                report.actual, report.lower_safe
                            ),
                        )
                    });
                }
            }
        }
        check.detail(format!("prime n={n}: all pairs satisfy the guarded bound"));
    }
    check
}

/// Equality |A+B| = |A|+|B|-1 against "both are arithmetic progressions
/// with the same common difference" (singletons are compatible with any
/// difference). Both directions fail modularly.
fn check_apeq(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let compatible_aps = |a: &ZnSet, b: &ZnSet| -> bool {
        let da = a.is_arithmetic_progression().expect("nonempty");
        let db = b.is_arithmetic_progression().expect("nonempty");
        match (da, db) {
            (Some(da), Some(db)) => {
                a.card() == 1 || b.card() == 1 || da == db
            }
            _ => false,
        }
    };
    for n in 1..=params.max_modulus {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let equality =
                    a.sumset(&b).expect("same modulus").card() == a.card() + b.card() - 1;
                let aps = compatible_aps(&a, &b);
                if equality != aps {
                    check.mismatch(|| {
                        set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!(
                                "equality holds: {equality}; matching progressions: {aps}"
                            ),
                        )
                    });
                }
            }
        }
    }
    check.detail(format!(
        "{} of {} pairs break the biconditional",
        check.mismatches, check.instances
    ));
    check
}

/// The full bound chain |A|+|B|-1 <= |A+B| <= |A||B| <= n. The middle link
/// holds; the outer links fail (wraparound, and products above n).
fn check_t23(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let mut lower_violations = 0u64;
    let mut middle_violations = 0u64;
    let mut product_violations = 0u64;
    for n in 1..=params.max_modulus {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let actual = a.sumset(&b).expect("same modulus").card() as u64;
                let lower = (a.card() + b.card() - 1) as u64;
                let product = a.card() as u64 * b.card() as u64;
                let chain_ok = lower <= actual && actual <= product && product <= u64::from(n);
                if lower > actual {
                    lower_violations += 1;
                }
                if actual > product {
                    middle_violations += 1;
                }
                if product > u64::from(n) {
                    product_violations += 1;
                }
                if !chain_ok {
                    check.mismatch(|| {
                        set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!(
                                "chain {lower} <= {actual} <= {product} <= {n} broken"
                            ),
                        )
                    });
                }
            }
        }
    }
    check.detail(format!(
        "lower-bound violations: {lower_violations}; middle violations: {middle_violations}; product-above-n: {product_violations}"
    ));
    check
}

/// |A+B| = |A| iff A = B = Z_n or |B| = 1, as stated; also verifies the
/// corrected characterization (A absorbs the translates of B, i.e. A is a
/// union of cosets of the subgroup generated by the differences of B).
fn check_p31(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let mut corrected_mismatches = 0u64;
    for n in 1..=params.max_modulus {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let sum = a.sumset(&b).expect("same modulus");
                let lhs = sum.card() == a.card();
                let rhs = (a.is_full() && b.is_full()) || b.card() == 1;
                if lhs != rhs {
                    check.mismatch(|| {
                        set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!("|A+B| = |A| is {lhs} but the stated condition is {rhs}"),
                        )
                    });
                }
                // Corrected form: shift B to contain 0; then |A+B| = |A|
                // iff A + B0 = A exactly.
                let b0 = b.members()[0];
                let shifted = ZnSet::new(n, &b.members().iter().map(|&x| (x + n - b0) % n).collect::<Vec<_>>())
                    .expect("residues in range");
                let corrected = a.sumset(&shifted).expect("same modulus") == a;
                if lhs != corrected {
                    corrected_mismatches += 1;
                }
            }
        }
    }
    check.detail(format!(
        "stated-form mismatches: {}; corrected-form (A + (B - min B) = A) mismatches: {}",
        check.mismatches, corrected_mismatches
    ));
    check
}

/// The literal strong criterion (absolute-value difference sets disjoint,
/// product within n) against the definition |A+B| = |A||B|; the corrected
/// modular-difference form is verified alongside.
fn check_str(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let mut corrected_mismatches = 0u64;
    for n in 1..=params.max_modulus {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let product = a.card() as u64 * b.card() as u64;
                let strong = u64::from(a.sumset(&b).expect("same modulus").card()) == product;
                let absolute_disjoint = a
                    .absolute_difference_set()
                    .expect("nonempty")
                    .intersection(&b.absolute_difference_set().expect("nonempty"))
                    .next()
                    .is_none();
                let literal = absolute_disjoint && product <= u64::from(n);
                if strong != literal {
                    check.mismatch(|| {
                        set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!(
                                "|A+B| = |A||B| is {strong}; absolute-difference criterion is {literal}"
                            ),
                        )
                    });
                }
                let modular_disjoint = a
                    .modular_difference_set()
                    .expect("nonempty")
                    .mask()
                    & b.modular_difference_set().expect("nonempty").mask()
                    == 0;
                let corrected = modular_disjoint && product <= u64::from(n);
                if strong != corrected {
                    corrected_mismatches += 1;
                }
            }
        }
    }
    check.detail(format!(
        "literal-criterion mismatches: {}; modular-difference-set mismatches: {}",
        check.mismatches, corrected_mismatches
    ));
    check
}

/// The stated maximality conditions, under the absolute-value difference
/// sets they were written with; the modular reading is tallied alongside.
fn check_maxc(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let mut modular_mismatches = 0u64;
    let mut first_modular: Option<Witness> = None;

    fn same_progressions(da: &[u32], db: &[u32]) -> bool {
        if da != db || da.is_empty() {
            return da == db;
        }
        da.windows(2)
            .map(|w| w[1] - w[0])
            .all(|gap| gap == da[1] - da[0])
    }

    let predicted = |a: &ZnSet, b: &ZnSet, da: &[u32], db: &[u32], n: u32| -> bool {
        let sum_cards = u64::from(a.card() + b.card());
        let product = a.card() as u64 * b.card() as u64;
        let intersects = da.iter().any(|d| db.contains(d));
        if intersects {
            if same_progressions(da, db) {
                sum_cards > u64::from(n)
            } else {
                sum_cards >= u64::from(n)
            }
        } else {
            product >= u64::from(n)
        }
    };

    for n in 1..=params.max_modulus {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let maximal = a.sumset(&b).expect("same modulus").is_full();

                let da: Vec<u32> = a.absolute_difference_set().expect("nonempty").into_iter().collect();
                let db: Vec<u32> = b.absolute_difference_set().expect("nonempty").into_iter().collect();
                if predicted(&a, &b, &da, &db, n) != maximal {
                    check.mismatch(|| {
                        set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!(
                                "conditions predict {} but A+B = Z_n is {maximal}",
                                predicted(&a, &b, &da, &db, n)
                            ),
                        )
                    });
                }

                let dam = a.modular_difference_set().expect("nonempty").members();
                let dbm = b.modular_difference_set().expect("nonempty").members();
                if predicted(&a, &b, &dam, &dbm, n) != maximal {
                    modular_mismatches += 1;
                    if first_modular.is_none() {
                        first_modular = Some(set_pair_witness(
                            n,
                            &a,
                            &b,
                            "modular-difference reading also mismatches".to_string(),
                        ));
                    }
                }
            }
        }
    }
    check.detail(format!(
        "absolute-difference mismatches: {}; modular-difference mismatches: {}",
        check.mismatches, modular_mismatches
    ));
    check
}

/// The elementwise criterion with the distinct-contributor clause against
/// plain containment A ⊆ A+B; the relaxed clause is verified alongside.
fn check_esub(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let mut relaxed_mismatches = 0u64;
    for n in 1..=params.max_modulus {
        for a in nonempty_sets(n) {
            for b in nonempty_sets(n) {
                check.instances += 1;
                let subset = a.is_subset_of(&a.sumset(&b).expect("same modulus"));
                let strict = member_sum_criterion_distinct(&a, &b).expect("nonempty");
                if subset != strict {
                    check.mismatch(|| {
                        set_pair_witness(
                            n,
                            &a,
                            &b,
                            format!(
                                "A subset of A+B is {subset}; distinct-contributor criterion is {strict}"
                            ),
                        )
                    });
                }
                if subset != member_sum_criterion(&a, &b).expect("nonempty") {
                    relaxed_mismatches += 1;
                }
            }
        }
    }
    check.detail(format!(
        "distinct-contributor mismatches: {}; relaxed-criterion mismatches: {}",
        check.mismatches, relaxed_mismatches
    ));
    check
}

// ---------------------------------------------------------------------------
// Graph-quantified claims
// ---------------------------------------------------------------------------

fn check_t24(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for graph in scope_graphs(params) {
        check.instances += 1;
        let n_max = params.n_max_override.unwrap_or(default_n_max(&graph));
        let plain = min_modulus(&graph, &PropertySpec::Plain, n_max, &params.budget)
            .expect("valid search");
        check.spend(&plain);
        let indexer = min_modulus(&graph, &PropertySpec::Indexer, n_max, &params.budget)
            .expect("valid search");
        check.spend(&indexer);
        if plain.value.is_none() || indexer.value.is_none() {
            check.inconclusive = true;
            check.detail(format!(
                "no labeling or indexer found within n <= {n_max} for {:?}",
                GraphDoc::from(&graph)
            ));
        }
    }
    check.detail(format!(
        "all {} graphs admit a labeling and an indexer within range",
        check.instances
    ));
    check
}

fn check_t26(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let audit_one = |check: &mut Check, name: String, graph: &Graph| {
        check.instances += 1;
        let m = graph.vertex_count();
        let formula = sigma_formula(m).expect("m >= 1");
        let n_max = params.n_max_override.unwrap_or(default_n_max(graph));
        let result = min_modulus(graph, &PropertySpec::Plain, n_max, &params.budget)
            .expect("valid search");
        check.spend(&result);
        if !result.exact || result.value != Some(formula) {
            check.mismatch(|| Witness::Instance {
                family: name.clone(),
                size: m,
                graph: graph.into(),
                param: None,
                note: format!(
                    "formula gives {formula}, search gives {:?} (exact: {})",
                    result.value, result.exact
                ),
            });
        }
    };
    for graph in scope_graphs(params) {
        audit_one(&mut check, format!("{:?}", GraphDoc::from(&graph)), &graph);
    }
    for family in named_families(1, 12) {
        for &size in &family.sizes {
            if let Some(graph) = (family.make)(size) {
                if graph.vertex_count() <= 12 {
                    audit_one(&mut check, format!("{}({size})", family.name), &graph);
                }
            }
        }
    }
    let petersen = Family::Petersen.generate().expect("petersen");
    audit_one(&mut check, "petersen".to_string(), &petersen);
    check
}

/// Weak existence: constructive search plus the monocardinal-edge link. In
/// any weak labeling the singleton-labeled vertices cover every edge, and
/// an independent cover forces bipartiteness, so a weak labeling of a
/// non-bipartite graph must carry an edge with two singleton ends.
fn check_w1(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for graph in scope_graphs(params) {
        check.instances += 1;
        let n_max = params.n_max_override.unwrap_or(default_n_max(&graph));
        let result = min_modulus(&graph, &PropertySpec::Weak, n_max, &params.budget)
            .expect("valid search");
        check.spend(&result);
        let Some(found_n) = result.value else {
            check.inconclusive = true;
            continue;
        };
        let witness = result
            .per_n
            .last()
            .and_then(|(_, o)| o.witness.clone())
            .expect("found implies witness");
        let report = witness.classify().expect("witness is injective");
        let rhs = graph.is_bipartite() || !report.monocardinal_edges.is_empty();
        if !rhs {
            check.mismatch(|| {
                labeling_witness(
                    &witness,
                    Some(found_n),
                    "weak labeling of a non-bipartite graph without a monocardinal edge"
                        .to_string(),
                )
            });
        }
    }
    check.detail(format!(
        "{} graphs: weak labelings found; non-bipartite ones all carry monocardinal edges",
        check.instances
    ));
    check
}

/// Weakly k-uniform existence for k in [2, k_max] against bipartiteness.
/// k = 1 is excluded: once n reaches the vertex count, distinct singleton
/// labels make every graph weakly 1-uniform, so the biconditional could
/// only be read with k >= 2.
fn check_w2(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let n_max = params.n_max_override.unwrap_or(W2_N_MAX);
    for graph in scope_graphs(params) {
        check.instances += 1;
        let mut found: Option<(u32, u32, Labeling)> = None;
        let mut conclusive = true;
        'k_loop: for k in 2..=params.k_max {
            let result = min_modulus(
                &graph,
                &PropertySpec::WeakKUniform(k),
                n_max,
                &params.budget,
            )
            .expect("valid search");
            check.spend(&result);
            if let Some(n) = result.value {
                let witness = result
                    .per_n
                    .last()
                    .and_then(|(_, o)| o.witness.clone())
                    .expect("found implies witness");
                found = Some((k, n, witness));
                break 'k_loop;
            }
            if !result.exact {
                conclusive = false;
            }
        }
        let bipartite = graph.is_bipartite();
        match found {
            Some((k, n, witness)) if !bipartite => {
                check.mismatch(|| {
                    labeling_witness(
                        &witness,
                        Some(k),
                        format!("weakly {k}-uniform labeling of a non-bipartite graph at n = {n}"),
                    )
                });
            }
            None if bipartite && conclusive => {
                check.mismatch(|| Witness::Graph {
                    graph: (&graph).into(),
                    note: format!(
                        "bipartite graph with no weakly k-uniform labeling for k <= {}, n <= {n_max}",
                        params.k_max
                    ),
                });
            }
            None if !conclusive => check.inconclusive = true,
            _ => {}
        }
    }
    check.detail(format!(
        "k in [2, {}], n <= {n_max} over {} graphs",
        params.k_max, check.instances
    ));
    check
}

fn weak_oracle(
    check: &mut Check,
    graph: &Graph,
    params: &AuditParams,
) -> Option<(u32, bool)> {
    let n_max = params.n_max_override.unwrap_or(default_n_max(graph));
    let result = min_modulus(graph, &PropertySpec::Weak, n_max, &params.budget)
        .expect("valid search");
    check.spend(&result);
    result.value.map(|v| (v, result.exact))
}

fn check_wnum(params: &AuditParams) -> Check {
    let mut check = Check::default();
    let audit_one = |check: &mut Check, name: String, size: usize, graph: &Graph| {
        check.instances += 1;
        let theorem = weak_number_formula(graph);
        match weak_oracle(check, graph, params) {
            Some((oracle, true)) => {
                if oracle != theorem {
                    check.mismatch(|| Witness::Instance {
                        family: name.clone(),
                        size,
                        note: format!("formula gives {theorem}, exact search gives {oracle}"),
                    });
                    check.detail(format!(
                        "{name}: formula {theorem} != oracle {oracle}"
                    ));
                }
            }
            _ => check.inconclusive = true,
        }
    };
    for graph in scope_graphs(params) {
        audit_one(
            &mut check,
            format!("{:?}", GraphDoc::from(&graph)),
            graph.vertex_count(),
            &graph,
        );
    }
    for family in named_families(params.family_min, params.family_max) {
        for &size in &family.sizes {
            if let Some(graph) = (family.make)(size) {
                audit_one(&mut check, format!("{}({size})", family.name), size, &graph);
            }
        }
    }
    check
}

/// One family proposition: compares the claimed closed form, the general
/// formula, and the exact search oracle on every instance in range.
fn check_family(
    params: &AuditParams,
    name: &'static str,
    sizes: std::ops::RangeInclusive<usize>,
    make: fn(usize) -> Option<Graph>,
    closed_form: fn(usize) -> u32,
) -> Check {
    let mut check = Check::default();
    for size in sizes {
        let Some(graph) = make(size) else { continue };
        check.instances += 1;
        let claimed = closed_form(size);
        let theorem = weak_number_formula(&graph);
        match weak_oracle(&mut check, &graph, params) {
            Some((oracle, true)) => {
                check.detail(format!(
                    "{name} m={size}: closed form {claimed}, general formula {theorem}, oracle {oracle}"
                ));
                if oracle != claimed {
                    check.mismatch(|| Witness::Instance {
                        family: name.to_string(),
                        size,
                        note: format!("closed form {claimed} but exact oracle {oracle}"),
                    });
                }
            }
            _ => {
                check.inconclusive = true;
                check.detail(format!("{name} m={size}: oracle inconclusive"));
            }
        }
    }
    check
}

fn check_family_path(params: &AuditParams) -> Check {
    check_family(
        params,
        "path",
        params.family_min.max(1)..=params.family_max,
        |m| Family::Path(m).generate().ok(),
        |m| if m <= 2 { m as u32 } else { (m / 2) as u32 },
    )
}

fn check_family_cycle(params: &AuditParams) -> Check {
    check_family(
        params,
        "cycle",
        params.family_min.max(3)..=params.family_max,
        |m| Family::Cycle(m).generate().ok(),
        |m| {
            if m <= 4 {
                (m - 1) as u32
            } else {
                m.div_ceil(2) as u32
            }
        },
    )
}

fn check_family_wheel(params: &AuditParams) -> Check {
    check_family(
        params,
        "wheel",
        params.family_min.max(3)..=params.family_max,
        |m| Family::Wheel(m).generate().ok(),
        |m| 1 + m.div_ceil(2) as u32,
    )
}

fn check_family_helm(params: &AuditParams) -> Check {
    check_family(
        params,
        "helm",
        params.family_min.max(3)..=params.family_max,
        |m| Family::Helm(m).generate().ok(),
        |m| m as u32,
    )
}

fn check_family_ladder(params: &AuditParams) -> Check {
    check_family(
        params,
        "ladder",
        params.family_min.max(3)..=params.family_max,
        |m| Family::Ladder(m).generate().ok(),
        |m| m as u32,
    )
}

fn check_family_complete(params: &AuditParams) -> Check {
    check_family(
        params,
        "complete",
        params.family_min.max(4)..=params.family_max,
        |m| Family::Complete(m).generate().ok(),
        |m| (m - 1) as u32,
    )
}

fn check_wku(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for graph in scope_graphs(params) {
        if !graph.is_bipartite() {
            continue;
        }
        for k in 1..=params.k_max {
            check.instances += 1;
            let formula = weak_uniform_min_formula(&graph, k).expect("k >= 1");
            let n_max = params.n_max_override.unwrap_or(default_n_max(&graph));
            let result = min_modulus(
                &graph,
                &PropertySpec::WeakKUniform(k),
                n_max,
                &params.budget,
            )
            .expect("valid search");
            check.spend(&result);
            match (result.value, result.exact) {
                (Some(oracle), true) => {
                    if oracle != formula {
                        check.mismatch(|| Witness::Instance {
                            family: format!("{:?} with k={k}", GraphDoc::from(&graph)),
                            size: graph.vertex_count(),
                            note: format!(
                                "formula gives {formula}, exact search gives {oracle}"
                            ),
                        });
                    }
                }
                _ => check.inconclusive = true,
            }
        }
    }
    check.detail(format!(
        "bipartite graphs x k in [1, {}]: {} instances",
        params.k_max, check.instances
    ));
    check
}

fn sku_n_max(params: &AuditParams, graph: &Graph) -> u32 {
    params
        .n_max_override
        .unwrap_or(((2 * graph.vertex_count() + 2) as u32).min(MAX_SEARCH_MODULUS))
}

/// Existence of a strongly k-uniform labeling, scanning moduli upward.
fn sku_exists(
    check: &mut Check,
    graph: &Graph,
    k: u32,
    params: &AuditParams,
) -> (Option<(u32, Labeling)>, bool) {
    let result = min_modulus(
        graph,
        &PropertySpec::StrongKUniform(k),
        sku_n_max(params, graph),
        &params.budget,
    )
    .expect("valid search");
    check.spend(&result);
    let conclusive = result.value.is_some() || result.exact;
    let witness = result.value.map(|n| {
        (
            n,
            result
                .per_n
                .last()
                .and_then(|(_, o)| o.witness.clone())
                .expect("found implies witness"),
        )
    });
    (witness, conclusive)
}

fn check_sku(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for graph in scope_graphs(params) {
        let connected = graph.is_connected();
        let bipartite = graph.is_bipartite();
        for k in SKU_K_RANGE {
            check.instances += 1;
            let (found, conclusive) = sku_exists(&mut check, &graph, k, params);
            // Connected graphs: exists iff k square or bipartite. For
            // arbitrary graphs and non-square k: exists iff every component
            // is bipartite (which is plain bipartiteness).
            let rhs = if connected || !is_square(k) {
                is_square(k) || bipartite
            } else {
                // Disconnected with square k: the claim imposes nothing.
                continue;
            };
            match (found, rhs) {
                (Some((n, witness)), false) => {
                    check.mismatch(|| {
                        labeling_witness(
                            &witness,
                            Some(k),
                            format!(
                                "strongly {k}-uniform labeling at n = {n} where the claim predicts none"
                            ),
                        )
                    });
                }
                (None, true) if conclusive => check.inconclusive = true,
                (None, true) => check.inconclusive = true,
                _ => {}
            }
        }
    }
    check.detail(format!(
        "k in {:?} over {} (graph, k) instances",
        SKU_K_RANGE, check.instances
    ));
    check
}

fn check_scomp(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for graph in scope_graphs(params) {
        let components = graph.component_count() as u32;
        for k in SKU_K_RANGE {
            if components <= divisor_pairs(k) {
                continue;
            }
            check.instances += 1;
            let (found, _) = sku_exists(&mut check, &graph, k, params);
            if let Some((n, witness)) = found {
                check.mismatch(|| {
                    labeling_witness(
                        &witness,
                        Some(k),
                        format!(
                            "strongly {k}-uniform labeling at n = {n} on {components} components, above the divisor-pair bound {}",
                            divisor_pairs(k)
                        ),
                    )
                });
            }
        }
    }
    check.detail(format!(
        "{} (graph, k) instances exceed the divisor-pair bound and were searched",
        check.instances
    ));
    check
}

fn check_snb(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for graph in scope_graphs(params) {
        if graph.non_bipartite_component_count() < 2 {
            continue;
        }
        for k in SKU_K_RANGE {
            check.instances += 1;
            let (found, _) = sku_exists(&mut check, &graph, k, params);
            if let Some((n, witness)) = found {
                check.mismatch(|| {
                    labeling_witness(
                        &witness,
                        Some(k),
                        format!(
                            "strongly {k}-uniform labeling at n = {n} with two non-bipartite components"
                        ),
                    )
                });
            }
        }
    }
    check.detail(format!(
        "{} (graph, k) instances with two or more non-bipartite components searched",
        check.instances
    ));
    check
}

// ---------------------------------------------------------------------------
// Per-labeling biconditional claims
// ---------------------------------------------------------------------------

/// Enumerates every injective labeling of every in-scope graph at every
/// modulus up to the caps, feeding each to `f` until it breaks.
fn for_each_scoped_labeling<F>(params: &AuditParams, f: &mut F) -> u64
where
    F: FnMut(&Graph, u32, &Labeling) -> ControlFlow<()>,
{
    let (max_m, max_n) = labeling_scopes(params);
    let mut total = 0u64;
    for m in 1..=max_m {
        for graph in enumerate_graphs(m, true).expect("enumeration cap respected") {
            for n in 1..=max_n {
                let mut flow = ControlFlow::Continue(());
                total += for_each_injective_labeling(&graph, n, &mut |labeling| {
                    let out = f(&graph, n, labeling);
                    if out.is_break() {
                        flow = ControlFlow::Break(());
                    }
                    out
                });
                if flow.is_break() {
                    return total;
                }
            }
        }
    }
    total
}

fn check_wmax(params: &AuditParams) -> Check {
    let mut check = Check::default();
    // Constructive direction: ground-set center, distinct singleton leaves.
    for leaves in 1..=6usize {
        check.instances += 1;
        let star = Family::Star(leaves).generate().expect("valid star");
        let n = (leaves + 1) as u32;
        let mut labels = vec![ZnSet::full(n).expect("n >= 2")];
        labels.extend((0..leaves as u32).map(|i| ZnSet::new(n, &[i]).expect("residue ok")));
        let labeling = Labeling::new(star, n, labels).expect("valid labeling");
        let report = labeling.classify().expect("injective");
        if !(report.maximal && report.weak && report.weak_singleton_form && report.exquisite) {
            check.mismatch(|| {
                labeling_witness(
                    &labeling,
                    None,
                    "star construction failed to classify maximal+weak+exquisite".to_string(),
                )
            });
        }
    }
    // Converse: every weak-and-maximal labeling lives on a star.
    check.instances += for_each_scoped_labeling(params, &mut |graph, _n, labeling| {
        let report = labeling.classify().expect("injective");
        if report.weak && report.maximal && !graph.is_star() {
            check.mismatch(|| {
                labeling_witness(
                    labeling,
                    None,
                    "weak and maximal labeling on a non-star graph".to_string(),
                )
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    let (max_m, max_n) = labeling_scopes(params);
    check.detail(format!(
        "constructive stars up to 6 leaves; converse over all labelings with m <= {max_m}, n <= {max_n}"
    ));
    check
}

fn check_smax(params: &AuditParams) -> Check {
    let mut check = Check::default();
    check.instances = for_each_scoped_labeling(params, &mut |graph, n, labeling| {
        let report = labeling.classify().expect("injective");
        if report.strong {
            let rhs = is_square(n) || graph.is_bipartite();
            if report.maximal != rhs {
                check.mismatch(|| {
                    labeling_witness(
                        labeling,
                        Some(n),
                        format!(
                            "strong labeling: maximal is {} but square-or-bipartite is {rhs}",
                            report.maximal
                        ),
                    )
                });
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    check
}

fn check_eiff(params: &AuditParams) -> Check {
    let mut check = Check::default();
    check.instances = for_each_scoped_labeling(params, &mut |_graph, _n, labeling| {
        let report = labeling.classify().expect("injective");
        let zero_labels = labeling.labels().iter().all(|l| l.contains(0));
        let rhs = zero_labels || report.maximal;
        if report.exquisite != rhs {
            check.mismatch(|| {
                labeling_witness(
                    labeling,
                    None,
                    format!(
                        "exquisite is {} but zero-labels-or-maximal is {rhs}",
                        report.exquisite
                    ),
                )
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    check
}

fn check_ews(params: &AuditParams) -> Check {
    let mut check = Check::default();
    // Constructive: center {0}, leaves distinct subsets containing 0.
    for (leaves, n) in [(1usize, 2u32), (2, 3), (3, 3)] {
        check.instances += 1;
        let star = Family::Star(leaves).generate().expect("valid star");
        let mut labels = vec![ZnSet::new(n, &[0]).expect("zero")];
        let mut zero_sets = (1..(1u64 << n))
            .filter(|mask| mask & 1 == 1 && mask.count_ones() >= 2)
            .map(|mask| ZnSet::from_mask(n, mask).expect("mask ok"));
        labels.extend(zero_sets.by_ref().take(leaves));
        let labeling = Labeling::new(star, n, labels).expect("valid labeling");
        let report = labeling.classify().expect("injective");
        if !(report.exquisite && report.weak_singleton_form) {
            check.mismatch(|| {
                labeling_witness(
                    &labeling,
                    None,
                    "zero-centered star construction failed to classify exquisite+weak"
                        .to_string(),
                )
            });
        }
    }
    // Converse: every exquisite and weak labeling lives on a star.
    check.instances += for_each_scoped_labeling(params, &mut |graph, _n, labeling| {
        let report = labeling.classify().expect("injective");
        if report.exquisite && report.weak_singleton_form && !graph.is_star() {
            check.mismatch(|| {
                labeling_witness(
                    labeling,
                    None,
                    "exquisite and weak labeling on a non-star graph".to_string(),
                )
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    check
}

/// Draws a deterministic pseudo-random injective labeling. Labels optionally
/// all contain 0.
fn random_labeling(rng: &mut ChaCha8Rng, zero_required: bool) -> Labeling {
    loop {
        let m = rng.gen_range(2..=6usize);
        let pair_count = m * (m - 1) / 2;
        let edge_mask = rng.gen_range(0..(1u64 << pair_count));
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| edge_mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let graph = Graph::new(m, &edges).expect("valid random graph");
        let n = rng.gen_range(3..=6u32);
        let available = if zero_required {
            1u64 << (n - 1)
        } else {
            (1u64 << n) - 1
        };
        if available < m as u64 {
            continue;
        }
        let mut chosen = std::collections::HashSet::new();
        let mut labels = Vec::with_capacity(m);
        while labels.len() < m {
            let mut mask = rng.gen_range(1..(1u64 << n));
            if zero_required {
                mask |= 1;
            }
            if chosen.insert(mask) {
                labels.push(ZnSet::from_mask(n, mask).expect("mask ok"));
            }
        }
        return Labeling::new(graph, n, labels).expect("valid labeling");
    }
}

/// Zero in every label implies exquisite: full enumeration at m <= 3,
/// n <= 3, then seeded random sampling at m <= 6, n <= 6.
fn check_e0(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for m in 1..=3usize.min(params.max_vertices) {
        for graph in enumerate_graphs(m, false).expect("small") {
            for n in 1..=3u32 {
                check.instances += for_each_injective_labeling(&graph, n, &mut |labeling| {
                    if !labeling.labels().iter().all(|l| l.contains(0)) {
                        return ControlFlow::Continue(());
                    }
                    let report = labeling.classify().expect("injective");
                    if !report.exquisite {
                        check.mismatch(|| {
                            labeling_witness(
                                labeling,
                                None,
                                "zero-containing labels but not exquisite".to_string(),
                            )
                        });
                        return ControlFlow::Break(());
                    }
                    ControlFlow::Continue(())
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..params.random_samples {
        check.instances += 1;
        let labeling = random_labeling(&mut rng, true);
        let report = labeling.classify().expect("injective");
        if !report.exquisite {
            check.mismatch(|| {
                labeling_witness(
                    &labeling,
                    None,
                    "zero-containing labels but not exquisite".to_string(),
                )
            });
            break;
        }
    }
    check
}

/// Maximal implies exquisite: full enumeration at m <= 3, n <= 3, then
/// seeded random sampling.
fn check_maxe(params: &AuditParams) -> Check {
    let mut check = Check::default();
    for m in 1..=3usize.min(params.max_vertices) {
        for graph in enumerate_graphs(m, false).expect("small") {
            for n in 1..=3u32 {
                check.instances += for_each_injective_labeling(&graph, n, &mut |labeling| {
                    let report = labeling.classify().expect("injective");
                    if report.maximal && !report.exquisite {
                        check.mismatch(|| {
                            labeling_witness(
                                labeling,
                                None,
                                "maximal labeling that is not exquisite".to_string(),
                            )
                        });
                        return ControlFlow::Break(());
                    }
                    ControlFlow::Continue(())
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0x4d41_5845);
    for _ in 0..params.random_samples {
        check.instances += 1;
        let labeling = random_labeling(&mut rng, false);
        let report = labeling.classify().expect("injective");
        if report.maximal && !report.exquisite {
            check.mismatch(|| {
                labeling_witness(
                    &labeling,
                    None,
                    "maximal labeling that is not exquisite".to_string(),
                )
            });
            break;
        }
    }
    check
}

// ---------------------------------------------------------------------------
// Witness replay
// ---------------------------------------------------------------------------

/// Re-verifies a refutation witness through the public set-algebra and
/// labeling APIs. Returns `None` for claims whose witnesses are not
/// replayable counterexamples (constructive certificates).
pub fn replay_witness(claim_id: &str, witness: &Witness) -> Option<bool> {
    let set_pair = |witness: &Witness| -> Option<(u32, ZnSet, ZnSet)> {
        if let Witness::SetPair { n, a, b, .. } = witness {
            Some((
                *n,
                ZnSet::new(*n, a).ok()?,
                ZnSet::new(*n, b).ok()?,
            ))
        } else {
            None
        }
    };
    match claim_id {
        "CL-T11" => {
            let (_, a, b) = set_pair(witness)?;
            Some(!a.check_bounds(&b).ok()?.integer_lower_holds)
        }
        "CL-CD" => {
            let (_, a, b) = set_pair(witness)?;
            let report = a.check_bounds(&b).ok()?;
            Some(report.actual < report.lower_safe)
        }
        "CL-APEQ" => {
            let (_, a, b) = set_pair(witness)?;
            let equality = a.sumset(&b).ok()?.card() == a.card() + b.card() - 1;
            let da = a.is_arithmetic_progression().ok()?;
            let db = b.is_arithmetic_progression().ok()?;
            let aps = match (da, db) {
                (Some(da), Some(db)) => a.card() == 1 || b.card() == 1 || da == db,
                _ => false,
            };
            Some(equality != aps)
        }
        "CL-T23" => {
            let (n, a, b) = set_pair(witness)?;
            let actual = u64::from(a.sumset(&b).ok()?.card());
            let lower = u64::from(a.card() + b.card() - 1);
            let product = a.card() as u64 * b.card() as u64;
            Some(!(lower <= actual && actual <= product && product <= u64::from(n)))
        }
        "CL-P31" => {
            let (_, a, b) = set_pair(witness)?;
            let lhs = a.sumset(&b).ok()?.card() == a.card();
            let rhs = (a.is_full() && b.is_full()) || b.card() == 1;
            Some(lhs != rhs)
        }
        "CL-STR" => {
            let (n, a, b) = set_pair(witness)?;
            let product = a.card() as u64 * b.card() as u64;
            let strong = u64::from(a.sumset(&b).ok()?.card()) == product;
            let disjoint = a
                .absolute_difference_set()
                .ok()?
                .intersection(&b.absolute_difference_set().ok()?)
                .next()
                .is_none();
            Some(strong != (disjoint && product <= u64::from(n)))
        }
        "CL-ESUB" => {
            let (_, a, b) = set_pair(witness)?;
            let subset = a.is_subset_of(&a.sumset(&b).ok()?);
            Some(subset != member_sum_criterion_distinct(&a, &b).ok()?)
        }
        "CL-MAXC" => {
            // The scan mismatch is re-established by rerunning the
            // prediction on the witnessed pair.
            let (n, a, b) = set_pair(witness)?;
            let maximal = a.sumset(&b).ok()?.is_full();
            let da: Vec<u32> = a.absolute_difference_set().ok()?.into_iter().collect();
            let db: Vec<u32> = b.absolute_difference_set().ok()?.into_iter().collect();
            let intersects = da.iter().any(|d| db.contains(d));
            let same_ap = da == db
                && (da.len() < 2
                    || da.windows(2).map(|w| w[1] - w[0]).all(|g| g == da[1] - da[0]));
            let sum_cards = u64::from(a.card() + b.card());
            let predicted = if intersects {
                if same_ap {
                    sum_cards > u64::from(n)
                } else {
                    sum_cards >= u64::from(n)
                }
            } else {
                a.card() as u64 * b.card() as u64 >= u64::from(n)
            };
            Some(predicted != maximal)
        }
        "CL-WMAX" | "CL-EWS" | "CL-EIFF" | "CL-SMAX" | "CL-W2" | "CL-SCOMP" | "CL-SNB"
        | "CL-SKU" | "CL-W1" => {
            if let Witness::Labeling { labeling, param, note: _ } = witness {
                let labeling = Labeling::try_from(labeling).ok()?;
                let report = labeling.classify().ok()?;
                let graph = labeling.graph();
                Some(match claim_id {
                    "CL-WMAX" => report.weak && report.maximal && !graph.is_star(),
                    "CL-EWS" => {
                        report.exquisite && report.weak_singleton_form && !graph.is_star()
                    }
                    "CL-EIFF" => {
                        let zero = labeling.labels().iter().all(|l| l.contains(0));
                        report.exquisite != (zero || report.maximal)
                    }
                    "CL-SMAX" => {
                        report.strong
                            && report.maximal
                                != (is_square(labeling.modulus()) || graph.is_bipartite())
                    }
                    "CL-W2" => {
                        let k = (*param)?;
                        report.weak_singleton_form
                            && report.edge_uniform_k == Some(k)
                            && !graph.is_bipartite()
                    }
                    "CL-SCOMP" => {
                        let k = (*param)?;
                        report.strong
                            && report.edge_uniform_k == Some(k)
                            && graph.component_count() as u32 > divisor_pairs(k)
                    }
                    "CL-SNB" => {
                        let k = (*param)?;
                        report.strong
                            && report.edge_uniform_k == Some(k)
                            && graph.non_bipartite_component_count() >= 2
                    }
                    "CL-SKU" => {
                        let k = (*param)?;
                        report.strong
                            && report.edge_uniform_k == Some(k)
                            && !(is_square(k) || graph.is_bipartite())
                    }
                    "CL-W1" => {
                        report.weak_singleton_form
                            && !graph.is_bipartite()
                            && report.monocardinal_edges.is_empty()
                    }
                    _ => unreachable!(),
                })
            } else {
                None
            }
        }
        "CL-WNUM" | "CL-PATH" | "CL-CYCLE" | "CL-WHEEL" | "CL-HELM" | "CL-LADDER"
        | "CL-COMPLETE" | "CL-WKU" | "CL-T26" | "CL-T24" | "CL-E0" | "CL-MAXE" => None,
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

/// Deterministic text report: outcomes grouped by status, registry order
/// within each group, with witnesses inlined as JSON.
pub fn render_text(outcomes: &[ClaimOutcome]) -> String {
    let mut out = String::new();
    let order = [
        ClaimStatus::Refuted,
        ClaimStatus::ConfirmedExhaustive,
        ClaimStatus::ConfirmedWithinBudget,
        ClaimStatus::Inconclusive,
    ];
    for status in order {
        let group: Vec<&ClaimOutcome> = outcomes.iter().filter(|o| o.status == status).collect();
        if group.is_empty() {
            continue;
        }
        let _ = writeln!(out, "== {} ({})", status.as_str(), group.len());
        for outcome in group {
            let _ = writeln!(
                out,
                "{:12} expected {:9} instances={} nodes={} elapsed_ms={}",
                outcome.claim_id,
                outcome.expected.as_str(),
                outcome.instances_checked,
                outcome.nodes_spent,
                outcome.elapsed_ms
            );
            if let Some(witness) = &outcome.witness {
                let _ = writeln!(
                    out,
                    "    witness: {}",
                    serde_json::to_string(witness).expect("witness serializes")
                );
            }
            for detail in &outcome.details {
                let _ = writeln!(out, "    {detail}");
            }
        }
    }
    let violations = expectation_violations(outcomes);
    let _ = writeln!(
        out,
        "summary: {} claims; {} refuted, {} confirmed exhaustively, {} confirmed within budget, {} inconclusive; expectation violations: {}",
        outcomes.len(),
        outcomes.iter().filter(|o| o.status == ClaimStatus::Refuted).count(),
        outcomes.iter().filter(|o| o.status == ClaimStatus::ConfirmedExhaustive).count(),
        outcomes.iter().filter(|o| o.status == ClaimStatus::ConfirmedWithinBudget).count(),
        outcomes.iter().filter(|o| o.status == ClaimStatus::Inconclusive).count(),
        violations
    );
    out
}

fn expectation_violations(outcomes: &[ClaimOutcome]) -> usize {
    outcomes
        .iter()
        .filter(|o| o.expected == Expectation::Confirmed && o.status == ClaimStatus::Refuted)
        .count()
}

/// Exit-code contract: 1 when a claim expected to confirm was refuted,
/// 2 when any audit was inconclusive under its budget, 0 otherwise.
pub fn report_exit_code(outcomes: &[ClaimOutcome]) -> i32 {
    if expectation_violations(outcomes) > 0 {
        1
    } else if outcomes
        .iter()
        .any(|o| o.status == ClaimStatus::Inconclusive)
    {
        2
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_params() -> AuditParams {
        AuditParams {
            max_vertices: 4,
            max_modulus: 5,
            family_min: 3,
            family_max: 5,
            random_samples: 200,
            ..AuditParams::default()
        }
    }

    #[test]
    fn registry_is_complete_and_unique() {
        let claims = registry();
        assert!(claims.len() >= 24);
        let mut ids: Vec<&str> = claims.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len(), "duplicate claim ids");
        assert!(claims.iter().any(|c| c.id == "CL-T26"));
    }

    #[test]
    fn every_statement_is_anchored() {
        let claims = registry();
        for claim in &claims {
            assert!(
                ANCHORS.contains(claim.statement),
                "statement for {} missing from anchors.txt",
                claim.id
            );
        }
        let anchor_ids: Vec<&str> = ANCHORS
            .lines()
            .filter_map(|l| l.split_once('\t').map(|(id, _)| id))
            .collect();
        assert_eq!(anchor_ids.len(), claims.len());
        for id in anchor_ids {
            assert!(claims.iter().any(|c| c.id == id), "{id} not in registry");
        }
    }

    #[test]
    fn t11_refuted_with_full_set_witness() {
        let outcome = audit("CL-T11", &quick_params()).unwrap();
        assert_eq!(outcome.status, ClaimStatus::Refuted);
        match outcome.witness.as_ref().unwrap() {
            Witness::SetPair { n, a, b, .. } => {
                assert_eq!((*n, a.len(), b.len()), (4, 4, 4));
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert_eq!(
            replay_witness("CL-T11", outcome.witness.as_ref().unwrap()),
            Some(true)
        );
    }

    #[test]
    fn cd_confirmed_exhaustive() {
        let outcome = audit("CL-CD", &quick_params()).unwrap();
        assert_eq!(outcome.status, ClaimStatus::ConfirmedExhaustive);
        assert!(outcome.witness.is_none());
    }

    #[test]
    fn str_refuted_with_the_known_pair() {
        let outcome = audit("CL-STR", &quick_params()).unwrap();
        assert_eq!(outcome.status, ClaimStatus::Refuted);
        match outcome.witness.as_ref().unwrap() {
            Witness::SetPair { n, a, b, .. } => {
                assert_eq!(*n, 4);
                assert_eq!(a, &vec![0, 1]);
                assert_eq!(b, &vec![0, 3]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert_eq!(
            replay_witness("CL-STR", outcome.witness.as_ref().unwrap()),
            Some(true)
        );
    }

    #[test]
    fn path_formula_refuted_at_small_sizes() {
        let outcome = audit("CL-PATH", &quick_params()).unwrap();
        assert_eq!(outcome.status, ClaimStatus::Refuted);
        assert!(outcome
            .details
            .iter()
            .any(|d| d.contains("m=4") && d.contains("oracle 3")));
    }

    #[test]
    fn esub_refuted_on_singletons() {
        let outcome = audit("CL-ESUB", &quick_params()).unwrap();
        assert_eq!(outcome.status, ClaimStatus::Refuted);
        assert_eq!(
            replay_witness("CL-ESUB", outcome.witness.as_ref().unwrap()),
            Some(true)
        );
    }

    #[test]
    fn e0_and_maxe_confirm() {
        let params = quick_params();
        assert_eq!(
            audit("CL-E0", &params).unwrap().status,
            ClaimStatus::ConfirmedWithinBudget
        );
        assert_eq!(
            audit("CL-MAXE", &params).unwrap().status,
            ClaimStatus::ConfirmedWithinBudget
        );
    }

    #[test]
    fn unknown_claim_is_rejected() {
        assert_eq!(
            audit("CL-NOPE", &quick_params()).unwrap_err(),
            AuditError::UnknownClaim("CL-NOPE".to_string())
        );
    }

    #[test]
    fn report_rendering_is_deterministic_and_grouped() {
        let params = quick_params();
        let outcomes: Vec<ClaimOutcome> = ["CL-T11", "CL-CD", "CL-E0"]
            .iter()
            .map(|id| audit(id, &params).unwrap())
            .collect();
        let text = render_text(&outcomes);
        assert!(text.contains("== REFUTED (1)"));
        assert!(text.contains("== CONFIRMED_EXHAUSTIVE (1)"));
        assert!(text.contains("summary: 3 claims"));
        assert_eq!(report_exit_code(&outcomes), 0);
    }
}
