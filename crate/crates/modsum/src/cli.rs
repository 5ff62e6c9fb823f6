//! Command-line dispatch.
//!
//! Subcommands: `gen`, `verify`, `classify`, `search`, `audit`, `export`.
//! Exit codes: 0 success, 1 property-check failure (or an audited claim
//! expected to confirm coming back refuted), 2 budget exceeded or
//! inconclusive, 3 invalid input or parse error.

use crate::claims::{audit, audit_all, render_text, report_exit_code, AuditParams, ClaimOutcome};
use crate::graph::Family;
use crate::io::{emit_dot, emit_graph, parse_graph, parse_labeling, LabelingDoc};
use crate::search::{default_n_max, min_modulus, Budget, MinResult, PropertySpec, SearchStatus};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "modsum",
    version,
    about = "Modular sumset labelings of finite graphs: generate, classify, search, audit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named family graph as JSON on stdout.
    Gen {
        /// path | cycle | wheel | helm | ladder | complete | star |
        /// complete_bipartite | petersen
        #[arg(long)]
        family: String,
        /// Primary size parameter (vertex count, rim size, or leaf count).
        #[arg(long)]
        size: Option<usize>,
        /// Second part size for complete_bipartite.
        #[arg(long)]
        size2: Option<usize>,
    },
    /// Check a labeling file for injectivity; exit 1 with a clash report
    /// when two vertices share a label.
    Verify {
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Print the full classification report of a labeling.
    Classify {
        #[arg(long)]
        labeling: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Minimum-modulus search for a property over a graph.
    Search {
        #[arg(long)]
        graph: PathBuf,
        /// plain | indexer | weak | weak-literal | weak-k-uniform |
        /// strong | strong-k-uniform | maximal | exquisite
        #[arg(long)]
        spec: String,
        /// Uniformity parameter for the *-k-uniform specs.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        #[arg(long = "budget-nodes")]
        budget_nodes: Option<u64>,
        #[arg(long = "budget-seconds")]
        budget_seconds: Option<u64>,
    },
    /// Audit registered claims against brute-force ground truth.
    Audit {
        /// Audit a single claim by id (e.g. CL-T11).
        #[arg(long, conflicts_with = "all")]
        claim: Option<String>,
        /// Audit every registered claim (the default).
        #[arg(long)]
        all: bool,
        #[arg(long = "max-vertices")]
        max_vertices: Option<usize>,
        #[arg(long = "max-modulus")]
        max_modulus: Option<u32>,
        #[arg(long = "budget-nodes")]
        budget_nodes: Option<u64>,
        #[arg(long = "budget-seconds")]
        budget_seconds: Option<u64>,
        /// Also write the outcome list as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Render a labeling as annotated DOT.
    Export {
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
}

#[derive(Serialize)]
struct VerifyDoc {
    injective: bool,
    clash: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct MinResultDoc {
    value: Option<u32>,
    exact: bool,
    witness: Option<LabelingDoc>,
    per_n: Vec<PerModulusDoc>,
}

#[derive(Serialize)]
struct PerModulusDoc {
    n: u32,
    status: &'static str,
    nodes: u64,
    elapsed_ms: u64,
}

impl From<&MinResult> for MinResultDoc {
    fn from(result: &MinResult) -> Self {
        MinResultDoc {
            value: result.value,
            exact: result.exact,
            witness: result
                .per_n
                .last()
                .and_then(|(_, o)| o.witness.as_ref())
                .map(LabelingDoc::from),
            per_n: result
                .per_n
                .iter()
                .map(|(n, o)| PerModulusDoc {
                    n: *n,
                    status: o.status.as_str(),
                    nodes: o.nodes_expanded,
                    elapsed_ms: o.elapsed.as_millis() as u64,
                })
                .collect(),
        }
    }
}

/// Parses `argv` and runs the selected subcommand, returning the process
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Gen {
            family,
            size,
            size2,
        } => cmd_gen(&family, size, size2),
        Command::Verify { labeling } => cmd_verify(&labeling),
        Command::Classify { labeling, json } => cmd_classify(&labeling, json),
        Command::Search {
            graph,
            spec,
            k,
            n_max,
            budget_nodes,
            budget_seconds,
        } => cmd_search(&graph, &spec, k, n_max, budget(budget_nodes, budget_seconds)),
        Command::Audit {
            claim,
            all: _,
            max_vertices,
            max_modulus,
            budget_nodes,
            budget_seconds,
            json,
        } => cmd_audit(
            claim.as_deref(),
            max_vertices,
            max_modulus,
            budget(budget_nodes, budget_seconds),
            json.as_deref(),
        ),
        Command::Export { labeling, dot } => cmd_export(&labeling, &dot),
    }
}

fn budget(nodes: Option<u64>, seconds: Option<u64>) -> Budget {
    let mut budget = Budget::default();
    if let Some(nodes) = nodes {
        budget.max_nodes = nodes;
    }
    if let Some(seconds) = seconds {
        budget.max_time = Duration::from_secs(seconds);
    }
    budget
}

fn fail(code: i32, message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    code
}

fn read_file(path: &std::path::Path) -> Result<String, i32> {
    std::fs::read_to_string(path).map_err(|e| fail(3, format!("{}: {e}", path.display())))
}

fn cmd_gen(family: &str, size: Option<usize>, size2: Option<usize>) -> i32 {
    let family = match Family::from_parts(family, size, size2) {
        Ok(family) => family,
        Err(e) => return fail(3, e),
    };
    match family.generate() {
        Ok(graph) => {
            println!("{}", emit_graph(&graph));
            0
        }
        Err(e) => fail(3, e),
    }
}

fn cmd_verify(path: &std::path::Path) -> i32 {
    let text = match read_file(path) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let labeling = match parse_labeling(&text) {
        Ok(labeling) => labeling,
        Err(e) => return fail(3, e),
    };
    let clash = labeling.injectivity_clash();
    let doc = VerifyDoc {
        injective: clash.is_none(),
        clash,
    };
    println!("{}", serde_json::to_string(&doc).expect("serializable"));
    if clash.is_none() {
        0
    } else {
        1
    }
}

fn cmd_classify(path: &std::path::Path, json: bool) -> i32 {
    let text = match read_file(path) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let labeling = match parse_labeling(&text) {
        Ok(labeling) => labeling,
        Err(e) => return fail(3, e),
    };
    let report = match labeling.classify() {
        Ok(report) => report,
        Err(e) => return fail(1, e),
    };
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("injective: {}", report.is_injective);
        println!("indexer: {}", report.is_indexer);
        println!("weak: {}", report.weak);
        println!("weak_singleton_form: {}", report.weak_singleton_form);
        println!("edge_uniform_k: {:?}", report.edge_uniform_k);
        println!("vertex_uniform_l: {:?}", report.vertex_uniform_l);
        println!("strong: {}", report.strong);
        println!("strong_absolute_criterion: {}", report.strong_absolute_criterion);
        println!("maximal: {}", report.maximal);
        println!("exquisite: {}", report.exquisite);
        println!("monocardinal_vertices: {:?}", report.monocardinal_vertices);
        println!("monocardinal_edges: {:?}", report.monocardinal_edges);
    }
    0
}

fn parse_spec(name: &str, k: Option<u32>) -> Result<PropertySpec, String> {
    let need_k = || k.ok_or_else(|| format!("--spec {name} requires --k"));
    match name {
        "plain" => Ok(PropertySpec::Plain),
        "indexer" => Ok(PropertySpec::Indexer),
        "weak" => Ok(PropertySpec::Weak),
        "weak-literal" => Ok(PropertySpec::WeakLiteral),
        "weak-k-uniform" => Ok(PropertySpec::WeakKUniform(need_k()?)),
        "strong" => Ok(PropertySpec::Strong),
        "strong-k-uniform" => Ok(PropertySpec::StrongKUniform(need_k()?)),
        "maximal" => Ok(PropertySpec::Maximal),
        "exquisite" => Ok(PropertySpec::Exquisite),
        other => Err(format!("unknown spec '{other}'")),
    }
}

fn cmd_search(
    path: &std::path::Path,
    spec: &str,
    k: Option<u32>,
    n_max: Option<u32>,
    budget: Budget,
) -> i32 {
    let text = match read_file(path) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let graph = match parse_graph(&text) {
        Ok(graph) => graph,
        Err(e) => return fail(3, e),
    };
    let spec = match parse_spec(spec, k) {
        Ok(spec) => spec,
        Err(e) => return fail(3, e),
    };
    let n_max = n_max.unwrap_or_else(|| default_n_max(&graph));
    let result = match min_modulus(&graph, &spec, n_max, &budget) {
        Ok(result) => result,
        Err(e) => return fail(3, e),
    };
    println!(
        "{}",
        serde_json::to_string(&MinResultDoc::from(&result)).expect("serializable")
    );
    if result.value.is_some() {
        0
    } else if result
        .per_n
        .iter()
        .any(|(_, o)| o.status == SearchStatus::BudgetExceeded)
    {
        2
    } else {
        0
    }
}

fn cmd_audit(
    claim: Option<&str>,
    max_vertices: Option<usize>,
    max_modulus: Option<u32>,
    budget: Budget,
    json: Option<&std::path::Path>,
) -> i32 {
    let mut params = AuditParams {
        budget,
        ..AuditParams::default()
    };
    if let Some(mv) = max_vertices {
        params.max_vertices = mv;
    }
    if let Some(mm) = max_modulus {
        params.max_modulus = mm;
    }
    let outcomes: Vec<ClaimOutcome> = match claim {
        Some(id) => match audit(id, &params) {
            Ok(outcome) => vec![outcome],
            Err(e) => return fail(3, e),
        },
        None => audit_all(&params),
    };
    print!("{}", render_text(&outcomes));
    if let Some(path) = json {
        let body = serde_json::to_string_pretty(&outcomes).expect("serializable");
        if let Err(e) = std::fs::write(path, body) {
            return fail(3, format!("{}: {e}", path.display()));
        }
    }
    report_exit_code(&outcomes)
}

fn cmd_export(labeling: &std::path::Path, dot: &std::path::Path) -> i32 {
    let text = match read_file(labeling) {
        Ok(text) => text,
        Err(code) => return code,
    };
    let labeling = match parse_labeling(&text) {
        Ok(labeling) => labeling,
        Err(e) => return fail(3, e),
    };
    let rendered = match emit_dot(&labeling) {
        Ok(rendered) => rendered,
        Err(e) => return fail(3, e),
    };
    if let Err(e) = std::fs::write(dot, rendered) {
        return fail(3, format!("{}: {e}", dot.display()));
    }
    0
}
