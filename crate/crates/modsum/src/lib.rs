//! Modular sumset algebra over `Z_n`, sumset labelings of finite simple
//! graphs, minimum-ground-set search, and an audit harness that checks a
//! registry of combinatorial claims against brute-force ground truth.
//!
//! Module map:
//! - [`zn`] — subsets of `Z_n` with sumsets, difference sets and bounds
//! - [`graph`] — graphs, families, α/β invariants, small-graph enumeration
//! - [`labeling`] — vertex labelings, induced edge labels, classifiers
//! - [`search`] — backtracking existence search and minimum-modulus search
//! - [`claims`] — the claim registry and audit harness
//! - [`io`] — JSON wire formats and DOT export
//! - [`cli`] — command dispatch for the `modsum` binary

pub mod claims;
pub mod cli;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod search;
pub mod zn;

pub use graph::{enumerate_graphs, Family, Graph, GraphError};
pub use labeling::{ClassificationReport, Labeling, LabelingError};
pub use search::{
    exists_labeling, min_modulus, sigma_formula, Budget, MinResult, PropertySpec, SearchError,
    SearchOutcome, SearchStatus,
};
pub use zn::{BoundsReport, SetError, ZnSet, MAX_MODULUS};
