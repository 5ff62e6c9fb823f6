//! JSON wire formats for graphs and labelings, and DOT export.
//!
//! Graph: `{"m": vertex_count, "edges": [[u, v], ...]}` with `u < v`, sorted.
//! Labeling: `{"graph": <graph>, "n": modulus, "labels": [[residues], ...]}`.
//! Parsing normalizes reversed and duplicate edges and rejects self-loops.
//! All emitted output is deterministic: sorted edge lists, sorted set
//! members, and no floating point anywhere.

use crate::graph::{Graph, GraphError};
use crate::labeling::{Labeling, LabelingError};
use crate::zn::ZnSet;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Set(#[from] crate::zn::SetError),
}

/// Wire form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphDoc {
    fn from(graph: &Graph) -> Self {
        GraphDoc {
            m: graph.vertex_count(),
            edges: graph.edges().to_vec(),
        }
    }
}

impl TryFrom<&GraphDoc> for Graph {
    type Error = GraphError;

    fn try_from(doc: &GraphDoc) -> Result<Self, GraphError> {
        Graph::new(doc.m, &doc.edges)
    }
}

/// Wire form of a labeling; label lists hold sorted residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDoc {
    pub graph: GraphDoc,
    pub n: u32,
    pub labels: Vec<Vec<u32>>,
}

impl From<&Labeling> for LabelingDoc {
    fn from(labeling: &Labeling) -> Self {
        LabelingDoc {
            graph: labeling.graph().into(),
            n: labeling.modulus(),
            labels: labeling.labels().iter().map(ZnSet::members).collect(),
        }
    }
}

impl TryFrom<&LabelingDoc> for Labeling {
    type Error = IoError;

    fn try_from(doc: &LabelingDoc) -> Result<Self, IoError> {
        let graph = Graph::try_from(&doc.graph)?;
        let labels = doc
            .labels
            .iter()
            .map(|members| ZnSet::new(doc.n, members))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Labeling::new(graph, doc.n, labels)?)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    Ok(Graph::try_from(&doc)?)
}

pub fn emit_graph(graph: &Graph) -> String {
    serde_json::to_string(&GraphDoc::from(graph)).expect("graph serialization is infallible")
}

pub fn parse_labeling(text: &str) -> Result<Labeling, IoError> {
    let doc: LabelingDoc =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    Labeling::try_from(&doc)
}

pub fn emit_labeling(labeling: &Labeling) -> String {
    serde_json::to_string(&LabelingDoc::from(labeling))
        .expect("labeling serialization is infallible")
}

/// DOT rendering of a bare graph, vertex ids as node names.
pub fn graph_dot(graph: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a labeling: vertices annotated with their set-labels,
/// edges with their induced labels, all as sorted brace lists. Requires an
/// injective labeling; byte-identical across runs for equal inputs.
pub fn emit_dot(labeling: &Labeling) -> Result<String, IoError> {
    if let Some((u, v)) = labeling.injectivity_clash() {
        return Err(IoError::Labeling(LabelingError::NotInjective(u, v)));
    }
    let mut out = String::from("graph G {\n");
    for (v, label) in labeling.labels().iter().enumerate() {
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for &(u, v) in labeling.graph().edges() {
        let label = labeling.induced_edge_label(u, v)?;
        let _ = writeln!(out, "  {u} -- {v} [label=\"{label}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}
