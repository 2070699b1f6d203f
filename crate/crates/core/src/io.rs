//! JSON file formats.
//!
//! * hypergraph: `{"vertices": [...], "hyperedges": [[...], ...]}`
//! * graph: `{"vertices": [...], "edges": [["u", "v"], ...]}`, optionally with
//!   `"rotation": {"v": [...]}` and `"outer_face": [...]` for an embedding
//!   (a list of walks when several components have edges), and
//!   `"layers_used"` on support certificates
//! * bipartition: `{"A": [["u", "v"], ...], "B": [...], "beta": {"v": 1}}`
//!   where `B` defaults to the remaining edges and `beta` to the canonical
//!   labelling of the middle set

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::glueing::{canonical_labeling, middle_set, EdgeBipartition};
use crate::hypercore::{BuildReport, Hypergraph, Vertex};
use crate::planegeom::{edge, PlaneEmbedding, SimpleGraph};
use crate::supports::SupportCertificate;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphFile {
    vertices: Vec<Vertex>,
    hyperedges: Vec<Vec<Vertex>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum OuterFace {
    One(Vec<Vertex>),
    Many(Vec<Vec<Vertex>>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<Vertex, Vec<Vertex>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outer_face: Option<OuterFace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    layers_used: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BipartitionFile {
    #[serde(rename = "A")]
    a: Vec<(Vertex, Vertex)>,
    #[serde(rename = "B", default)]
    b: Option<Vec<(Vertex, Vertex)>>,
    #[serde(default)]
    beta: Option<BTreeMap<Vertex, usize>>,
}

/// A graph file: the graph plus an embedding when rotation data is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInput {
    pub graph: SimpleGraph,
    pub embedding: Option<PlaneEmbedding>,
}

pub fn read_to_string(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

/// Parses a hypergraph, normalising as [`Hypergraph::build`] does.
pub fn parse_hypergraph(text: &str) -> Result<(Hypergraph, BuildReport)> {
    let f: HypergraphFile = serde_json::from_str(text)?;
    Hypergraph::build(f.vertices, f.hyperedges)
}

pub fn hypergraph_to_json(h: &Hypergraph) -> Value {
    json!({ "vertices": h.vertices(), "hyperedges": h.named_hyperedges() })
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    let f: GraphFile = serde_json::from_str(text)?;
    let graph = SimpleGraph::new(f.vertices, f.edges.iter().map(|(u, v)| (u.as_str(), v.as_str())))?;
    let embedding = match (f.rotation, f.outer_face) {
        (None, None) => None,
        (Some(rotation), outer) => {
            let walks = match outer {
                None => Vec::new(),
                Some(OuterFace::One(w)) => vec![w],
                Some(OuterFace::Many(ws)) => ws,
            };
            Some(PlaneEmbedding::from_outer_walks(graph.clone(), rotation, &walks)?)
        }
        (None, Some(_)) => return Err(Error::Input("outer_face given without rotation".into())),
    };
    Ok(GraphInput { graph, embedding })
}

fn graph_file(g: &SimpleGraph) -> GraphFile {
    GraphFile {
        vertices: g.vertices().iter().cloned().collect(),
        edges: g.edges().iter().cloned().collect(),
        rotation: None,
        outer_face: None,
        layers_used: None,
    }
}

pub fn graph_to_json(g: &SimpleGraph) -> Value {
    serde_json::to_value(graph_file(g)).expect("serialisable")
}

pub fn embedding_to_json(e: &PlaneEmbedding) -> Value {
    let mut f = graph_file(e.graph());
    f.rotation = Some(e.rotation().clone());
    let mut walks = e.outer_faces();
    f.outer_face = match walks.len() {
        0 => None,
        1 => Some(OuterFace::One(walks.remove(0))),
        _ => Some(OuterFace::Many(walks)),
    };
    serde_json::to_value(f).expect("serialisable")
}

pub fn certificate_to_json(c: &SupportCertificate) -> Value {
    let mut v = match &c.embedding {
        Some(e) => embedding_to_json(e),
        None => graph_to_json(&c.graph),
    };
    if let Some(k) = c.layers_used {
        v["layers_used"] = json!(k);
    }
    v
}

/// Parses a bipartition of the edges of `g`.
pub fn parse_bipartition(g: &SimpleGraph, text: &str) -> Result<EdgeBipartition> {
    let f: BipartitionFile = serde_json::from_str(text)?;
    let a: Vec<_> = f.a.iter().map(|(u, v)| edge(u, v)).collect();
    let b: Vec<_> = match f.b {
        Some(b) => b.iter().map(|(u, v)| edge(u, v)).collect(),
        None => g.edges().iter().filter(|e| !a.contains(e)).cloned().collect(),
    };
    let labeling = match f.beta {
        Some(beta) => beta,
        None => {
            let a_set = a.iter().cloned().collect();
            let b_set = b.iter().cloned().collect();
            canonical_labeling(&middle_set(g, &a_set, &b_set)?)
        }
    };
    EdgeBipartition::new(g, a, b, labeling)
}

pub fn bipartition_to_json(bp: &EdgeBipartition) -> Value {
    json!({ "A": bp.a, "B": bp.b, "beta": bp.labeling })
}
