//! JSON and text formats for graphs, configurations, matrices, homs and
//! group structures.
//!
//! Everything emitted here goes through [`serde_json::Value`], whose maps are
//! key-sorted, so identical inputs always produce identical bytes. Big
//! integers are written as decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Multigraph, SinkedGraph, VertexId};
use crate::linalg::{GroupStructure, IntMatrix};
use crate::morphism::{HomKind, VertexMap};

pub const GRAPH_FORMAT: &str = "sandpile-graph-v1";

/// Serializes big integers as decimal strings.
pub fn big_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn bigs(v: &[BigInt]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default)]
    format: Option<String>,
    directed: bool,
    vertices: Vec<String>,
    edges: Vec<(String, String, u64)>,
    #[serde(default)]
    sink: Option<String>,
}

/// A graph file: the graph plus its optional designated sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub sink: Option<VertexId>,
}

impl GraphFile {
    /// The sinked graph, with `sink` overriding the file's own sink.
    pub fn sinked(&self, sink: Option<&VertexId>) -> Result<SinkedGraph> {
        let s = sink
            .or(self.sink.as_ref())
            .ok_or_else(|| Error::PreconditionViolated("no sink given".into()))?;
        SinkedGraph::new(self.graph.clone(), s)
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let doc: GraphDoc = parse_json(text)?;
    if let Some(f) = &doc.format {
        if f != GRAPH_FORMAT {
            return Err(Error::Parse(format!("unsupported graph format `{f}`")));
        }
    }
    let vertices: Vec<VertexId> = doc.vertices.into_iter().map(VertexId::new).collect();
    let edges: Vec<(VertexId, VertexId, u64)> = doc
        .edges
        .into_iter()
        .map(|(u, v, m)| (VertexId::new(u), VertexId::new(v), m))
        .collect();
    let graph: Graph = if doc.directed {
        Digraph::from_ids(vertices, &edges)?.into()
    } else {
        Multigraph::from_ids(vertices, &edges)?.into()
    };
    let sink = doc.sink.map(VertexId::new);
    if let Some(s) = &sink {
        if graph.index_of(s).is_none() {
            return Err(Error::UnknownVertex(s.to_string()));
        }
    }
    Ok(GraphFile { graph, sink })
}

pub fn graph_json(graph: &Graph, sink: Option<&VertexId>) -> Value {
    let labels = graph.labels();
    let edges: Vec<Value> = match graph {
        Graph::Undirected(g) => g.edges(),
        Graph::Directed(d) => d.arcs(),
    }
    .into_iter()
    .map(|(u, v, m)| json!([labels[u].as_str(), labels[v].as_str(), m]))
    .collect();
    json!({
        "format": GRAPH_FORMAT,
        "directed": graph.is_directed(),
        "vertices": labels.iter().map(VertexId::as_str).collect::<Vec<_>>(),
        "edges": edges,
        "sink": sink.map(VertexId::as_str),
    })
}

/// A configuration: a JSON integer array, or whitespace-separated integers.
pub fn parse_config(text: &str) -> Result<Vec<i64>> {
    let t = text.trim();
    if t.starts_with('[') {
        return parse_json(t);
    }
    t.split_whitespace()
        .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad integer `{x}`"))))
        .collect()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

fn big_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer entry {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`"))),
        _ => Err(Error::Parse(format!("bad matrix entry {v}"))),
    }
}

/// A matrix in JSON form `{"rows", "cols", "entries"}` or as plain text rows.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    if !text.trim_start().starts_with('{') {
        return IntMatrix::parse_text(text);
    }
    let doc: MatrixDoc = parse_json(text)?;
    if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
        return Err(Error::DimensionMismatch(format!(
            "declared {}x{} does not match the entries",
            doc.rows, doc.cols
        )));
    }
    let rows: Vec<Vec<BigInt>> = doc
        .entries
        .iter()
        .map(|r| r.iter().map(big_from_value).collect())
        .collect::<Result<_>>()?;
    if doc.rows == 0 {
        return Ok(IntMatrix::zeros(0, doc.cols));
    }
    IntMatrix::from_rows(&rows)
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows()).map(|i| bigs(m.row(i))).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn group_json(g: &GroupStructure) -> Value {
    json!({
        "invariant_factors": bigs(&g.invariant_factors),
        "elementary_divisors": bigs(&g.elementary_divisors),
        "order": g.order.to_string(),
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomDoc {
    map: BTreeMap<String, String>,
    #[serde(rename = "subset_V")]
    subset_v: Vec<String>,
    kind: String,
}

/// A parsed hom file, ready for validation.
#[derive(Debug, Clone)]
pub struct HomFile {
    pub map: VertexMap,
    pub subset: Vec<VertexId>,
    pub kind: HomKind,
}

pub fn parse_hom(text: &str, g: &Graph, h: &Graph) -> Result<HomFile> {
    let doc: HomDoc = parse_json(text)?;
    let pairs: Vec<(VertexId, VertexId)> = doc
        .map
        .into_iter()
        .map(|(u, x)| (VertexId::new(u), VertexId::new(x)))
        .collect();
    Ok(HomFile {
        map: VertexMap::new(g.clone(), h.clone(), &pairs)?,
        subset: doc.subset_v.into_iter().map(VertexId::new).collect(),
        kind: doc.kind.parse()?,
    })
}

pub fn hom_json(map: &VertexMap, subset: &[VertexId], kind: HomKind) -> Value {
    let m: BTreeMap<String, String> = map
        .pairs()
        .into_iter()
        .map(|(u, x)| (u.to_string(), x.to_string()))
        .collect();
    json!({
        "map": m,
        "subset_V": subset.iter().map(VertexId::as_str).collect::<Vec<_>>(),
        "kind": kind.as_str(),
    })
}
