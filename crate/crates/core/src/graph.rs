//! Multigraphs, digraphs and the graph constructions used throughout the
//! crate: cones, cartesian products, hypercubes, thick two-vertex graphs,
//! contractions and the `b(G, s)` digraph.
//!
//! Graphs are immutable once built. Every combinator returns a new value and
//! vertex order is fixed at construction; all matrices and configuration
//! vectors derived from a graph are indexed in that order.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::hypercube::BetaVector;

/// Opaque vertex label, unique within its graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Self {
        VertexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_string())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

/// Dense multiplicity table shared by both graph kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    labels: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    mult: Vec<u64>,
    out: Vec<Vec<(usize, u64)>>,
}

impl Adjacency {
    fn new(labels: Vec<VertexId>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.to_string()));
            }
        }
        let n = labels.len();
        Ok(Adjacency {
            labels,
            index,
            mult: vec![0; n * n],
            out: Vec::new(),
        })
    }

    fn add(&mut self, u: usize, v: usize, m: u64) {
        let n = self.labels.len();
        self.mult[u * n + v] += m;
    }

    fn finish(mut self) -> Self {
        let n = self.labels.len();
        self.out = (0..n)
            .map(|u| {
                (0..n)
                    .filter_map(|v| {
                        let m = self.mult[u * n + v];
                        (m > 0).then_some((v, m))
                    })
                    .collect()
            })
            .collect();
        self
    }

    fn resolve(&self, v: &VertexId) -> Result<usize> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &VertexId {
        &self.labels[i]
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Multiplicity of the edge (or arc) from `u` to `v`.
    pub fn mult(&self, u: usize, v: usize) -> u64 {
        self.mult[u * self.labels.len() + v]
    }

    /// Out-neighbours of `u` with their multiplicities, in vertex order.
    pub fn out_neighbors(&self, u: usize) -> &[(usize, u64)] {
        &self.out[u]
    }

    pub fn out_degree(&self, u: usize) -> u64 {
        self.out[u].iter().map(|&(_, m)| m).sum()
    }
}

fn parse_edges(
    adj: &mut Adjacency,
    edges: &[(VertexId, VertexId, u64)],
    symmetric: bool,
) -> Result<()> {
    for (u, v, m) in edges {
        let (iu, iv) = (adj.resolve(u)?, adj.resolve(v)?);
        if iu == iv {
            return Err(Error::LoopEdge(u.to_string()));
        }
        if *m == 0 {
            return Err(Error::NonPositiveMultiplicity(u.to_string(), v.to_string()));
        }
        adj.add(iu, iv, *m);
        if symmetric {
            adj.add(iv, iu, *m);
        }
    }
    Ok(())
}

/// Loop-free undirected multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    adj: Adjacency,
}

impl Multigraph {
    /// Builds a multigraph; repeated `(u, v)` entries accumulate.
    pub fn new<V: Into<VertexId> + Clone>(
        vertices: &[V],
        edges: &[(V, V, u64)],
    ) -> Result<Self> {
        let labels = vertices.iter().cloned().map(Into::into).collect();
        let edges: Vec<_> = edges
            .iter()
            .cloned()
            .map(|(u, v, m)| (u.into(), v.into(), m))
            .collect();
        Self::from_ids(labels, &edges)
    }

    pub fn from_ids(vertices: Vec<VertexId>, edges: &[(VertexId, VertexId, u64)]) -> Result<Self> {
        let mut adj = Adjacency::new(vertices)?;
        parse_edges(&mut adj, edges, true)?;
        Ok(Multigraph { adj: adj.finish() })
    }

    fn from_fn(labels: Vec<VertexId>, mut mult: impl FnMut(usize, usize) -> u64) -> Self {
        let mut adj = Adjacency::new(labels).expect("generated labels are unique");
        let n = adj.vertex_count();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    let m = mult(u, v);
                    if m > 0 {
                        adj.add(u, v, m);
                    }
                }
            }
        }
        Multigraph { adj: adj.finish() }
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adj
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.vertex_count()
    }

    pub fn labels(&self) -> &[VertexId] {
        self.adj.labels()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.adj.index_of(v)
    }

    pub fn mult(&self, u: usize, v: usize) -> u64 {
        self.adj.mult(u, v)
    }

    pub fn degree(&self, u: usize) -> u64 {
        self.adj.out_degree(u)
    }

    pub fn neighbors(&self, u: usize) -> &[(usize, u64)] {
        self.adj.out_neighbors(u)
    }

    /// Edges `(u, v, m)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for &(v, m) in self.neighbors(u) {
                if u < v {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges().iter().map(|e| e.2).sum()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        reachable(n, 0, |u| self.neighbors(u).iter().map(|e| e.0).collect()).len() == n
    }

    /// Whether `set` (vertex indices) induces no edge.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&u| set.iter().all(|&v| self.mult(u, v) == 0))
    }
}

/// Loop-free directed multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    adj: Adjacency,
}

impl Digraph {
    pub fn new<V: Into<VertexId> + Clone>(vertices: &[V], arcs: &[(V, V, u64)]) -> Result<Self> {
        let labels = vertices.iter().cloned().map(Into::into).collect();
        let arcs: Vec<_> = arcs
            .iter()
            .cloned()
            .map(|(u, v, m)| (u.into(), v.into(), m))
            .collect();
        Self::from_ids(labels, &arcs)
    }

    pub fn from_ids(vertices: Vec<VertexId>, arcs: &[(VertexId, VertexId, u64)]) -> Result<Self> {
        let mut adj = Adjacency::new(vertices)?;
        parse_edges(&mut adj, arcs, false)?;
        Ok(Digraph { adj: adj.finish() })
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adj
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.vertex_count()
    }

    pub fn labels(&self) -> &[VertexId] {
        self.adj.labels()
    }

    pub fn mult(&self, u: usize, v: usize) -> u64 {
        self.adj.mult(u, v)
    }

    pub fn out_degree(&self, u: usize) -> u64 {
        self.adj.out_degree(u)
    }

    /// Arcs `(u, v, m)` in row-major order.
    pub fn arcs(&self) -> Vec<(usize, usize, u64)> {
        (0..self.vertex_count())
            .flat_map(|u| self.adj.out_neighbors(u).iter().map(move |&(v, m)| (u, v, m)))
            .collect()
    }
}

/// Either kind of graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    Undirected(Multigraph),
    Directed(Digraph),
}

impl Graph {
    pub fn adjacency(&self) -> &Adjacency {
        match self {
            Graph::Undirected(g) => g.adjacency(),
            Graph::Directed(g) => g.adjacency(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, Graph::Directed(_))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency().vertex_count()
    }

    pub fn labels(&self) -> &[VertexId] {
        self.adjacency().labels()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.adjacency().index_of(v)
    }

    /// `m_{(u,v)}`; symmetric for undirected graphs.
    pub fn mult(&self, u: usize, v: usize) -> u64 {
        self.adjacency().mult(u, v)
    }

    pub fn out_degree(&self, u: usize) -> u64 {
        self.adjacency().out_degree(u)
    }

    pub fn as_undirected(&self) -> Option<&Multigraph> {
        match self {
            Graph::Undirected(g) => Some(g),
            Graph::Directed(_) => None,
        }
    }
}

impl From<Multigraph> for Graph {
    fn from(g: Multigraph) -> Self {
        Graph::Undirected(g)
    }
}

impl From<Digraph> for Graph {
    fn from(g: Digraph) -> Self {
        Graph::Directed(g)
    }
}

fn reachable(n: usize, start: usize, next: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in next(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    order
}

/// A graph with a designated sink; `nonsink` lists the remaining vertices in
/// graph order and indexes every configuration vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinkedGraph {
    graph: Graph,
    sink: usize,
    nonsink: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl SinkedGraph {
    /// For digraphs the sink must be global: every vertex reaches it.
    pub fn new(graph: impl Into<Graph>, sink: &VertexId) -> Result<Self> {
        let graph = graph.into();
        let s = graph
            .index_of(sink)
            .ok_or_else(|| Error::UnknownVertex(sink.to_string()))?;
        Self::with_sink_index(graph, s)
    }

    pub fn with_sink_index(graph: Graph, sink: usize) -> Result<Self> {
        let n = graph.vertex_count();
        if sink >= n {
            return Err(Error::OutOfRange(format!("sink index {sink}")));
        }
        if let Graph::Directed(d) = &graph {
            // Reverse search from the sink.
            let reach = reachable(n, sink, |v| (0..n).filter(|&u| d.mult(u, v) > 0).collect());
            if reach.len() != n {
                return Err(Error::NoGlobalSink(graph.labels()[sink].to_string()));
            }
        }
        let nonsink: Vec<usize> = (0..n).filter(|&v| v != sink).collect();
        let mut position = vec![None; n];
        for (i, &v) in nonsink.iter().enumerate() {
            position[v] = Some(i);
        }
        Ok(SinkedGraph {
            graph,
            sink,
            nonsink,
            position,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_directed(&self) -> bool {
        self.graph.is_directed()
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn sink_label(&self) -> &VertexId {
        &self.graph.labels()[self.sink]
    }

    /// Non-sink vertices (graph indices) in configuration order.
    pub fn nonsink(&self) -> &[usize] {
        &self.nonsink
    }

    pub fn nonsink_labels(&self) -> Vec<VertexId> {
        self.nonsink
            .iter()
            .map(|&v| self.graph.labels()[v].clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.nonsink.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nonsink.is_empty()
    }

    /// Configuration position of a graph vertex, `None` for the sink.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.position[v]
    }

    /// Out-degree `d⁺(v)` of each non-sink vertex, in configuration order.
    pub fn out_degrees(&self) -> Vec<u64> {
        self.nonsink.iter().map(|&v| self.graph.out_degree(v)).collect()
    }

    /// Sink-adjacency vector `b_v = m_{(v,s)}`.
    pub fn sink_adjacency(&self) -> Vec<u64> {
        self.nonsink
            .iter()
            .map(|&v| self.graph.mult(v, self.sink))
            .collect()
    }
}

fn fresh_label(existing: &Adjacency, base: &str) -> VertexId {
    let mut label = base.to_string();
    while existing.index_of(&VertexId::new(label.as_str())).is_some() {
        label.push('\'');
    }
    VertexId::new(label)
}

/// `c_n(G)`: adds a sink `s` joined to every vertex by `n` parallel edges.
pub fn cone(g: &Multigraph, n: u64) -> Result<SinkedGraph> {
    if n == 0 {
        return Err(Error::OutOfRange("cone multiplicity must be positive".into()));
    }
    let sink = fresh_label(g.adjacency(), "s");
    let k = g.vertex_count();
    let mut labels = g.labels().to_vec();
    labels.push(sink);
    let graph = Multigraph::from_fn(labels, |u, v| {
        if u == k || v == k {
            n
        } else {
            g.mult(u, v)
        }
    });
    SinkedGraph::with_sink_index(graph.into(), k)
}

/// Cartesian (box) product. Vertex `(u_i, v_j)` sits at index
/// `i + j·|V(G)|`, so the first factor varies fastest.
pub fn cartesian_product(g: &Multigraph, h: &Multigraph) -> Multigraph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut labels = Vec::with_capacity(ng * nh);
    for j in 0..nh {
        for i in 0..ng {
            labels.push(VertexId::new(format!("({},{})", g.labels()[i], h.labels()[j])));
        }
    }
    Multigraph::from_fn(labels, |p, q| {
        let (i1, j1) = (p % ng, p / ng);
        let (i2, j2) = (q % ng, q / ng);
        if i1 == i2 {
            h.mult(j1, j2)
        } else if j1 == j2 {
            g.mult(i1, i2)
        } else {
            0
        }
    })
}

/// Label of the hypercube vertex with index `a` (bit `i` is coordinate `i+1`).
pub fn cube_label(d: usize, a: usize) -> VertexId {
    let bits: String = (0..d)
        .map(|i| if a >> i & 1 == 1 { '1' } else { '0' })
        .collect();
    VertexId::new(format!("v{bits}"))
}

/// `Q_d`. Vertex index `a` encodes the tuple with coordinate 1 as the least
/// significant bit, so coordinate 1 varies fastest.
pub fn hypercube(d: usize) -> Multigraph {
    let n = 1usize << d;
    let labels = (0..n).map(|a| cube_label(d, a)).collect();
    Multigraph::from_fn(labels, |a, b| u64::from((a ^ b).count_ones() == 1))
}

/// Induced subcube on `{v_a : supp(a) ⊆ supp(β)}`, in increasing index order.
pub fn q_beta_subgraph(beta: &BetaVector) -> Multigraph {
    let d = beta.dim();
    let mask = beta.mask();
    let members: Vec<usize> = (0..1usize << d).filter(|a| a & !mask == 0).collect();
    let labels = members.iter().map(|&a| cube_label(d, a)).collect();
    Multigraph::from_fn(labels, |p, q| {
        u64::from((members[p] ^ members[q]).count_ones() == 1)
    })
}

/// `c(K₂(r,t))`: sink `s` plus `v1`, `v2`, each with one edge to the sink.
/// For `r = t` this is the undirected cone over an `r`-fold edge; otherwise a
/// digraph with arcs `v1→v2` (×r), `v2→v1` (×t), `v1→s`, `v2→s`.
pub fn k2_thick(r: u64, t: u64) -> Result<SinkedGraph> {
    if r == 0 || t == 0 {
        return Err(Error::OutOfRange("K2(r,t) needs r, t >= 1".into()));
    }
    if r == t {
        let g = Multigraph::new(&["v1", "v2"], &[("v1", "v2", r)])?;
        return cone(&g, 1);
    }
    let d = Digraph::new(
        &["v1", "v2", "s"],
        &[("v1", "v2", r), ("v2", "v1", t), ("v1", "s", 1), ("v2", "s", 1)],
    )?;
    SinkedGraph::new(d, &VertexId::from("s"))
}

/// `b(G, s)`: non-sink edges become opposite arc pairs, edges at `s` point
/// into `s`.
pub fn b_digraph(g: &Multigraph, s: &VertexId) -> Result<SinkedGraph> {
    let si = g
        .index_of(s)
        .ok_or_else(|| Error::UnknownVertex(s.to_string()))?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let mut adj = Adjacency::new(g.labels().to_vec())?;
    for (u, v, m) in g.edges() {
        if u != si {
            adj.add(u, v, m);
        }
        if v != si {
            adj.add(v, u, m);
        }
    }
    let d = Digraph { adj: adj.finish() };
    debug_assert_eq!(d.out_degree(si), 0);
    SinkedGraph::with_sink_index(d.into(), si)
}

/// Merges the vertices of `set` into one vertex labelled `label`, placed at
/// the position of the first member in graph order. Edges inside `set` are
/// dropped.
pub fn contract_named(g: &Multigraph, set: &[VertexId], label: VertexId) -> Result<Multigraph> {
    if set.is_empty() {
        return Err(Error::EmptyContractionSet);
    }
    let n = g.vertex_count();
    let mut merged = vec![false; n];
    for v in set {
        merged[g.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?] = true;
    }
    let first = merged.iter().position(|&m| m).expect("set is nonempty");
    // Old index -> new index.
    let mut new_index = vec![0usize; n];
    let mut labels = Vec::new();
    for v in 0..n {
        if merged[v] && v != first {
            continue;
        }
        new_index[v] = labels.len();
        labels.push(if v == first {
            label.clone()
        } else {
            g.labels()[v].clone()
        });
    }
    for v in 0..n {
        if merged[v] {
            new_index[v] = new_index[first];
        }
    }
    let mut adj = Adjacency::new(labels)?;
    for (u, v, m) in g.edges() {
        let (a, b) = (new_index[u], new_index[v]);
        if a != b {
            adj.add(a, b, m);
            adj.add(b, a, m);
        }
    }
    Ok(Multigraph { adj: adj.finish() })
}

/// [`contract_named`] with the member labels joined by `+`.
pub fn contract(g: &Multigraph, set: &[VertexId]) -> Result<Multigraph> {
    let label = set
        .iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join("+");
    contract_named(g, set, VertexId::new(label))
}

/// Complete graph `K_n` on labels `0..n`.
pub fn complete_graph(n: usize) -> Multigraph {
    let labels = (0..n).map(|i| VertexId::new(format!("k{i}"))).collect();
    Multigraph::from_fn(labels, |_, _| 1)
}

/// Cycle `C_n` on labels `u1..un` with edges `u_i u_{i+1}`.
pub fn cycle_graph(n: usize) -> Multigraph {
    let labels = (1..=n).map(|i| VertexId::new(format!("u{i}"))).collect();
    Multigraph::from_fn(labels, |a, b| u64::from((a + 1) % n == b || (b + 1) % n == a))
}

/// Path `P_n` on labels `p1..pn`.
pub fn path_graph(n: usize) -> Multigraph {
    let labels = (1..=n).map(|i| VertexId::new(format!("p{i}"))).collect();
    Multigraph::from_fn(labels, |a, b| u64::from(a.abs_diff(b) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg_sum(g: &Multigraph) -> u64 {
        (0..g.vertex_count()).map(|u| g.degree(u)).sum()
    }

    #[test]
    fn builds_double_edge() {
        let g = Multigraph::new(&["a", "b"], &[("a", "b", 2)]).unwrap();
        assert_eq!(g.mult(0, 1), 2);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn repeated_edges_accumulate() {
        let g = Multigraph::new(&["a", "b", "c"], &[("a", "b", 1), ("b", "a", 2), ("b", "c", 1)])
            .unwrap();
        assert_eq!(g.mult(0, 1), 3);
        assert_eq!(g.mult(1, 0), 3);
        assert_eq!(deg_sum(&g), 2 * g.edge_count());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Multigraph::new(&["a", "b"], &[("a", "a", 1)]),
            Err(Error::LoopEdge("a".into()))
        );
        assert_eq!(
            Multigraph::new(&["a", "b"], &[("a", "c", 1)]),
            Err(Error::UnknownVertex("c".into()))
        );
        assert_eq!(
            Multigraph::new(&["a", "b"], &[("a", "b", 0)]),
            Err(Error::NonPositiveMultiplicity("a".into(), "b".into()))
        );
        assert!(matches!(
            Multigraph::new(&["a", "a"], &[]),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn cone_of_k2_is_triangle() {
        let c = cone(&complete_graph(2), 1).unwrap();
        assert_eq!(c.sink(), 2);
        assert_eq!(c.out_degrees(), vec![2, 2]);
        assert_eq!(c.graph().out_degree(2), 2);
    }

    #[test]
    fn cone_of_q2_is_wheel() {
        let c = cone(&hypercube(2), 1).unwrap();
        assert_eq!(c.out_degrees(), vec![3; 4]);
        assert_eq!(c.graph().out_degree(c.sink()), 4);
    }

    #[test]
    fn triple_cone_of_q1() {
        let c = cone(&hypercube(1), 3).unwrap();
        assert_eq!(c.out_degrees(), vec![4, 4]);
        assert_eq!(c.sink_adjacency(), vec![3, 3]);
    }

    #[test]
    fn cone_sink_label_is_fresh() {
        let g = Multigraph::new(&["s", "t"], &[("s", "t", 1)]).unwrap();
        let c = cone(&g, 1).unwrap();
        assert_eq!(c.sink_label().as_str(), "s'");
    }

    #[test]
    fn product_of_k2_is_c4() {
        let p = cartesian_product(&complete_graph(2), &complete_graph(2));
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 4);
        assert!((0..4).all(|u| p.degree(u) == 2));
        assert_eq!(p, {
            let q = hypercube(2);
            Multigraph::from_ids(p.labels().to_vec(), &relabel_edges(&q, p.labels())).unwrap()
        });
    }

    fn relabel_edges(g: &Multigraph, labels: &[VertexId]) -> Vec<(VertexId, VertexId, u64)> {
        g.edges()
            .into_iter()
            .map(|(u, v, m)| (labels[u].clone(), labels[v].clone(), m))
            .collect()
    }

    #[test]
    fn prism_c5_k2() {
        let p = cartesian_product(&cycle_graph(5), &complete_graph(2));
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|u| p.degree(u) == 3));
        // (u1,v1) at index 0 is joined to (u1,v2) at index 5.
        assert_eq!(p.mult(0, 5), 1);
        assert_eq!(p.labels()[5].as_str(), "(u1,k1)");
    }

    #[test]
    fn product_with_point_is_identity() {
        let point = Multigraph::new(&["x"], &[]).unwrap();
        let g = cycle_graph(5);
        let p = cartesian_product(&g, &point);
        assert_eq!(p.edges(), g.edges());
    }

    #[test]
    fn hypercube_counts() {
        let q0 = hypercube(0);
        assert_eq!(q0.vertex_count(), 1);
        assert_eq!(q0.edge_count(), 0);
        let q3 = hypercube(3);
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!((0..8).all(|u| q3.degree(u) == 3));
        let labels: Vec<_> = hypercube(2).labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["v00", "v10", "v01", "v11"]);
    }

    #[test]
    fn hypercube_is_iterated_product() {
        let mut g = hypercube(0);
        for d in 1..=4 {
            g = cartesian_product(&g, &complete_graph(2));
            let q = hypercube(d);
            assert_eq!(g.edges(), q.edges(), "d = {d}");
        }
    }

    #[test]
    fn q_beta_examples() {
        let b = BetaVector::from_bits(&[1, 0, 1]).unwrap();
        let q = q_beta_subgraph(&b);
        let labels: Vec<_> = q.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["v000", "v100", "v001", "v101"]);
        assert_eq!(q.edges(), hypercube(2).edges());

        let zero = q_beta_subgraph(&BetaVector::zero(3));
        assert_eq!(zero.vertex_count(), 1);
        let full = q_beta_subgraph(&BetaVector::ones(3));
        assert_eq!(full, hypercube(3));
    }

    #[test]
    fn thick_k2() {
        let g = k2_thick(1, 1).unwrap();
        assert!(!g.is_directed());
        assert_eq!(g.out_degrees(), vec![2, 2]);
        let g = k2_thick(2, 3).unwrap();
        assert!(g.is_directed());
        assert_eq!(g.out_degrees(), vec![3, 4]);
        assert_eq!(g.graph().out_degree(g.sink()), 0);
    }

    #[test]
    fn b_digraph_of_triangle() {
        let c = cone(&complete_graph(2), 1).unwrap();
        let g = c.graph().as_undirected().unwrap();
        let b = b_digraph(g, c.sink_label()).unwrap();
        let Graph::Directed(d) = b.graph() else { panic!() };
        assert_eq!(d.arcs(), vec![(0, 1, 1), (0, 2, 1), (1, 0, 1), (1, 2, 1)]);
        assert_eq!(d.out_degree(b.sink()), 0);
    }

    #[test]
    fn b_digraph_out_degrees_match_cone() {
        let g = cycle_graph(4);
        let c = cone(&g, 2).unwrap();
        let b = b_digraph(c.graph().as_undirected().unwrap(), c.sink_label()).unwrap();
        for v in 0..4 {
            assert_eq!(b.graph().out_degree(v), g.degree(v) + 2);
        }
    }

    #[test]
    fn b_digraph_rejects_disconnected() {
        let g = Multigraph::new(&["a", "b", "c"], &[("a", "b", 1)]).unwrap();
        assert_eq!(b_digraph(&g, &"a".into()), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn digraph_without_global_sink_rejected() {
        let d = Digraph::new(&["a", "b", "s"], &[("a", "b", 1), ("b", "a", 1), ("a", "s", 1)])
            .unwrap();
        assert!(SinkedGraph::new(d, &"s".into()).is_ok());
        let d = Digraph::new(&["a", "b", "s"], &[("a", "b", 1), ("b", "a", 1)]).unwrap();
        assert_eq!(
            SinkedGraph::new(d, &"s".into()),
            Err(Error::NoGlobalSink("s".into()))
        );
    }

    #[test]
    fn contraction_cases() {
        let g = cycle_graph(5);
        let one = contract(&g, &["u3".into()]).unwrap();
        assert_eq!(one.edges(), g.edges());
        let all: Vec<VertexId> = g.labels().to_vec();
        let point = contract(&g, &all).unwrap();
        assert_eq!(point.vertex_count(), 1);
        assert_eq!(point.edge_count(), 0);
        assert_eq!(contract(&g, &[]), Err(Error::EmptyContractionSet));
    }

    #[test]
    fn contraction_preserves_outside_multiplicity() {
        let g = complete_graph(5);
        let set: Vec<VertexId> = vec!["k1".into(), "k3".into()];
        let c = contract(&g, &set).unwrap();
        let m = c.index_of(&"k1+k3".into()).unwrap();
        for v in ["k0", "k2", "k4"] {
            let i = c.index_of(&v.into()).unwrap();
            assert_eq!(c.mult(m, i), 2);
        }
    }
}
