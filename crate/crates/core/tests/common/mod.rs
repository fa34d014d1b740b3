//! Independent oracles shared by the integration and acceptance tests. None
//! of these call into the library's dynamics or linear algebra.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use sandpile::{Multigraph, VertexId};

/// A symmetric multiplicity matrix; the last vertex is the sink.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mults(pub Vec<Vec<u64>>);

impl Mults {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if self.0[u][v] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn labels(&self) -> Vec<String> {
        let n = self.len();
        (0..n).map(|i| if i + 1 == n { "s".to_string() } else { format!("x{i}") }).collect()
    }

    pub fn to_graph(&self) -> Multigraph {
        let labels = self.labels();
        let mut edges = Vec::new();
        for u in 0..self.len() {
            for v in u + 1..self.len() {
                if self.0[u][v] > 0 {
                    edges.push((labels[u].clone(), labels[v].clone(), self.0[u][v]));
                }
            }
        }
        Multigraph::new(&labels, &edges).unwrap()
    }

    pub fn sink(&self) -> VertexId {
        VertexId::from("s")
    }

    /// Canonical form under permutations of the non-sink vertices.
    pub fn canonical(&self) -> Mults {
        let k = self.len() - 1;
        let mut best: Option<Mults> = None;
        for p in permutations(k) {
            let mut m = self.0.clone();
            for u in 0..=k {
                for v in 0..=k {
                    let (pu, pv) = (if u < k { p[u] } else { k }, if v < k { p[v] } else { k });
                    m[pu][pv] = self.0[u][v];
                }
            }
            let m = Mults(m);
            if best.as_ref().is_none_or(|b| m < *b) {
                best = Some(m);
            }
        }
        best.unwrap()
    }
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Every connected multigraph on `k` non-sink vertices plus a sink with
/// multiplicities at most `max_mult`, up to relabelling the non-sink vertices.
pub fn all_sinked_multigraphs(k: usize, max_mult: u64) -> Vec<Mults> {
    let n = k + 1;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = (max_mult + 1).pow(pairs.len() as u32);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = vec![vec![0u64; n]; n];
        let mut c = code;
        for &(u, v) in &pairs {
            let x = c % (max_mult + 1);
            c /= max_mult + 1;
            m[u][v] = x;
            m[v][u] = x;
        }
        let m = Mults(m);
        if !m.is_connected() {
            continue;
        }
        let canon = m.canonical();
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out
}

/// Multiplicities of an undirected sinked graph, with the sink moved last.
pub fn mults_of(g: &sandpile::SinkedGraph) -> Mults {
    let mut order: Vec<usize> = g.nonsink().to_vec();
    order.push(g.sink());
    let gr = g.graph();
    Mults(order.iter().map(|&u| order.iter().map(|&v| gr.mult(u, v)).collect()).collect())
}

pub fn random_connected(rng: &mut impl Rng, n: usize, max_mult: u64) -> Mults {
    loop {
        let mut m = vec![vec![0u64; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                let x = rng.gen_range(0..=max_mult);
                m[u][v] = x;
                m[v][u] = x;
            }
        }
        let m = Mults(m);
        if m.is_connected() {
            return m;
        }
    }
}

/// `G` plus a sink joined to every vertex by `n` edges.
pub fn cone_mults(g: &Mults, n: u64) -> Mults {
    let k = g.len();
    let mut m = vec![vec![0u64; k + 1]; k + 1];
    for u in 0..k {
        for v in 0..k {
            m[u][v] = g.0[u][v];
        }
        m[u][k] = n;
        m[k][u] = n;
    }
    Mults(m)
}

/// Toppling one vertex at a time, always the lowest unstable index.
#[derive(Debug, Clone)]
pub struct Naive {
    pub deg: Vec<i64>,
    pub adj: Vec<Vec<i64>>,
    /// Edges from each vertex to the sink.
    pub to_sink: Vec<i64>,
}

impl Naive {
    pub fn new(m: &Mults) -> Self {
        let k = m.len() - 1;
        let deg = (0..k).map(|u| m.0[u].iter().sum::<u64>() as i64).collect();
        let adj = (0..k).map(|u| (0..k).map(|v| m.0[u][v] as i64).collect()).collect();
        let to_sink = (0..k).map(|u| m.0[u][k] as i64).collect();
        Naive { deg, adj, to_sink }
    }

    pub fn is_stable(&self, c: &[i64]) -> bool {
        c.iter().zip(&self.deg).all(|(x, d)| 0 <= *x && x < d)
    }

    /// Dhar's test: adding the sink edges fires every vertex exactly once
    /// and gives `c` back.
    pub fn burns(&self, c: &[i64]) -> bool {
        if !self.is_stable(c) {
            return false;
        }
        let mut x: Vec<i64> = c.iter().zip(&self.to_sink).map(|(a, b)| a + b).collect();
        let mut fired = vec![0; c.len()];
        while let Some(u) = (0..x.len()).find(|&u| x[u] >= self.deg[u]) {
            fired[u] += 1;
            x[u] -= self.deg[u];
            for v in 0..x.len() {
                x[v] += self.adj[u][v];
            }
        }
        x == c && fired.iter().all(|&f| f == 1)
    }

    pub fn stabilize(&self, c: &[i64]) -> Vec<i64> {
        let mut c = c.to_vec();
        while let Some(u) = (0..c.len()).find(|&u| c[u] >= self.deg[u]) {
            c[u] -= self.deg[u];
            for v in 0..c.len() {
                c[v] += self.adj[u][v];
            }
        }
        c
    }

    /// The recurrent set as the closure of `c_max` under adding one chip
    /// and stabilizing.
    pub fn orbit(&self) -> HashSet<Vec<i64>> {
        let start: Vec<i64> = self.deg.iter().map(|d| d - 1).collect();
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for v in 0..c.len() {
                let mut next = c.clone();
                next[v] += 1;
                let s = self.stabilize(&next);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        seen
    }

    /// Every stable nonnegative configuration.
    pub fn stable_configs(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &d in &self.deg {
            out = out
                .into_iter()
                .flat_map(|c: Vec<i64>| {
                    (0..d).map(move |x| {
                        let mut c = c.clone();
                        c.push(x);
                        c
                    })
                })
                .collect();
        }
        out
    }
}

/// Number of spanning trees, by trying every set of `|V|−1` edges (parallel
/// edges are distinct). Meant for at most a couple of dozen edges.
pub fn spanning_trees(m: &Mults) -> u64 {
    let n = m.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for _ in 0..m.0[u][v] {
                edges.push((u, v));
            }
        }
    }
    assert!(edges.len() <= 24, "too many edges for brute force");
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut count = 0;
    for mask in 0u32..1 << edges.len() {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let acyclic = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).all(|(_, &(u, v))| {
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            parent[a] = b;
            a != b
        });
        if acyclic {
            count += 1;
        }
    }
    count
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a = rows.to_vec();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn is_unimodular(rows: &[Vec<BigInt>]) -> bool {
    bareiss(rows).abs() == BigInt::from(1)
}

pub fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (n, m, p) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| (0..p).map(|j| (0..m).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}
