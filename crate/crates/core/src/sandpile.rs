//! Sandpile dynamics and the group law on recurrent configurations.
//!
//! A [`Sandpile`] wraps a sinked graph together with its reduced Laplacian and
//! a Smith-form presentation of `Z^Ṽ / Im L(G,s)ᵗ`. Configurations are plain
//! `i64` vectors in configuration order (see [`SinkedGraph::nonsink`]);
//! recurrent ones are wrapped in [`RecurrentConfig`], which can only be
//! obtained through a recurrence certificate.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::SinkedGraph;
use crate::linalg::{to_big, Cokernel, GroupStructure, IntMatrix};

/// Default bound on the number of configurations enumerated by
/// [`Sandpile::recurrents`].
pub const ORBIT_GUARD: usize = 1_000_000;

/// Result of stabilizing a chip vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub stable: Vec<i64>,
    /// Number of times each vertex toppled.
    pub firings: Vec<i64>,
}

/// How a configuration was shown to be recurrent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Adding the sink-adjacency vector fires every vertex once, in this
    /// order (configuration positions), and returns the configuration.
    Burning(Vec<usize>),
    /// Stabilization of a configuration dominating `c_max`.
    Reachable,
    /// Adding the (certified) identity and stabilizing returns it unchanged.
    IdentityFixed,
}

/// A configuration known to be recurrent on a specific graph.
#[derive(Debug, Clone)]
pub struct RecurrentConfig {
    values: Vec<i64>,
    certificate: Certificate,
    graph: u64,
}

impl RecurrentConfig {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

impl PartialEq for RecurrentConfig {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.values == other.values
    }
}

impl Eq for RecurrentConfig {}

impl Hash for RecurrentConfig {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

/// A sinked graph with its sandpile group.
#[derive(Debug)]
pub struct Sandpile {
    graph: Arc<SinkedGraph>,
    laplacian: IntMatrix,
    cokernel: Cokernel,
    structure: GroupStructure,
    degree: Vec<i64>,
    /// Non-sink out-neighbours `(position, multiplicity)` per position.
    spread: Vec<Vec<(usize, i64)>>,
    sink_adjacency: Vec<i64>,
    fingerprint: u64,
    identity: OnceLock<RecurrentConfig>,
}

impl Sandpile {
    /// Fails with `SingularReducedLaplacian` when the sink is not reachable
    /// from every vertex (a disconnected undirected graph, for instance).
    pub fn new(graph: impl Into<Arc<SinkedGraph>>) -> Result<Self> {
        let graph = graph.into();
        let laplacian = crate::linalg::reduced_laplacian(&graph)?;
        let cokernel = Cokernel::new(&laplacian);
        let structure = cokernel.structure()?;
        let g = graph.graph();
        let degree = graph.out_degrees().iter().map(|&d| d as i64).collect();
        let spread = graph
            .nonsink()
            .iter()
            .map(|&u| {
                g.adjacency()
                    .out_neighbors(u)
                    .iter()
                    .filter_map(|&(v, m)| graph.position(v).map(|p| (p, m as i64)))
                    .collect()
            })
            .collect();
        let sink_adjacency = graph.sink_adjacency().iter().map(|&b| b as i64).collect();
        let mut h = DefaultHasher::new();
        g.labels().hash(&mut h);
        graph.sink().hash(&mut h);
        let n = g.vertex_count();
        for u in 0..n {
            for v in 0..n {
                g.mult(u, v).hash(&mut h);
            }
        }
        Ok(Sandpile {
            graph,
            laplacian,
            cokernel,
            structure,
            degree,
            spread,
            sink_adjacency,
            fingerprint: h.finish(),
            identity: OnceLock::new(),
        })
    }

    pub fn graph(&self) -> &SinkedGraph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<SinkedGraph> {
        Arc::clone(&self.graph)
    }

    /// Number of non-sink vertices.
    pub fn len(&self) -> usize {
        self.degree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degree.is_empty()
    }

    pub fn reduced_laplacian(&self) -> &IntMatrix {
        &self.laplacian
    }

    pub fn cokernel(&self) -> &Cokernel {
        &self.cokernel
    }

    pub fn structure(&self) -> &GroupStructure {
        &self.structure
    }

    /// Group order as a machine integer, when it fits.
    pub fn order(&self) -> Option<u64> {
        self.structure.order.to_u64()
    }

    pub fn out_degrees(&self) -> &[i64] {
        &self.degree
    }

    pub fn sink_adjacency(&self) -> &[i64] {
        &self.sink_adjacency
    }

    /// `c_max(v) = d⁺(v) − 1`.
    pub fn max_stable(&self) -> Vec<i64> {
        self.degree.iter().map(|d| d - 1).collect()
    }

    /// The toppling vector `Δ_u` for configuration position `u`.
    pub fn toppling_vector(&self, u: usize) -> Vec<i64> {
        let mut out = vec![0; self.len()];
        out[u] = self.degree[u];
        for &(v, m) in &self.spread[u] {
            out[v] -= m;
        }
        out
    }

    fn check_len(&self, c: &[i64]) -> Result<()> {
        if c.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: c.len(),
            });
        }
        Ok(())
    }

    /// Whether `c` was certified on this sandpile's graph.
    pub fn owns(&self, c: &RecurrentConfig) -> bool {
        c.graph == self.fingerprint
    }

    fn check_owner(&self, c: &RecurrentConfig) -> Result<()> {
        if !self.owns(c) {
            return Err(Error::GraphMismatch);
        }
        Ok(())
    }

    pub fn is_stable(&self, c: &[i64]) -> bool {
        c.iter().zip(&self.degree).all(|(x, d)| x < d)
    }

    fn topple(&self, c: &mut [i64], u: usize, times: i64) {
        c[u] -= times * self.degree[u];
        for &(v, m) in &self.spread[u] {
            c[v] += times * m;
        }
    }

    /// Topples until every vertex holds fewer chips than its out-degree.
    /// Negative entries are allowed and never topple.
    pub fn stabilize(&self, c: &[i64]) -> Result<Stabilization> {
        self.stabilize_tracked(c).map(|(s, _)| s)
    }

    /// As [`stabilize`](Self::stabilize), also returning vertices in the
    /// order they first toppled.
    fn stabilize_tracked(&self, c: &[i64]) -> Result<(Stabilization, Vec<usize>)> {
        self.check_len(c)?;
        let n = self.len();
        let mut stable = c.to_vec();
        let mut firings = vec![0i64; n];
        let mut order = Vec::new();
        let mut queued = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&u| stable[u] >= self.degree[u]).collect();
        for &u in &queue {
            queued[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            queued[u] = false;
            let times = stable[u] / self.degree[u];
            if times <= 0 {
                continue;
            }
            if firings[u] == 0 {
                order.push(u);
            }
            firings[u] += times;
            self.topple(&mut stable, u, times);
            for &(v, _) in &self.spread[u] {
                if !queued[v] && stable[v] >= self.degree[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
        Ok((Stabilization { stable, firings }, order))
    }

    /// Stabilizes one toppling at a time, letting `choose` pick which of the
    /// currently unstable positions fires next (it returns an index into the
    /// slice it is given).
    pub fn stabilize_by(
        &self,
        c: &[i64],
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> Result<Stabilization> {
        self.check_len(c)?;
        let n = self.len();
        let mut stable = c.to_vec();
        let mut firings = vec![0i64; n];
        loop {
            let unstable: Vec<usize> = (0..n).filter(|&u| stable[u] >= self.degree[u]).collect();
            if unstable.is_empty() {
                break;
            }
            let u = unstable[choose(&unstable) % unstable.len()];
            firings[u] += 1;
            self.topple(&mut stable, u, 1);
        }
        Ok(Stabilization { stable, firings })
    }

    /// Burning test, valid for undirected graphs: returns the firing order
    /// when `c` is recurrent.
    pub fn burning(&self, c: &[i64]) -> Result<Option<Vec<usize>>> {
        self.check_len(c)?;
        if self.graph.is_directed() {
            return Err(Error::NotUndirected);
        }
        if !self.is_valid_stable(c) {
            return Ok(None);
        }
        let start: Vec<i64> = c.iter().zip(&self.sink_adjacency).map(|(x, b)| x + b).collect();
        let (s, order) = self.stabilize_tracked(&start)?;
        let ok = s.firings.iter().all(|&f| f == 1) && s.stable == c;
        Ok(ok.then_some(order))
    }

    fn is_valid_stable(&self, c: &[i64]) -> bool {
        c.iter().all(|&x| x >= 0) && self.is_stable(c)
    }

    /// Recurrence for either graph kind: the burning test on undirected
    /// graphs, `s(c + e) = c` against the identity on digraphs.
    pub fn is_recurrent(&self, c: &[i64]) -> Result<bool> {
        Ok(self.certify(c)?.is_some())
    }

    fn certify(&self, c: &[i64]) -> Result<Option<Certificate>> {
        self.check_len(c)?;
        if !self.graph.is_directed() {
            return Ok(self.burning(c)?.map(Certificate::Burning));
        }
        if !self.is_valid_stable(c) {
            return Ok(None);
        }
        let e = self.identity()?;
        let sum: Vec<i64> = c.iter().zip(e.values()).map(|(a, b)| a + b).collect();
        Ok((self.stabilize(&sum)?.stable == c).then_some(Certificate::IdentityFixed))
    }

    /// Wraps `c` after checking that it is recurrent.
    pub fn recurrent(&self, c: &[i64]) -> Result<RecurrentConfig> {
        match self.certify(c)? {
            Some(certificate) => Ok(RecurrentConfig {
                values: c.to_vec(),
                certificate,
                graph: self.fingerprint,
            }),
            None => Err(Error::NotRecurrent),
        }
    }

    fn reachable(&self, values: Vec<i64>) -> RecurrentConfig {
        RecurrentConfig {
            values,
            certificate: Certificate::Reachable,
            graph: self.fingerprint,
        }
    }

    /// All recurrent configurations, by closing `{c_max}` under adding a chip
    /// and stabilizing. Returned in discovery order.
    pub fn recurrents(&self, guard: usize) -> Result<Vec<RecurrentConfig>> {
        if let Some(order) = self.order() {
            if order > guard as u64 {
                return Err(Error::OrbitTooLarge(guard));
            }
        } else {
            return Err(Error::OrbitTooLarge(guard));
        }
        let start = self.max_stable();
        let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for v in 0..self.len() {
                let mut next = c.clone();
                next[v] += 1;
                let s = self.stabilize(&next)?.stable;
                if seen.insert(s.clone()) {
                    if seen.len() > guard {
                        return Err(Error::OrbitTooLarge(guard));
                    }
                    out.push(s.clone());
                    queue.push_back(s);
                }
            }
        }
        Ok(out.into_iter().map(|c| self.reachable(c)).collect())
    }

    /// The unique recurrent configuration congruent to `x`.
    ///
    /// On undirected graphs whose every vertex is joined to the sink this adds
    /// the sink-adjacency vector `b ≡ 0` until the stabilization passes the
    /// burning test. Otherwise it adds multiples of
    /// `z = (2c_max + 2) − s(2c_max + 2) ≡ 0` until `x` dominates `c_max`.
    pub fn recurrent_representative(&self, x: &[i64]) -> Result<RecurrentConfig> {
        self.check_len(x)?;
        let out = if !self.graph.is_directed() && self.sink_adjacency.iter().all(|&b| b > 0) {
            self.representative_by_burning(x)?
        } else {
            self.representative_by_domination(x)?
        };
        debug_assert!(self.congruent(out.values(), x)?);
        Ok(out)
    }

    fn representative_by_burning(&self, x: &[i64]) -> Result<RecurrentConfig> {
        let b = &self.sink_adjacency;
        // Smallest k making x + k·b nonnegative.
        let mut k = x
            .iter()
            .zip(b)
            .map(|(&xi, &bi)| if xi >= 0 { 0 } else { (-xi + bi - 1) / bi })
            .max()
            .unwrap_or(0);
        loop {
            let y: Vec<i64> = x.iter().zip(b).map(|(xi, bi)| xi + k * bi).collect();
            let s = self.stabilize(&y)?.stable;
            if let Some(order) = self.burning(&s)? {
                return Ok(RecurrentConfig {
                    values: s,
                    certificate: Certificate::Burning(order),
                    graph: self.fingerprint,
                });
            }
            k += 1;
        }
    }

    fn representative_by_domination(&self, x: &[i64]) -> Result<RecurrentConfig> {
        let cmax = self.max_stable();
        let big: Vec<i64> = cmax.iter().map(|m| 2 * m + 2).collect();
        let s = self.stabilize(&big)?.stable;
        let z: Vec<i64> = big.iter().zip(&s).map(|(a, b)| a - b).collect();
        // Each z_v ≥ c_max(v) + 2 ≥ 1.
        let k = x
            .iter()
            .zip(&cmax)
            .zip(&z)
            .map(|((&xi, &m), &zi)| if xi >= m { 0 } else { (m - xi + zi - 1) / zi })
            .max()
            .unwrap_or(0);
        let y: Vec<i64> = x.iter().zip(&z).map(|(xi, zi)| xi + k * zi).collect();
        Ok(self.reachable(self.stabilize(&y)?.stable))
    }

    /// The identity element, computed once and cached.
    pub fn identity(&self) -> Result<&RecurrentConfig> {
        if let Some(e) = self.identity.get() {
            return Ok(e);
        }
        let zero = vec![0; self.len()];
        let e = if !self.graph.is_directed() && self.sink_adjacency.iter().all(|&b| b > 0) {
            self.representative_by_burning(&zero)?
        } else {
            self.representative_by_domination(&zero)?
        };
        Ok(self.identity.get_or_init(|| e))
    }

    /// `c₁ ⊕ c₂ = s(c₁ + c₂)`.
    pub fn add(&self, a: &RecurrentConfig, b: &RecurrentConfig) -> Result<RecurrentConfig> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        let sum: Vec<i64> = a.values.iter().zip(&b.values).map(|(x, y)| x + y).collect();
        let s = self.stabilize(&sum)?.stable;
        Ok(RecurrentConfig {
            values: s,
            // Adding chips to a recurrent configuration stays recurrent.
            certificate: Certificate::Reachable,
            graph: self.fingerprint,
        })
    }

    /// `k·c` for any integer `k`, including negative multiples.
    pub fn scale(&self, c: &RecurrentConfig, k: i64) -> Result<RecurrentConfig> {
        self.check_owner(c)?;
        let x: Vec<i64> = c.values.iter().map(|v| v * k).collect();
        self.recurrent_representative(&x)
    }

    pub fn inverse(&self, c: &RecurrentConfig) -> Result<RecurrentConfig> {
        self.scale(c, -1)
    }

    /// Order of the class of `x` in the group.
    pub fn element_order(&self, x: &[i64]) -> Result<BigInt> {
        self.check_len(x)?;
        self.cokernel
            .order_of(&to_big(x))?
            .ok_or(Error::SingularReducedLaplacian)
    }

    /// Whether `x − y ∈ Im L(G,s)ᵗ`.
    pub fn congruent(&self, x: &[i64], y: &[i64]) -> Result<bool> {
        self.check_len(x)?;
        self.check_len(y)?;
        let d: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.cokernel.contains(&to_big(&d))
    }

    /// Canonical coordinates of the class of `x`.
    pub fn class_of(&self, x: &[i64]) -> Result<Vec<BigInt>> {
        self.check_len(x)?;
        self.cokernel.class_of(&to_big(x))
    }

    /// A vector `y` with `x = L(G,s)ᵗ y`, if `x` represents zero.
    pub fn toppling_witness(&self, x: &[i64]) -> Result<Option<Vec<BigInt>>> {
        self.check_len(x)?;
        self.cokernel.witness(&to_big(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cone, cycle_graph, hypercube, k2_thick, Multigraph};

    fn pile(g: &Multigraph, n: u64) -> Sandpile {
        Sandpile::new(cone(g, n).unwrap()).unwrap()
    }

    fn sorted(v: Vec<RecurrentConfig>) -> Vec<Vec<i64>> {
        let mut v: Vec<_> = v.into_iter().map(RecurrentConfig::into_values).collect();
        v.sort();
        v
    }

    #[test]
    fn figure_seven_stabilization() {
        let sp = pile(&hypercube(2), 1);
        let s = sp.stabilize(&[3, 2, 3, 2]).unwrap();
        assert_eq!(s.stable, vec![2, 1, 2, 1]);
        assert_eq!(s.firings, vec![1, 1, 1, 1]);
    }

    #[test]
    fn single_toppling() {
        let sp = pile(&complete_graph(2), 1);
        let s = sp.stabilize(&[2, 0]).unwrap();
        assert_eq!(s.stable, vec![0, 1]);
        assert_eq!(s.firings, vec![1, 0]);
        assert_eq!(sp.stabilize(&[1, 1]).unwrap().firings, vec![0, 0]);
    }

    #[test]
    fn stabilization_identity_holds() {
        let sp = pile(&cycle_graph(5), 2);
        let c = [9, 0, 14, 3, 7];
        let s = sp.stabilize(&c).unwrap();
        let mut back = s.stable.clone();
        for (u, &f) in s.firings.iter().enumerate() {
            for (v, x) in sp.toppling_vector(u).iter().enumerate() {
                back[v] += f * x;
            }
        }
        assert_eq!(back, c);
    }

    #[test]
    fn negative_entries_do_not_topple() {
        let sp = pile(&complete_graph(2), 1);
        let s = sp.stabilize(&[-3, 5]).unwrap();
        assert_eq!(s.stable, vec![-1, 1]);
    }

    #[test]
    fn burning_examples() {
        let sp = pile(&hypercube(2), 1);
        assert!(sp.burning(&[2, 1, 2, 1]).unwrap().is_some());
        assert!(sp.burning(&[0, 0, 0, 0]).unwrap().is_none());
        for d in 1..=4 {
            let sp = pile(&hypercube(d), 1);
            let e = vec![d as i64; 1 << d];
            assert!(sp.is_recurrent(&e).unwrap());
            assert_eq!(sp.identity().unwrap().values(), e.as_slice());
        }
    }

    #[test]
    fn burning_rejects_digraphs() {
        let sp = Sandpile::new(k2_thick(2, 3).unwrap()).unwrap();
        assert_eq!(sp.burning(&[0, 0]), Err(Error::NotUndirected));
    }

    #[test]
    fn small_orbits() {
        let sp = pile(&complete_graph(2), 1);
        assert_eq!(sorted(sp.recurrents(ORBIT_GUARD).unwrap()), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(pile(&hypercube(2), 1).recurrents(ORBIT_GUARD).unwrap().len(), 45);
        let k22 = Sandpile::new(k2_thick(2, 2).unwrap()).unwrap();
        let got = sorted(k22.recurrents(ORBIT_GUARD).unwrap());
        let mut want: Vec<Vec<i64>> = (0..=2)
            .flat_map(|m| (0..=2).map(move |l| vec![m, l]))
            .filter(|v| v[0] == 2 || v[1] == 2)
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn orbit_guard_trips() {
        let sp = pile(&hypercube(2), 1);
        assert_eq!(sp.recurrents(10).unwrap_err(), Error::OrbitTooLarge(10));
    }

    #[test]
    fn identities() {
        assert_eq!(pile(&cycle_graph(5), 1).identity().unwrap().values(), &[2, 2, 2, 2, 2]);
        assert_eq!(pile(&hypercube(1), 3).identity().unwrap().values(), &[3, 3]);
        let sp = pile(&hypercube(1), 3);
        assert_eq!(sp.recurrent_representative(&[0, 0]).unwrap().values(), &[3, 3]);
    }

    #[test]
    fn digraph_identity_and_recurrence() {
        for (r, t) in [(2, 3), (3, 1), (1, 4)] {
            let sp = Sandpile::new(k2_thick(r, t).unwrap()).unwrap();
            let all = sp.recurrents(ORBIT_GUARD).unwrap();
            assert_eq!(all.len() as u64, r + t + 1);
            let e = sp.identity().unwrap().clone();
            assert!(all.contains(&e));
            for c in &all {
                assert!(sp.is_recurrent(c.values()).unwrap());
                assert_eq!(&sp.add(c, &e).unwrap(), c);
            }
            let nonrec = (0..r as i64 + 1)
                .flat_map(|a| (0..t as i64 + 1).map(move |b| vec![a, b]))
                .filter(|v| !all.iter().any(|c| c.values() == v.as_slice()));
            for v in nonrec {
                assert!(!sp.is_recurrent(&v).unwrap(), "{v:?}");
            }
        }
    }

    #[test]
    fn addition_examples() {
        let sp = pile(&hypercube(1), 1);
        let a = sp.recurrent(&[1, 0]).unwrap();
        assert_eq!(sp.add(&a, &a).unwrap().values(), &[0, 1]);
        let e = sp.identity().unwrap();
        assert_eq!(&sp.add(e, e).unwrap(), e);
    }

    #[test]
    fn representative_is_unique_in_class() {
        let sp = pile(&cycle_graph(4), 1);
        let all = sp.recurrents(ORBIT_GUARD).unwrap();
        for c in &all {
            assert_eq!(&sp.recurrent_representative(c.values()).unwrap(), c);
        }
        let r = sp.recurrent_representative(&[-7, 3, 0, 12]).unwrap();
        assert!(all.contains(&r));
        assert!(sp.congruent(r.values(), &[-7, 3, 0, 12]).unwrap());
    }

    #[test]
    fn element_orders() {
        let sp = pile(&cycle_graph(5), 1);
        assert_eq!(sp.element_order(&[2, 1, 1, 1, 1]).unwrap(), 11.into());
        assert_eq!(sp.element_order(&[2, 2, 2, 2, 2]).unwrap(), 1.into());
        let a = sp.recurrent(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(sp.scale(&a, 11).unwrap(), *sp.identity().unwrap());
        let inv = sp.inverse(&a).unwrap();
        assert_eq!(sp.add(&a, &inv).unwrap(), *sp.identity().unwrap());
    }

    #[test]
    fn congruence() {
        let sp = pile(&complete_graph(2), 1);
        assert!(sp.congruent(&[1, 0], &[1, 0]).unwrap());
        assert!(!sp.congruent(&[1, 0], &[0, 1]).unwrap());
        let s = sp.stabilize(&[5, 3]).unwrap().stable;
        assert!(sp.congruent(&[5, 3], &s).unwrap());
    }

    #[test]
    fn mismatched_graphs() {
        let a = pile(&complete_graph(2), 1);
        let b = pile(&complete_graph(2), 2);
        let x = a.identity().unwrap().clone();
        let y = b.identity().unwrap().clone();
        assert_eq!(a.add(&x, &y), Err(Error::GraphMismatch));
        assert!(matches!(a.stabilize(&[1]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn disconnected_graph_rejected() {
        let g = Multigraph::new(&["a", "b", "c"], &[("a", "b", 1)]).unwrap();
        let sg = SinkedGraph::new(g, &"a".into()).unwrap();
        assert_eq!(Sandpile::new(sg).unwrap_err(), Error::SingularReducedLaplacian);
    }
}
