//! Uniform, weak and directed uniform homomorphisms, and the sandpile-group
//! maps they induce.
//!
//! A [`UniformHom`] can only be obtained from [`validate_hom`] (or from a
//! constructor that calls it), so holding one means every defining clause
//! was checked. [`InducedMap`] adds the sink hypotheses needed to pull
//! configurations back from `H` to `G`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{cone, k2_thick, Graph, Multigraph, SinkedGraph, VertexId};
use crate::linalg::{smith_diagonal, to_big, Cokernel, IntMatrix};
use crate::sandpile::{RecurrentConfig, Sandpile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomKind {
    /// Fibers over `V` are stable and the degree condition holds for all `y`.
    Uniform,
    /// The degree condition is only required for `y ≠ x`.
    Weak,
    /// The degree condition counts out-arcs.
    Directed,
}

impl HomKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            HomKind::Uniform => "uniform",
            HomKind::Weak => "weak",
            HomKind::Directed => "directed",
        }
    }
}

impl std::str::FromStr for HomKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(HomKind::Uniform),
            "weak" => Ok(HomKind::Weak),
            "directed" => Ok(HomKind::Directed),
            _ => Err(Error::Parse(format!("unknown hom kind `{s}`"))),
        }
    }
}

/// A total map `V(G) → V(H)`, stored by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    source: Graph,
    target: Graph,
    map: Vec<usize>,
}

impl VertexMap {
    pub fn new(
        source: impl Into<Graph>,
        target: impl Into<Graph>,
        pairs: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let (source, target) = (source.into(), target.into());
        let mut map = vec![None; source.vertex_count()];
        for (u, x) in pairs {
            let iu = source
                .index_of(u)
                .ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
            let ix = target
                .index_of(x)
                .ok_or_else(|| Error::UnknownVertex(x.to_string()))?;
            if map[iu].replace(ix).is_some() {
                return Err(Error::DuplicateVertex(u.to_string()));
            }
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::UnknownVertex(source.labels()[i].to_string())))
            .collect::<Result<_>>()?;
        Ok(VertexMap { source, target, map })
    }

    /// Map given directly by target indices.
    pub fn from_indices(source: impl Into<Graph>, target: impl Into<Graph>, map: Vec<usize>) -> Result<Self> {
        let (source, target) = (source.into(), target.into());
        if map.len() != source.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: source.vertex_count(),
                found: map.len(),
            });
        }
        if let Some(&x) = map.iter().find(|&&x| x >= target.vertex_count()) {
            return Err(Error::OutOfRange(format!("target index {x}")));
        }
        Ok(VertexMap { source, target, map })
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn image(&self, u: usize) -> usize {
        self.map[u]
    }

    pub fn indices(&self) -> &[usize] {
        &self.map
    }

    /// `S_x = f⁻¹(x)`.
    pub fn fiber(&self, x: usize) -> Vec<usize> {
        (0..self.map.len()).filter(|&u| self.map[u] == x).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let hit: HashSet<usize> = self.map.iter().copied().collect();
        hit.len() == self.target.vertex_count()
    }

    /// Pairs `(g-label, h-label)` in source order.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.map
            .iter()
            .enumerate()
            .map(|(u, &x)| (self.source.labels()[u].clone(), self.target.labels()[x].clone()))
            .collect()
    }
}

/// Which defining clause failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    FiberSize,
    IdentityOnComplement,
    Stability,
    DegreeCount,
}

impl Clause {
    pub fn as_str(&self) -> &'static str {
        match self {
            Clause::FiberSize => "fiber-size",
            Clause::IdentityOnComplement => "identity-on-complement",
            Clause::Stability => "stability",
            Clause::DegreeCount => "degree-count",
        }
    }
}

/// The first violated clause with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.clause.as_str(), self.witness)
    }
}

/// A validated `V`-uniform homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformHom {
    map: VertexMap,
    subset: Vec<bool>,
    kind: HomKind,
    degree: Option<usize>,
}

impl UniformHom {
    pub fn vertex_map(&self) -> &VertexMap {
        &self.map
    }

    pub fn kind(&self) -> HomKind {
        self.kind
    }

    /// Whether target vertex `x` lies in `V`.
    pub fn in_subset(&self, x: usize) -> bool {
        self.subset[x]
    }

    pub fn subset_labels(&self) -> Vec<VertexId> {
        (0..self.subset.len())
            .filter(|&x| self.subset[x])
            .map(|x| self.map.target.labels()[x].clone())
            .collect()
    }

    /// Common fiber size over `V`. Directed homs may have fibers of
    /// different sizes, in which case this is `None`.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }
}

/// Finds the first violated clause, checked in the order fiber size,
/// identity on the complement, stability, degree counts.
pub fn find_violation(map: &VertexMap, subset: &[VertexId], kind: HomKind) -> Result<Option<Violation>> {
    let in_v = subset_mask(map, subset)?;
    Ok(violation(map, &in_v, kind))
}

fn subset_mask(map: &VertexMap, subset: &[VertexId]) -> Result<Vec<bool>> {
    let mut in_v = vec![false; map.target.vertex_count()];
    for x in subset {
        let ix = map
            .target
            .index_of(x)
            .ok_or_else(|| Error::UnknownVertex(x.to_string()))?;
        in_v[ix] = true;
    }
    Ok(in_v)
}

fn violation(map: &VertexMap, in_v: &[bool], kind: HomKind) -> Option<Violation> {
    let (g, h) = (&map.source, &map.target);
    let hl = |x: usize| h.labels()[x].to_string();
    let gl = |u: usize| g.labels()[u].to_string();
    let fibers: Vec<Vec<usize>> = (0..h.vertex_count()).map(|x| map.fiber(x)).collect();
    let v: Vec<usize> = (0..h.vertex_count()).filter(|&x| in_v[x]).collect();

    if kind != HomKind::Directed {
        if let Some(&x0) = v.first() {
            let size = fibers[x0].len();
            if let Some(&x) = v.iter().find(|&&x| fibers[x].len() != size) {
                return Some(Violation {
                    clause: Clause::FiberSize,
                    witness: format!(
                        "|S_{}| = {} but |S_{}| = {}",
                        hl(x0),
                        size,
                        hl(x),
                        fibers[x].len()
                    ),
                });
            }
        }
    }

    // Outside f⁻¹(V) the map must be a bijection onto V(H)∖V that preserves
    // multiplicities.
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&u| !in_v[map.map[u]]).collect();
    for x in (0..h.vertex_count()).filter(|&x| !in_v[x]) {
        if fibers[x].len() != 1 {
            return Some(Violation {
                clause: Clause::IdentityOnComplement,
                witness: format!("fiber of {} has {} vertices", hl(x), fibers[x].len()),
            });
        }
    }
    for &u in &rest {
        for &w in &rest {
            if u != w && g.mult(u, w) != h.mult(map.map[u], map.map[w]) {
                return Some(Violation {
                    clause: Clause::IdentityOnComplement,
                    witness: format!("multiplicity of {}-{} differs from its image", gl(u), gl(w)),
                });
            }
        }
    }

    if kind == HomKind::Uniform {
        for &x in &v {
            for &u in &fibers[x] {
                if let Some(&w) = fibers[x].iter().find(|&&w| g.mult(u, w) > 0) {
                    return Some(Violation {
                        clause: Clause::Stability,
                        witness: format!("{} and {} are adjacent inside S_{}", gl(u), gl(w), hl(x)),
                    });
                }
            }
        }
    }

    for &x in &v {
        for y in 0..h.vertex_count() {
            if kind == HomKind::Weak && y == x {
                continue;
            }
            let want = h.mult(x, y);
            for &u in &fibers[x] {
                let got: u64 = fibers[y].iter().map(|&w| g.mult(u, w)).sum();
                if got != want {
                    return Some(Violation {
                        clause: Clause::DegreeCount,
                        witness: format!(
                            "{} has {} {} into S_{}, expected m({},{}) = {}",
                            gl(u),
                            got,
                            if kind == HomKind::Directed { "arcs" } else { "edges" },
                            hl(y),
                            hl(x),
                            hl(y),
                            want
                        ),
                    });
                }
            }
        }
    }
    None
}

/// Checks every clause of the definition for `kind` and returns the
/// certified homomorphism.
pub fn validate_hom(map: VertexMap, subset: &[VertexId], kind: HomKind) -> Result<UniformHom> {
    let in_v = subset_mask(&map, subset)?;
    if let Some(v) = violation(&map, &in_v, kind) {
        return Err(Error::ClauseViolation(v.to_string()));
    }
    let sizes: HashSet<usize> = (0..in_v.len())
        .filter(|&x| in_v[x])
        .map(|x| map.fiber(x).len())
        .collect();
    let degree = (sizes.len() == 1).then(|| *sizes.iter().next().expect("one size"));
    Ok(UniformHom {
        map,
        subset: in_v,
        kind,
        degree,
    })
}

/// Homomorphism and full-homomorphism tests for undirected graphs, via the
/// fiber characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomClass {
    pub homomorphism: bool,
    pub full: bool,
}

pub fn classify(map: &VertexMap) -> HomClass {
    let (g, h) = (&map.source, &map.target);
    let n = g.vertex_count();
    let mut homomorphism = true;
    let mut full = true;
    for u in 0..n {
        for w in 0..n {
            if u == w {
                continue;
            }
            let (x, y) = (map.map[u], map.map[w]);
            let edge_g = g.mult(u, w) > 0;
            if x == y {
                homomorphism &= !edge_g;
            } else if h.mult(x, y) > 0 {
                full &= edge_g;
            } else {
                homomorphism &= !edge_g;
            }
        }
    }
    HomClass {
        homomorphism,
        full: homomorphism && full,
    }
}

/// A validated homomorphism between sinked graphs satisfying the hypotheses
/// for inducing a map `SP(H, s_H) → SP(G, s_G)`: surjective, `f⁻¹(s_H) =
/// {s_G}`, `s_H ∉ V`, and (for the undirected kinds) `V(H)∖V` stable.
///
/// Directed homs satisfy `L(G)·f̂ = f̂·L(H)`, so they act on the column
/// lattices `Z^Ṽ / Im L`. Those quotients are isomorphic to the sandpile
/// groups but the map need not respect the toppling-row lattice, so for the
/// directed kind every lattice check is made against `Im L` instead of
/// `Im Lᵗ`.
#[derive(Debug)]
pub struct InducedMap {
    hom: UniformHom,
    g: Sandpile,
    h: Sandpile,
    /// For each non-sink position of `G`: the position of `f(v)` in `H` and
    /// the multiplier applied to its value.
    pullback: Vec<(usize, i64)>,
    g_lattice: Cokernel,
    h_lattice: Cokernel,
}

impl InducedMap {
    pub fn new(hom: UniformHom, sink_g: &VertexId, sink_h: &VertexId) -> Result<Self> {
        let m = &hom.map;
        let sg = m
            .source
            .index_of(sink_g)
            .ok_or_else(|| Error::UnknownVertex(sink_g.to_string()))?;
        let sh = m
            .target
            .index_of(sink_h)
            .ok_or_else(|| Error::UnknownVertex(sink_h.to_string()))?;
        if let Some(x) = (0..m.target.vertex_count()).find(|&x| m.fiber(x).is_empty()) {
            return Err(Error::NotSurjective(m.target.labels()[x].to_string()));
        }
        if m.fiber(sh) != [sg] {
            return Err(Error::PreconditionViolated(format!(
                "the preimage of {sink_h} must be exactly {{{sink_g}}}"
            )));
        }
        if hom.subset[sh] {
            return Err(Error::PreconditionViolated(format!("sink {sink_h} lies in V")));
        }
        if hom.kind != HomKind::Directed {
            let out: Vec<usize> = (0..hom.subset.len()).filter(|&x| !hom.subset[x]).collect();
            for &x in &out {
                for &y in &out {
                    if x != y && m.target.mult(x, y) > 0 {
                        return Err(Error::PreconditionViolated(format!(
                            "V(H)∖V is not stable: {}-{}",
                            m.target.labels()[x],
                            m.target.labels()[y]
                        )));
                    }
                }
            }
        }
        let g = Sandpile::new(SinkedGraph::with_sink_index(m.source.clone(), sg)?)?;
        let h = Sandpile::new(SinkedGraph::with_sink_index(m.target.clone(), sh)?)?;
        let deg = hom.degree.unwrap_or(1) as i64;
        let pullback = g
            .graph()
            .nonsink()
            .iter()
            .map(|&v| {
                let x = m.map[v];
                let pos = h.graph().position(x).expect("only s_G maps to s_H");
                let mult = if hom.kind == HomKind::Directed || hom.subset[x] { 1 } else { deg };
                (pos, mult)
            })
            .collect();
        let (g_lattice, h_lattice) = if hom.kind == HomKind::Directed {
            (
                Cokernel::new(&g.reduced_laplacian().transpose()),
                Cokernel::new(&h.reduced_laplacian().transpose()),
            )
        } else {
            (g.cokernel().clone(), h.cokernel().clone())
        };
        Ok(InducedMap {
            hom,
            g,
            h,
            pullback,
            g_lattice,
            h_lattice,
        })
    }

    pub fn hom(&self) -> &UniformHom {
        &self.hom
    }

    /// Sandpile of the source graph `G`.
    pub fn source(&self) -> &Sandpile {
        &self.g
    }

    /// Sandpile of the target graph `H`.
    pub fn target(&self) -> &Sandpile {
        &self.h
    }

    /// The coordinate map `f̂`: `c_{f(v)}`, scaled by `deg(f)` when
    /// `f(v) ∉ V` (never for directed homs).
    pub fn pullback(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.h.len() {
            return Err(Error::LengthMismatch {
                expected: self.h.len(),
                found: x.len(),
            });
        }
        Ok(self.pullback.iter().map(|&(p, k)| k * x[p]).collect())
    }

    /// The induced map on recurrent configurations. For uniform homs the
    /// pulled-back configuration is itself recurrent (and is checked to be);
    /// for weak homs its recurrent representative is returned. Directed homs
    /// only act on lattice classes; see [`pullback`](Self::pullback).
    pub fn apply(&self, c: &RecurrentConfig) -> Result<RecurrentConfig> {
        let raw = self.pullback(c.values())?;
        match self.hom.kind {
            HomKind::Uniform => self.g.recurrent(&raw),
            HomKind::Weak => self.g.recurrent_representative(&raw),
            HomKind::Directed => Err(Error::PreconditionViolated(
                "directed homs act on lattice classes, not on recurrent configurations".into(),
            )),
        }
    }

    /// Whether `x ≡ y` in the quotient the map acts on for `H`.
    pub fn congruent_in_target(&self, x: &[i64], y: &[i64]) -> Result<bool> {
        let d: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.h_lattice.contains(&to_big(&d))
    }

    /// Whether `x ≡ y` in the quotient the map acts on for `G`.
    pub fn congruent_in_source(&self, x: &[i64], y: &[i64]) -> Result<bool> {
        let d: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.g_lattice.contains(&to_big(&d))
    }

    /// Order of the image subgroup, from the Smith form of the class
    /// coordinates of `f̂(e_x)` stacked with the relations of `SP(G)`.
    pub fn image_order(&self) -> Result<BigInt> {
        let ck = &self.g_lattice;
        let diag: Vec<BigInt> = ck
            .smith_diagonal()
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect();
        let k = diag.len();
        if k == 0 {
            return Ok(BigInt::one());
        }
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for x in 0..self.h.len() {
            let mut e = vec![0; self.h.len()];
            e[x] = 1;
            cols.push(ck.class_of(&to_big(&self.pullback(&e)?))?);
        }
        for (i, d) in diag.iter().enumerate() {
            let mut col = vec![BigInt::zero(); k];
            col[i] = d.clone();
            cols.push(col);
        }
        let m = IntMatrix::from_rows(&cols)?.transpose();
        let index: BigInt = smith_diagonal(&m).iter().product();
        Ok(&self.g.structure().order / index)
    }

    /// Whether every relation of `H` pulls back into the lattice of `G`,
    /// i.e. whether `f̂` descends to the quotients.
    pub fn is_well_defined(&self) -> Result<bool> {
        let rel = self.h_lattice.relations();
        for x in 0..rel.rows() {
            let row: Vec<i64> = rel.row(x).iter().map(|v| v.try_into().expect("small entries")).collect();
            if !self.g_lattice.contains(&to_big(&self.pullback(&row)?))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks that the induced map is an injective group homomorphism.
    pub fn verify_injection(&self, opts: &InjectionOptions, rng: &mut impl Rng) -> Result<InjectionReport> {
        let mut report = InjectionReport {
            kind: self.hom.kind,
            source_order: self.h.structure().order.clone(),
            target_order: self.g.structure().order.clone(),
            image_order: self.image_order()?,
            well_defined: self.is_well_defined()?,
            recurrence_preserved: None,
            homomorphism: true,
            injective: false,
            enumerated: false,
            pairs_checked: 0,
            witness: None,
        };
        report.injective = report.image_order == report.source_order;
        if self.hom.kind == HomKind::Directed {
            self.check_classes(&mut report, opts, rng)?;
        } else {
            self.check_elements(&mut report, opts, rng)?;
        }
        if !report.well_defined {
            report.witness.get_or_insert_with(|| "a relation of H does not pull back to the lattice of G".into());
        }
        if report.image_order != report.source_order {
            report.witness.get_or_insert_with(|| {
                format!("image has order {} but SP(H) has order {}", report.image_order, report.source_order)
            });
        }
        Ok(report)
    }

    /// Lattice-level check: `x ≡ y` in `H` iff `f̂(x) ≡ f̂(y)` in `G`, over
    /// random pairs and pairs made congruent by adding relations.
    fn check_classes(&self, report: &mut InjectionReport, opts: &InjectionOptions, rng: &mut impl Rng) -> Result<()> {
        let n = self.h.len();
        let rel = self.h_lattice.relations();
        for i in 0..opts.samples {
            let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-10..=10)).collect();
            let y: Vec<i64> = if i % 2 == 0 {
                (0..n).map(|_| rng.gen_range(-10..=10)).collect()
            } else {
                let mut y = x.clone();
                for r in 0..rel.rows() {
                    let k: i64 = rng.gen_range(-3..=3);
                    for (j, v) in rel.row(r).iter().enumerate() {
                        y[j] += k * v.to_i64().expect("small entries");
                    }
                }
                y
            };
            report.pairs_checked += 1;
            let lhs = self.congruent_in_target(&x, &y)?;
            let rhs = self.congruent_in_source(&self.pullback(&x)?, &self.pullback(&y)?)?;
            if lhs != rhs {
                report.homomorphism &= !lhs;
                report.injective &= lhs;
                report.witness = Some(format!("{x:?} and {y:?}: congruent in H {lhs}, images congruent in G {rhs}"));
                break;
            }
        }
        Ok(())
    }

    fn check_elements(&self, report: &mut InjectionReport, opts: &InjectionOptions, rng: &mut impl Rng) -> Result<()> {
        let small = report
            .target_order
            .to_u64()
            .is_some_and(|n| n <= opts.enumerate_limit);
        let elements: Vec<RecurrentConfig> = if small {
            report.enumerated = true;
            self.h.recurrents(opts.enumerate_limit as usize)?
        } else {
            // Generators of H plus a few random recurrent classes.
            let mut out = Vec::new();
            for x in 0..self.h.len() {
                let mut e = vec![0; self.h.len()];
                e[x] = 1;
                out.push(self.h.recurrent_representative(&e)?);
            }
            for _ in 0..opts.samples.min(64) {
                let v: Vec<i64> = (0..self.h.len()).map(|_| rng.gen_range(-20..=20)).collect();
                out.push(self.h.recurrent_representative(&v)?);
            }
            out
        };

        let images: Vec<RecurrentConfig> = elements.iter().map(|c| self.apply(c)).collect::<Result<_>>()?;
        if self.hom.kind == HomKind::Uniform {
            // `apply` already certified recurrence of each image.
            report.recurrence_preserved = Some(true);
        }
        if report.enumerated {
            let distinct: HashSet<&[i64]> = images.iter().map(|c| c.values()).collect();
            if distinct.len() != images.len() {
                report.injective = false;
                report.witness.get_or_insert_with(|| "two recurrents share an image".into());
            }
        }

        let n = elements.len();
        let pairs: Vec<(usize, usize)> = if report.enumerated && n * n <= opts.pair_limit {
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
        } else {
            (0..opts.samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        };
        for (i, j) in pairs {
            report.pairs_checked += 1;
            let lhs = self.apply(&self.h.add(&elements[i], &elements[j])?)?;
            let rhs = self.g.add(&images[i], &images[j])?;
            if lhs != rhs {
                report.homomorphism = false;
                report.witness = Some(format!(
                    "f({:?} + {:?}) = {:?} but f({:?}) + f({:?}) = {:?}",
                    elements[i].values(),
                    elements[j].values(),
                    lhs.values(),
                    elements[i].values(),
                    elements[j].values(),
                    rhs.values()
                ));
                break;
            }
        }
        Ok(())
    }
}

/// Bounds for [`InducedMap::verify_injection`].
#[derive(Debug, Clone)]
pub struct InjectionOptions {
    /// Enumerate `SP(H)` when `|SP(G)|` is at most this.
    pub enumerate_limit: u64,
    /// Check all pairs when there are at most this many.
    pub pair_limit: usize,
    /// Random pairs otherwise.
    pub samples: usize,
}

impl Default for InjectionOptions {
    fn default() -> Self {
        InjectionOptions {
            enumerate_limit: 10_000,
            pair_limit: 40_000,
            samples: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectionReport {
    pub kind: HomKind,
    pub source_order: BigInt,
    pub target_order: BigInt,
    pub image_order: BigInt,
    pub well_defined: bool,
    /// Only meaningful for uniform homs.
    pub recurrence_preserved: Option<bool>,
    pub homomorphism: bool,
    pub injective: bool,
    pub enumerated: bool,
    pub pairs_checked: usize,
    pub witness: Option<String>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        self.well_defined
            && self.recurrence_preserved != Some(false)
            && self.homomorphism
            && self.injective
            && self.target_order.is_multiple_of(&self.source_order)
    }
}

/// The collapse `c(B) → c(K₂(r,t))` of a biregular bipartite graph onto the
/// thick edge, sending `V₁ ↦ v1`, `V₂ ↦ v2` and the cone sink to `s`.
/// Directed when `r ≠ t`.
pub fn bipartite_collapse_hom(b: &Multigraph, v1: &[VertexId], v2: &[VertexId]) -> Result<InducedMap> {
    let n = b.vertex_count();
    let mut side = vec![None; n];
    for (k, part) in [(0u8, v1), (1u8, v2)] {
        for v in part {
            let i = b.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            if side[i].replace(k).is_some() {
                return Err(Error::NotBiregular(format!("{v} is in both parts")));
            }
        }
    }
    let side: Vec<u8> = side
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::NotBiregular(format!("{} is in neither part", b.labels()[i]))))
        .collect::<Result<_>>()?;
    if v1.is_empty() || v2.is_empty() {
        return Err(Error::NotBiregular("empty part".into()));
    }
    for (u, w, _) in b.edges() {
        if side[u] == side[w] {
            return Err(Error::NotBiregular(format!("edge {}-{} inside a part", b.labels()[u], b.labels()[w])));
        }
    }
    let degree_of = |k: u8| -> Result<u64> {
        let ds: HashSet<u64> = (0..n).filter(|&u| side[u] == k).map(|u| b.degree(u)).collect();
        if ds.len() != 1 {
            return Err(Error::NotBiregular(format!("part {} has degrees {:?}", k + 1, ds)));
        }
        Ok(*ds.iter().next().expect("one degree"))
    };
    let (r, t) = (degree_of(0)?, degree_of(1)?);
    if r == 0 || t == 0 {
        return Err(Error::NotBiregular("isolated vertices".into()));
    }
    let source = cone(b, 1)?;
    let target = k2_thick(r, t)?;
    let tv = |l: &str| target.graph().index_of(&VertexId::from(l)).expect("k2 labels");
    let mut map: Vec<usize> = side.iter().map(|&k| if k == 0 { tv("v1") } else { tv("v2") }).collect();
    map.push(tv("s"));
    let vm = VertexMap::from_indices(source.graph().clone(), target.graph().clone(), map)?;
    let kind = if r == t { HomKind::Uniform } else { HomKind::Directed };
    let hom = validate_hom(vm, &["v1".into(), "v2".into()], kind)?;
    InducedMap::new(hom, source.sink_label(), &"s".into())
}

/// A random connected graph `G` with a surjective `(V(H)∖s_H)`-uniform
/// homomorphism of degree `k` onto `H`: every non-sink vertex of `H` is
/// replaced by `k` copies, each edge `xy` of multiplicity `m` by `m` random
/// perfect matchings between the copies, and each edge `xs_H` by `m` edges
/// from every copy of `x` to `s_G`. Gives up after 100 disconnected draws.
pub fn random_lift(h: &Multigraph, sink: &VertexId, k: usize, rng: &mut impl Rng) -> Result<InducedMap> {
    let sh = h.index_of(sink).ok_or_else(|| Error::UnknownVertex(sink.to_string()))?;
    if k == 0 {
        return Err(Error::OutOfRange("lift degree must be positive".into()));
    }
    let xs: Vec<usize> = (0..h.vertex_count()).filter(|&x| x != sh).collect();
    // Copy j of x gets index slot[x] + j; s_G is last.
    let mut slot = vec![0; h.vertex_count()];
    let mut labels = Vec::new();
    for (i, &x) in xs.iter().enumerate() {
        slot[x] = i * k;
        for j in 0..k {
            labels.push(VertexId::new(format!("{}.{}", h.labels()[x], j)));
        }
    }
    let sg = labels.len();
    labels.push(VertexId::new(format!("{}.0", h.labels()[sh])));
    let mut map: Vec<usize> = xs.iter().flat_map(|&x| std::iter::repeat_n(x, k)).collect();
    map.push(sh);

    for _ in 0..100 {
        let mut edges: Vec<(VertexId, VertexId, u64)> = Vec::new();
        for (x, y, m) in h.edges() {
            if x == sh || y == sh {
                let z = if x == sh { y } else { x };
                for j in 0..k {
                    edges.push((labels[slot[z] + j].clone(), labels[sg].clone(), m));
                }
                continue;
            }
            for _ in 0..m {
                let mut perm: Vec<usize> = (0..k).collect();
                perm.shuffle(rng);
                for (j, &p) in perm.iter().enumerate() {
                    edges.push((labels[slot[x] + j].clone(), labels[slot[y] + p].clone(), 1));
                }
            }
        }
        let g = Multigraph::from_ids(labels.clone(), &edges)?;
        if !g.is_connected() {
            continue;
        }
        let vm = VertexMap::from_indices(g, h.clone(), map.clone())?;
        let subset: Vec<VertexId> = xs.iter().map(|&x| h.labels()[x].clone()).collect();
        let hom = validate_hom(vm, &subset, HomKind::Uniform)?;
        return InducedMap::new(hom, &labels[sg], sink);
    }
    Err(Error::BoundExceeded("no connected lift found in 100 draws".into()))
}
