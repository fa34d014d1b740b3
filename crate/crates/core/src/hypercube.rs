//! Cones over hypercubes: parity-striped configurations, the cyclic
//! subgroups they generate, and checks of the resulting decompositions.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{cone, hypercube, k2_thick, q_beta_subgraph, Multigraph, VertexId};
use crate::morphism::{validate_hom, HomKind, InducedMap, VertexMap};
use crate::io::big_strings;
use crate::linalg::{invariant_factors, smith_diagonal, GroupStructure, IntMatrix};
use crate::sandpile::{RecurrentConfig, Sandpile, ORBIT_GUARD};

/// A vector `β ∈ {0,1}^d`, stored as a bit mask (bit `i` is coordinate `i+1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaVector {
    dim: usize,
    mask: usize,
}

impl BetaVector {
    pub fn new(dim: usize, mask: usize) -> Result<Self> {
        if dim >= usize::BITS as usize || mask >> dim != 0 {
            return Err(Error::OutOfRange(format!("mask {mask:#b} for dimension {dim}")));
        }
        Ok(BetaVector { dim, mask })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut mask = 0;
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => mask |= 1 << i,
                _ => return Err(Error::OutOfRange(format!("bit value {b}"))),
            }
        }
        Self::new(bits.len(), mask)
    }

    pub fn zero(dim: usize) -> Self {
        BetaVector { dim, mask: 0 }
    }

    pub fn ones(dim: usize) -> Self {
        BetaVector { dim, mask: (1 << dim) - 1 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mask(&self) -> usize {
        self.mask
    }

    pub fn weight(&self) -> usize {
        self.mask.count_ones() as usize
    }
}

impl fmt::Display for BetaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<String> = (0..self.dim).map(|i| (self.mask >> i & 1).to_string()).collect();
        write!(f, "({})", bits.join(","))
    }
}

/// Every `β ∈ {0,1}^d`, in mask order.
pub fn all_betas(d: usize) -> impl Iterator<Item = BetaVector> {
    (0..1usize << d).map(move |mask| BetaVector { dim: d, mask })
}

/// Largest dimension accepted by [`CubeCone::new`].
pub const MAX_DIM: usize = 8;

/// `g_β(r,t)`: `r` on vertices `v_a` with `β·a` even, `t` where it is odd.
pub fn g_beta(beta: &BetaVector, r: i64, t: i64) -> Vec<i64> {
    (0..1usize << beta.dim)
        .map(|a| if (a & beta.mask).count_ones().is_multiple_of(2) { r } else { t })
        .collect()
}

/// `k·(r,0)` in `SP(c(K₂(r)))` for `0 ≤ k ≤ 2r`: `(r−j, r)` when `k = 2j`,
/// `(r, j)` when `k = 2j+1`.
pub fn power_formula_k2(r: i64, k: i64) -> Result<(i64, i64)> {
    if r < 1 || k < 0 || k > 2 * r {
        return Err(Error::OutOfRange(format!("k = {k} for r = {r}")));
    }
    let j = k / 2;
    Ok(if k % 2 == 0 { (r - j, r) } else { (r, j) })
}

/// The closed form for the number of invariant factors of `SP(c(Q_d))`.
pub fn if_count(d: usize) -> u64 {
    if d == 4 {
        return 6;
    }
    (0..=d.saturating_sub(1) / 3)
        .map(|i| 1 + 3 * i)
        .filter(|&m| m <= d)
        .map(|m| binomial(d as u64, m as u64))
        .sum()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `⊕_{i=0}^{d} Z_{2i+n}^{C(d,i)}`.
pub fn expected_structure(d: usize, n: u64) -> GroupStructure {
    let orders: Vec<BigInt> = (0..=d as u64)
        .flat_map(|i| std::iter::repeat_n(BigInt::from(2 * i + n), binomial(d as u64, i) as usize))
        .collect();
    GroupStructure::from_cyclic_orders(&orders)
}

/// A cyclic subgroup of a cone over a hypercube, listed as powers of its
/// generator (the identity comes last).
#[derive(Debug, Clone)]
pub struct SubgroupDescription {
    pub ambient: GroupStructure,
    pub generator: RecurrentConfig,
    pub elements: Vec<RecurrentConfig>,
    pub order: u64,
}

impl SubgroupDescription {
    fn cyclic(pile: &Sandpile, generator: RecurrentConfig) -> Result<Self> {
        let order = pile
            .element_order(generator.values())?
            .to_u64()
            .ok_or_else(|| Error::BoundExceeded("subgroup order".into()))?;
        let mut elements = vec![generator.clone()];
        while elements.len() < order as usize {
            let next = pile.add(elements.last().expect("nonempty"), &generator)?;
            elements.push(next);
        }
        Ok(SubgroupDescription {
            ambient: pile.structure().clone(),
            generator,
            elements,
            order,
        })
    }

    /// Element values, sorted.
    pub fn sorted_values(&self) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self.elements.iter().map(|c| c.values().to_vec()).collect();
        v.sort();
        v
    }
}

/// `c_n(Q_d)` with its sandpile.
#[derive(Debug)]
pub struct CubeCone {
    d: usize,
    n: u64,
    pile: Sandpile,
}

impl CubeCone {
    pub fn new(d: usize, n: u64) -> Result<Self> {
        if d > MAX_DIM {
            return Err(Error::BoundExceeded(format!("dimension {d} > {MAX_DIM}")));
        }
        Ok(CubeCone {
            d,
            n,
            pile: Sandpile::new(cone(&hypercube(d), n)?)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn cone_multiplicity(&self) -> u64 {
        self.n
    }

    pub fn sandpile(&self) -> &Sandpile {
        &self.pile
    }

    fn check_beta(&self, beta: &BetaVector) -> Result<()> {
        if beta.dim != self.d {
            return Err(Error::LengthMismatch {
                expected: self.d,
                found: beta.dim,
            });
        }
        Ok(())
    }

    fn require_plain_cone(&self) -> Result<()> {
        if self.n != 1 {
            return Err(Error::PreconditionViolated(format!(
                "needs the cone with one edge per vertex, got {}",
                self.n
            )));
        }
        Ok(())
    }

    /// `Γ_β = g_β(d, d−|β|)`; `β = 0` gives the identity `d·1`.
    pub fn gamma_beta(&self, beta: &BetaVector) -> Result<RecurrentConfig> {
        self.check_beta(beta)?;
        self.require_plain_cone()?;
        let d = self.d as i64;
        self.pile.recurrent(&g_beta(beta, d, d - beta.weight() as i64))
    }

    /// `k·Γ_β`: `g_β(d−j, d)` when `k = 2j`, `g_β(d, d+j−|β|)` when `k = 2j+1`,
    /// with `k` taken modulo `2|β|+1`.
    pub fn gamma_power(&self, beta: &BetaVector, k: i64) -> Result<Vec<i64>> {
        self.check_beta(beta)?;
        let w = beta.weight() as i64;
        let (m, l) = if w == 0 { (0, 0) } else { power_formula_k2(w, k.rem_euclid(2 * w + 1))? };
        let shift = self.d as i64 - w;
        Ok(g_beta(beta, m + shift, l + shift))
    }

    /// `K̃_β = {g_β(r,t) + (d−|β|)·1 : r = |β| or t = |β|, 0 ≤ r,t ≤ |β|}`,
    /// checked against the cyclic group generated by `Γ_β`.
    pub fn k_tilde_elements(&self, beta: &BetaVector) -> Result<SubgroupDescription> {
        let sub = SubgroupDescription::cyclic(&self.pile, self.gamma_beta(beta)?)?;
        let w = beta.weight() as i64;
        let shift = self.d as i64 - w;
        let mut listed: Vec<Vec<i64>> = (0..=w)
            .flat_map(|x| [(w, x), (x, w)])
            .map(|(r, t)| g_beta(beta, r + shift, t + shift))
            .collect();
        listed.sort();
        listed.dedup();
        if listed != sub.sorted_values() {
            return Err(Error::PreconditionViolated(format!(
                "powers of the generator for {beta} differ from the parity list"
            )));
        }
        Ok(sub)
    }

    /// `π̃_β(a) = a □ e`: a configuration on `c(Q_β)` (in the vertex order of
    /// [`q_beta_subgraph`](crate::graph::q_beta_subgraph)) boxed with the identity `(d−|β|)·1` of the
    /// complementary cube.
    pub fn pi_tilde_beta(&self, beta: &BetaVector, a: &[i64]) -> Result<RecurrentConfig> {
        self.check_beta(beta)?;
        self.require_plain_cone()?;
        let members: Vec<usize> = (0..1usize << self.d).filter(|x| x & !beta.mask == 0).collect();
        if a.len() != members.len() {
            return Err(Error::LengthMismatch {
                expected: members.len(),
                found: a.len(),
            });
        }
        let shift = (self.d - beta.weight()) as i64;
        let raw: Vec<i64> = (0..1usize << self.d)
            .map(|v| {
                let p = members.binary_search(&(v & beta.mask)).expect("restriction is a member");
                a[p] + shift
            })
            .collect();
        self.pile.recurrent(&raw)
    }

    /// The group `hat-K̂_β` inside `SP(c_n(Q_d))`.
    ///
    /// For `β ≠ 0` the raw elements are `g_β(r,t)` for the recurrents `(r,t)`
    /// of `c_n(K₂(|β|))` whose order divides `2|β|+n`. They need not be
    /// recurrent on `c_n(Q_d)`; their classes form the subgroup. Requiring
    /// `gcd(n, 2|β|+n) = 1` makes this the unique complement of the `Z_n`
    /// coming from `c_n(Q₀)`, which is what `β = 0` returns (the classes of
    /// `i·1`).
    pub fn hat_k_elements(&self, beta: &BetaVector) -> Result<HatKDescription> {
        self.check_beta(beta)?;
        if self.d > 4 {
            return Err(Error::BoundExceeded(format!("dimension {} > 4", self.d)));
        }
        let n = self.n as i64;
        let w = beta.weight() as i64;
        if w == 0 {
            let one = vec![1; self.pile.len()];
            let generator = self.pile.recurrent_representative(&one)?;
            let subgroup = SubgroupDescription::cyclic(&self.pile, generator)?;
            let raw = subgroup.elements.iter().map(|c| c.values().to_vec()).collect();
            return Ok(HatKDescription { raw, subgroup });
        }
        let m = 2 * w + n;
        if n.gcd(&m) != 1 {
            return Err(Error::PreconditionViolated(format!(
                "gcd({n}, {m}) != 1, so the quotient has no canonical complement"
            )));
        }
        let k2 = Sandpile::new(cone(&Multigraph::new(&["v1", "v2"], &[("v1", "v2", w as u64)])?, self.n)?)?;
        let target = BigInt::from(m);
        let generator = k2
            .recurrents(ORBIT_GUARD)?
            .into_iter()
            .find(|c| k2.element_order(c.values()).is_ok_and(|o| o == target))
            .ok_or_else(|| Error::PreconditionViolated(format!("no element of order {m}")))?;
        let small = SubgroupDescription::cyclic(&k2, generator)?;
        let raw: Vec<Vec<i64>> = small
            .elements
            .iter()
            .map(|c| g_beta(beta, c.values()[0], c.values()[1]))
            .collect();
        let lifted = self.pile.recurrent_representative(&raw[0])?;
        let subgroup = SubgroupDescription::cyclic(&self.pile, lifted)?;
        if subgroup.order != m as u64 {
            return Err(Error::PreconditionViolated(format!(
                "image has order {} instead of {m}",
                subgroup.order
            )));
        }
        for (x, c) in raw.iter().zip(&subgroup.elements) {
            if !self.pile.congruent(x, c.values())? {
                return Err(Error::PreconditionViolated(format!("{x:?} is not a homomorphic image")));
            }
        }
        Ok(HatKDescription { raw, subgroup })
    }
}

/// `hat-K̂_β`: the raw images alongside the recurrent subgroup they
/// represent, aligned index by index.
#[derive(Debug, Clone)]
pub struct HatKDescription {
    pub raw: Vec<Vec<i64>>,
    pub subgroup: SubgroupDescription,
}

impl HatKDescription {
    pub fn sorted_raw(&self) -> Vec<Vec<i64>> {
        let mut v = self.raw.clone();
        v.sort();
        v
    }
}

/// `f_β: c(Q_β) → c(K₂(|β|))`, sending `v_a` to `v1` when `|a|` is even and
/// to `v2` otherwise, and the sink to the sink. It is `{v1, v2}`-uniform of
/// degree `2^{|β|−1}`.
pub fn f_beta_hom(beta: &BetaVector) -> Result<InducedMap> {
    let w = beta.weight();
    if w == 0 {
        return Err(Error::PreconditionViolated("β must be nonzero".into()));
    }
    let source = cone(&q_beta_subgraph(beta), 1)?;
    let target = k2_thick(w as u64, w as u64)?;
    let sink = VertexId::from("s");
    let pairs: Vec<(VertexId, VertexId)> = source
        .graph()
        .labels()
        .iter()
        .map(|u| {
            let x = if *u == sink {
                "s"
            } else if u.as_str().matches('1').count() % 2 == 0 {
                "v1"
            } else {
                "v2"
            };
            (u.clone(), VertexId::from(x))
        })
        .collect();
    let map = VertexMap::new(source.graph().clone(), target.graph().clone(), &pairs)?;
    let hom = validate_hom(map, &["v1".into(), "v2".into()], HomKind::Uniform)?;
    InducedMap::new(hom, &sink, &sink)
}

/// Computed versus closed-form structure of `SP(c_n(Q_d))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub d: usize,
    pub n: u64,
    #[serde(serialize_with = "big_strings")]
    pub computed: Vec<BigInt>,
    #[serde(serialize_with = "big_strings")]
    pub expected: Vec<BigInt>,
    #[serde(serialize_with = "big_strings")]
    pub invariant_factors: Vec<BigInt>,
    pub passed: bool,
}

/// Compares the elementary divisors of `SP(c_{2k+1}(Q_d))` with
/// `⊕ Z_{2i+2k+1}^{C(d,i)}`.
pub fn verify_structure(d: usize, k: u64) -> Result<StructureReport> {
    let n = 2 * k + 1;
    let cube = CubeCone::new(d, n)?;
    let s = cube.sandpile().structure();
    let expected = expected_structure(d, n).elementary_divisors;
    Ok(StructureReport {
        d,
        n,
        passed: s.elementary_divisors == expected,
        computed: s.elementary_divisors.clone(),
        expected,
        invariant_factors: s.invariant_factors.clone(),
    })
}

/// `SP(c₂(Q₂))` against the odd-cone formula evaluated at `n = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenConeReport {
    #[serde(serialize_with = "big_strings")]
    pub computed: Vec<BigInt>,
    /// Cyclic orders `2i+2` with multiplicity `C(2,i)`.
    #[serde(serialize_with = "big_strings")]
    pub formula_orders: Vec<BigInt>,
    #[serde(serialize_with = "big_strings")]
    pub formula_divisors: Vec<BigInt>,
    pub orders_agree: bool,
    pub groups_differ: bool,
    pub passed: bool,
}

pub fn verify_even_cone_counterexample() -> Result<EvenConeReport> {
    let cube = CubeCone::new(2, 2)?;
    let s = cube.sandpile().structure();
    let formula = expected_structure(2, 2);
    let formula_orders: Vec<BigInt> = [2, 4, 4, 6].into_iter().map(BigInt::from).collect();
    let orders_agree = s.order == formula.order;
    let groups_differ = s.elementary_divisors != formula.elementary_divisors;
    let eights: Vec<BigInt> = [3, 8, 8].into_iter().map(BigInt::from).collect();
    Ok(EvenConeReport {
        passed: orders_agree && groups_differ && s.elementary_divisors == eights,
        computed: s.elementary_divisors.clone(),
        formula_orders,
        formula_divisors: formula.elementary_divisors,
        orders_agree,
        groups_differ,
    })
}

/// Lattice and element-level checks that `SP(c(Q_d)) = ⊕_β K̃_β`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub d: usize,
    pub rows: usize,
    pub cols: usize,
    /// Whether the toppling vectors together with every `Γ_β` span `Z^{V(Q_d)}`.
    pub spans: bool,
    /// Distinct sums over one element of each `K̃_β`, when enumerated.
    pub distinct_sums: Option<u64>,
    pub expected_sums: u64,
    pub passed: bool,
}

/// Largest dimension for which [`verify_decomposition`] enumerates sums.
pub const ENUMERATE_DIM: usize = 3;

pub fn verify_decomposition(d: usize) -> Result<DecompositionReport> {
    if d > 6 {
        return Err(Error::BoundExceeded(format!("dimension {d} > 6")));
    }
    let cube = CubeCone::new(d, 1)?;
    let pile = cube.sandpile();
    let mut rows: Vec<Vec<i64>> = (0..pile.len()).map(|u| pile.toppling_vector(u)).collect();
    let betas: Vec<BetaVector> = all_betas(d).filter(|b| b.mask != 0).collect();
    for beta in &betas {
        rows.push(cube.gamma_beta(beta)?.into_values());
    }
    let m = IntMatrix::from_rows(&rows)?;
    let diag = smith_diagonal(&m);
    let spans = diag.len() == m.cols() && diag.iter().all(|x| x.is_one());
    let expected_sums: u64 = betas.iter().map(|b| 2 * b.weight() as u64 + 1).product();

    let distinct_sums = if d <= ENUMERATE_DIM {
        let mut sums: HashSet<Vec<i64>> = HashSet::from([pile.identity()?.values().to_vec()]);
        for beta in &betas {
            let k = cube.k_tilde_elements(beta)?;
            let mut next = HashSet::new();
            for s in &sums {
                let s = pile.recurrent(s)?;
                for c in &k.elements {
                    next.insert(pile.add(&s, c)?.into_values());
                }
            }
            sums = next;
        }
        Some(sums.len() as u64)
    } else {
        None
    };
    let order_ok = pile.order() == Some(expected_sums);
    Ok(DecompositionReport {
        d,
        rows: m.rows(),
        cols: m.cols(),
        spans,
        passed: spans && order_ok && distinct_sums.is_none_or(|s| s == expected_sums),
        distinct_sums,
        expected_sums,
    })
}

/// Closed-form versus computed invariant-factor count of `SP(c(Q_d))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IfCountReport {
    pub d: usize,
    pub formula: u64,
    pub computed: u64,
    /// `IF(d) / 2^d`.
    pub ratio: f64,
    pub passed: bool,
}

pub fn verify_if_count(d: usize) -> Result<IfCountReport> {
    if d == 0 {
        return Err(Error::OutOfRange("dimension must be at least 1".into()));
    }
    let cube = CubeCone::new(d, 1)?;
    let computed = cube.sandpile().structure().rank() as u64;
    let formula = if_count(d);
    Ok(IfCountReport {
        d,
        formula,
        computed,
        ratio: computed as f64 / (1u64 << d) as f64,
        passed: formula == computed,
    })
}

/// Sylow comparison between `coker(αβ)` and `coker α ⊕ coker β` for the
/// reduced Laplacians `α`, `β` of `c_{2k+1}(Q_d)` and `c_{2k+3}(Q_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowReport {
    pub d: usize,
    pub k: u64,
    #[serde(serialize_with = "big_strings")]
    pub primes: Vec<BigInt>,
    pub passed: bool,
}

pub fn verify_sylow_product(d: usize, k: u64) -> Result<SylowReport> {
    let a = CubeCone::new(d, 2 * k + 1)?;
    let b = CubeCone::new(d, 2 * k + 3)?;
    let (la, lb) = (a.sandpile().reduced_laplacian(), b.sandpile().reduced_laplacian());
    let product = invariant_factors(&la.mul(lb)?)?;
    let (sa, sb) = (a.sandpile().structure(), b.sandpile().structure());
    let sum = GroupStructure::from_elementary_divisors(
        sa.elementary_divisors.iter().chain(&sb.elementary_divisors).cloned().collect(),
    );
    let two = BigInt::from(2);
    let mut primes: Vec<BigInt> = sum.primes().into_iter().filter(|p| *p != two).collect();
    primes.sort();
    let passed = primes.iter().all(|p| product.sylow(p) == sum.sylow(p));
    Ok(SylowReport { d, k, primes, passed })
}
