//! Finite abelian groups presented as cokernels, and lattice membership.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::{smith_diagonal, smith_normal_form};
use crate::error::{Error, Result};

/// A finite abelian group `⊕ Z_{dᵢ}` in both standard presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    /// Divisibility chain `d₁ | d₂ | …`, all `> 1`.
    pub invariant_factors: Vec<BigInt>,
    /// Prime powers, sorted ascending.
    pub elementary_divisors: Vec<BigInt>,
    pub order: BigInt,
}

impl GroupStructure {
    /// From a Smith diagonal. Ones are dropped; zeros mean a free summand.
    pub fn from_smith_diagonal(diag: &[BigInt]) -> Result<Self> {
        let free = diag.iter().filter(|d| d.is_zero()).count();
        if free > 0 {
            return Err(Error::InfiniteCokernel(free));
        }
        let invariant_factors: Vec<BigInt> =
            diag.iter().filter(|d| !d.is_one()).map(|d| d.abs()).collect();
        Ok(Self::from_invariant_factors(invariant_factors))
    }

    fn from_invariant_factors(invariant_factors: Vec<BigInt>) -> Self {
        let mut elementary_divisors: Vec<BigInt> = invariant_factors
            .iter()
            .flat_map(prime_power_factors)
            .collect();
        elementary_divisors.sort();
        let order = invariant_factors.iter().product();
        GroupStructure {
            invariant_factors,
            elementary_divisors,
            order,
        }
    }

    /// The group `⊕ Z_{mᵢ}` for arbitrary positive cyclic orders `mᵢ`.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let mut elementary: Vec<BigInt> = orders.iter().flat_map(prime_power_factors).collect();
        elementary.sort();
        Self::from_elementary_divisors(elementary)
    }

    /// Rebuilds the invariant-factor chain from prime powers.
    pub fn from_elementary_divisors(mut elementary: Vec<BigInt>) -> Self {
        elementary.sort();
        // Group powers by prime, largest power first.
        let mut by_prime: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
        for q in &elementary {
            let p = smallest_prime_factor(q);
            match by_prime.iter_mut().find(|(pp, _)| *pp == p) {
                Some((_, v)) => v.push(q.clone()),
                None => by_prime.push((p, vec![q.clone()])),
            }
        }
        let len = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![BigInt::one(); len];
        for (_, mut powers) in by_prime {
            powers.sort_by(|a, b| b.cmp(a));
            for (k, q) in powers.into_iter().enumerate() {
                factors[len - 1 - k] *= q;
            }
        }
        let order = factors.iter().product();
        GroupStructure {
            invariant_factors: factors,
            elementary_divisors: elementary,
            order,
        }
    }

    pub fn trivial() -> Self {
        Self::from_invariant_factors(Vec::new())
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Prime powers for the prime `p` (its Sylow-`p` part).
    pub fn sylow(&self, p: &BigInt) -> Vec<BigInt> {
        self.elementary_divisors
            .iter()
            .filter(|q| q.is_multiple_of(p))
            .cloned()
            .collect()
    }

    /// Primes dividing the order.
    pub fn primes(&self) -> Vec<BigInt> {
        let mut ps: Vec<BigInt> = self
            .elementary_divisors
            .iter()
            .map(smallest_prime_factor)
            .collect();
        ps.dedup();
        ps
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z_{d}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn smallest_prime_factor(n: &BigInt) -> BigInt {
    if let Some(m) = n.to_u128() {
        if m < 2 {
            return n.clone();
        }
        let mut p = 2u128;
        while p * p <= m {
            if m % p == 0 {
                return p.into();
            }
            p += if p == 2 { 1 } else { 2 };
        }
        return n.clone();
    }
    let mut p = BigInt::from(2);
    while &p * &p <= *n {
        if n.is_multiple_of(&p) {
            return p;
        }
        p += 1;
    }
    n.clone()
}

/// Prime-power factors of `n > 0`, one entry per distinct prime.
pub fn prime_power_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    while n > BigInt::one() {
        let p = smallest_prime_factor(&n);
        let mut q = BigInt::one();
        while n.is_multiple_of(&p) {
            n /= &p;
            q *= &p;
        }
        out.push(q);
    }
    out
}

/// Structure of `Z^rows / Im A`, i.e. the cokernel of `a`.
pub fn invariant_factors(a: &IntMatrix) -> Result<GroupStructure> {
    let mut diag = smith_diagonal(a);
    // Missing diagonal positions of a wide/tall matrix are free summands.
    diag.resize(a.rows().max(diag.len()), BigInt::zero());
    GroupStructure::from_smith_diagonal(&diag)
}

/// The group `Z^n / Im Aᵗ` (the row lattice of a square `a`), with class
/// coordinates read off a Smith decomposition of `Aᵗ`.
#[derive(Debug, Clone)]
pub struct Cokernel {
    relations: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    diag: Vec<BigInt>,
}

impl Cokernel {
    pub fn new(a: &IntMatrix) -> Self {
        let t = a.transpose();
        let s = smith_normal_form(&t);
        let mut diag = s.diagonal();
        diag.resize(t.rows(), BigInt::zero());
        Cokernel {
            relations: a.clone(),
            u: s.u,
            v: s.v,
            diag,
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn structure(&self) -> Result<GroupStructure> {
        GroupStructure::from_smith_diagonal(&self.diag)
    }

    /// Smith diagonal of `Aᵗ`, padded to the ambient dimension.
    pub fn smith_diagonal(&self) -> &[BigInt] {
        &self.diag
    }

    fn raw_coordinates(&self, w: &[BigInt]) -> Result<Vec<BigInt>> {
        self.u.apply(w)
    }

    /// Canonical class coordinates: `(U·w)ᵢ mod dᵢ` for each `dᵢ ≠ 1`.
    pub fn class_of(&self, w: &[BigInt]) -> Result<Vec<BigInt>> {
        let c = self.raw_coordinates(w)?;
        Ok(c.into_iter()
            .zip(&self.diag)
            .filter(|(_, d)| !d.is_one())
            .map(|(x, d)| if d.is_zero() { x } else { x.mod_floor(d) })
            .collect())
    }

    pub fn class_of_i64(&self, w: &[i64]) -> Result<Vec<BigInt>> {
        self.class_of(&to_big(w))
    }

    /// `y` with `Aᵗ y = w`, if `w` lies in the row lattice.
    pub fn witness(&self, w: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        let c = self.raw_coordinates(w)?;
        let mut z = Vec::with_capacity(c.len());
        for (x, d) in c.iter().zip(&self.diag) {
            if d.is_zero() {
                if !x.is_zero() {
                    return Ok(None);
                }
                z.push(BigInt::zero());
            } else {
                let (q, r) = x.div_rem(d);
                if !r.is_zero() {
                    return Ok(None);
                }
                z.push(q);
            }
        }
        z.resize(self.v.cols(), BigInt::zero());
        let y = self.v.apply(&z)?;
        debug_assert_eq!(self.relations.transpose().apply(&y)?, w);
        Ok(Some(y))
    }

    pub fn contains(&self, w: &[BigInt]) -> Result<bool> {
        Ok(self.witness(w)?.is_some())
    }

    pub fn contains_i64(&self, w: &[i64]) -> Result<bool> {
        self.contains(&to_big(w))
    }

    /// Order of the class of `w`; `None` when it has infinite order.
    pub fn order_of(&self, w: &[BigInt]) -> Result<Option<BigInt>> {
        let c = self.raw_coordinates(w)?;
        let mut order = BigInt::one();
        for (x, d) in c.iter().zip(&self.diag) {
            if d.is_zero() {
                if !x.is_zero() {
                    return Ok(None);
                }
                continue;
            }
            let k = d / x.gcd(d);
            order = order.lcm(&k);
        }
        Ok(Some(order))
    }
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `y` with `Aᵗ y = v` over the integers, if one exists. The witness is
/// checked by multiplication before it is returned.
pub fn lattice_membership(a: &IntMatrix, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if v.len() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for {} columns",
            v.len(),
            a.cols()
        )));
    }
    let ck = Cokernel::new(a);
    let y = ck.witness(v)?;
    if let Some(y) = &y {
        if a.transpose().apply(y)? != v {
            return Err(Error::PreconditionViolated("lattice witness failed verification".into()));
        }
    }
    Ok(y)
}
