//! Box products of configurations on cones over cartesian products.
//!
//! Vertex `(u_i, v_j)` of `G□H` sits at index `i + j·|V(G)|` (see
//! [`cartesian_product`]). Since every cone puts its sink last, configuration
//! positions coincide with graph indices on all three cones.

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cone, Multigraph};
use crate::sandpile::{RecurrentConfig, Sandpile};

/// The cones `c_n(G)`, `c_n(H)` and `c_n(G□H)` with aligned vertex orders.
#[derive(Debug)]
pub struct BoxContext {
    n: u64,
    g: Sandpile,
    h: Sandpile,
    product: Sandpile,
}

impl BoxContext {
    pub fn new(g: &Multigraph, h: &Multigraph, n: u64) -> Result<Self> {
        let gh = cartesian_product(g, h);
        Ok(BoxContext {
            n,
            g: Sandpile::new(cone(g, n)?)?,
            h: Sandpile::new(cone(h, n)?)?,
            product: Sandpile::new(cone(&gh, n)?)?,
        })
    }

    pub fn cone_multiplicity(&self) -> u64 {
        self.n
    }

    /// `c_n(G)`.
    pub fn left(&self) -> &Sandpile {
        &self.g
    }

    /// `c_n(H)`.
    pub fn right(&self) -> &Sandpile {
        &self.h
    }

    /// `c_n(G□H)`.
    pub fn product(&self) -> &Sandpile {
        &self.product
    }

    /// Position of `(u_i, v_j)` in configurations on `c_n(G□H)`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        i + j * self.g.len()
    }

    /// `(a□b)_{(u,v)} = a_u + b_v`.
    pub fn box_config(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
        for (c, side) in [(a, &self.g), (b, &self.h)] {
            if c.len() != side.len() {
                return Err(Error::LengthMismatch {
                    expected: side.len(),
                    found: c.len(),
                });
            }
        }
        Ok(b.iter().flat_map(|y| a.iter().map(move |x| x + y)).collect())
    }

    /// Box product of two recurrents, certified recurrent on `c_n(G□H)`.
    pub fn box_recurrent(&self, a: &RecurrentConfig, b: &RecurrentConfig) -> Result<RecurrentConfig> {
        if !self.g.owns(a) || !self.h.owns(b) {
            return Err(Error::GraphMismatch);
        }
        self.product.recurrent(&self.box_config(a.values(), b.values())?)
    }

    /// `π̃_G(a) = a □ e_H`. The result must be recurrent as it stands, which
    /// holds for `n = 1`; use [`hat_pi`](Self::hat_pi) otherwise.
    pub fn pi_tilde(&self, a: &RecurrentConfig) -> Result<RecurrentConfig> {
        self.box_recurrent(a, self.h.identity()?)
    }

    /// `π̃_H(b) = e_G □ b`.
    pub fn pi_tilde_right(&self, b: &RecurrentConfig) -> Result<RecurrentConfig> {
        self.box_recurrent(self.g.identity()?, b)
    }

    /// The recurrent representative of `a □ e_H`. For `n > 1` the box vector
    /// may be unstable, and the resulting map depends on that choice of
    /// representative; it is not canonical.
    pub fn hat_pi(&self, a: &RecurrentConfig) -> Result<RecurrentConfig> {
        if !self.g.owns(a) {
            return Err(Error::GraphMismatch);
        }
        let raw = self.box_config(a.values(), self.h.identity()?.values())?;
        self.product.recurrent_representative(&raw)
    }
}
