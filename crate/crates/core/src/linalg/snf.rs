//! Smith normal form over the integers.
//!
//! Pivoting always takes the nonzero entry of least absolute value in the
//! working block and reduces its row and column modulo the pivot before any
//! further elimination. The procedure is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Unimodular `u`, `v` and diagonal `d` with `u · a · v = d`, where the
/// diagonal entries are nonnegative and each divides the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The `min(rows, cols)` diagonal entries of `d`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

struct Worker {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Worker {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row_multiple(dst, src, q);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, q);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col_multiple(dst, src, q);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Position of the least nonzero |entry| in the block starting at `t`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if x.abs().is_one() {
                    return Some((i, j));
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Least nonzero entry of column `t` / row `t` outside the pivot.
    fn min_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let col = (t + 1..self.a.rows()).map(|i| (i, t));
        let row = (t + 1..self.a.cols()).map(|j| (t, j));
        col.chain(row)
            .filter(|&p| !self.a[p].is_zero())
            .min_by(|&p, &q| self.a[p].abs().cmp(&self.a[q].abs()))
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        for t in 0..rows.min(cols) {
            let Some((pi, pj)) = self.min_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a[(t, t)].clone();
                for i in t + 1..rows {
                    if !self.a[(i, t)].is_zero() {
                        let q = nearest_quotient(&self.a[(i, t)], &p);
                        self.add_row(i, t, &-q);
                    }
                }
                for j in t + 1..cols {
                    if !self.a[(t, j)].is_zero() {
                        let q = nearest_quotient(&self.a[(t, j)], &p);
                        self.add_col(j, t, &-q);
                    }
                }
                if let Some((i, j)) = self.min_in_cross(t) {
                    // A remainder smaller than the pivot survived.
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                let bad = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&p))
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// `q` with `|x - q·p|` minimal (ties toward the floor quotient).
fn nearest_quotient(x: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(p);
    // r has the sign of p and |r| < |p|.
    if (&r * 2u8).abs() > p.abs() {
        q + 1
    } else {
        q
    }
}

/// Full decomposition with transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut w = Worker {
        a: a.clone(),
        u: Some(IntMatrix::identity(a.rows())),
        v: Some(IntMatrix::identity(a.cols())),
    };
    w.run();
    SmithDecomposition {
        u: w.u.expect("tracked"),
        d: w.a,
        v: w.v.expect("tracked"),
    }
}

/// Diagonal of the Smith form only; skips the transforms.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    let mut w = Worker {
        a: a.clone(),
        u: None,
        v: None,
    };
    w.run();
    (0..a.rows().min(a.cols())).map(|i| w.a[(i, i)].clone()).collect()
}
