//! Exact integer linear algebra: matrices, Smith normal form, cokernels and
//! graph Laplacians.

mod cokernel;
mod laplacian;
mod matrix;
mod snf;

pub use cokernel::{
    invariant_factors, lattice_membership, prime_power_factors, to_big, Cokernel, GroupStructure,
};
pub use laplacian::{laplacian, reduced_laplacian};
pub use matrix::{determinant, IntMatrix};
pub use snf::{smith_diagonal, smith_normal_form, SmithDecomposition};
