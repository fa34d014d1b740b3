//! Sandpile groups of multigraphs and digraphs.
//!
//! The crate computes the group `SP(G, s) = Z^Ṽ / Im L(G,s)ᵗ` exactly via
//! Smith normal forms, runs the chip-firing dynamics on configurations, and
//! checks the maps between sandpile groups induced by uniform
//! homomorphisms, box products and hypercube collapses.
//!
//! ```
//! use sandpile::{cone, cycle_graph, Sandpile};
//!
//! let pile = Sandpile::new(cone(&cycle_graph(5), 1)?)?;
//! assert_eq!(pile.structure().to_string(), "Z_11 + Z_11");
//! assert_eq!(pile.identity()?.values(), &[2, 2, 2, 2, 2]);
//! # Ok::<(), sandpile::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod graph;
pub mod hypercube;
pub mod io;
pub mod linalg;
pub mod morphism;
pub mod product;
pub mod sandpile;

pub use error::{Error, Result};
pub use graph::{
    b_digraph, cartesian_product, complete_graph, cone, contract, cycle_graph, hypercube, k2_thick,
    path_graph, q_beta_subgraph, Digraph, Graph, Multigraph, SinkedGraph, VertexId,
};
pub use hypercube::{BetaVector, CubeCone};
pub use linalg::{smith_normal_form, Cokernel, GroupStructure, IntMatrix};
pub use morphism::{validate_hom, HomKind, InducedMap, UniformHom, VertexMap};
pub use product::BoxContext;
pub use sandpile::{RecurrentConfig, Sandpile};
