use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::{determinant, IntMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, SinkedGraph};

/// `L(G)`: out-degrees on the diagonal, `-m_{(u,v)}` off it.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    IntMatrix::from_fn(n, n, |u, v| {
        if u == v {
            BigInt::from(g.out_degree(u))
        } else {
            -BigInt::from(g.mult(u, v))
        }
    })
}

/// `L(G, s)`: the Laplacian without the sink row and column, indexed in
/// configuration order. Rows are the toppling vectors `Δ_u`.
pub fn reduced_laplacian(g: &SinkedGraph) -> Result<IntMatrix> {
    let graph = g.graph();
    let ns = g.nonsink();
    let m = IntMatrix::from_fn(ns.len(), ns.len(), |i, j| {
        let (u, v) = (ns[i], ns[j]);
        if u == v {
            BigInt::from(graph.out_degree(u))
        } else {
            -BigInt::from(graph.mult(u, v))
        }
    });
    if determinant(&m)?.is_zero() {
        return Err(Error::SingularReducedLaplacian);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cone, cycle_graph, hypercube, k2_thick, Multigraph};
    use crate::linalg::invariant_factors;

    fn small(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.try_into().unwrap()).collect())
            .collect()
    }

    #[test]
    fn k2_laplacian() {
        let l = laplacian(&complete_graph(2).into());
        assert_eq!(small(&l), vec![vec![1, -1], vec![-1, 1]]);
    }

    #[test]
    fn triangle_diagonal() {
        let c = cone(&complete_graph(2), 1).unwrap();
        let l = laplacian(c.graph());
        assert!((0..3).all(|i| l[(i, i)] == 2.into()));
    }

    #[test]
    fn thick_digraph_block() {
        let g = k2_thick(2, 3).unwrap();
        assert_eq!(small(&reduced_laplacian(&g).unwrap()), vec![vec![3, -2], vec![-3, 4]]);
    }

    #[test]
    fn cone_determinants() {
        let d = |g: &Multigraph| determinant(&reduced_laplacian(&cone(g, 1).unwrap()).unwrap()).unwrap();
        assert_eq!(d(&hypercube(1)), 3.into());
        assert_eq!(d(&cycle_graph(5)), 121.into());
        assert_eq!(d(&hypercube(2)), 45.into());
        let l = reduced_laplacian(&cone(&hypercube(1), 3).unwrap()).unwrap();
        assert_eq!(determinant(&l).unwrap(), 15.into());
    }

    #[test]
    fn disconnected_is_singular() {
        let g = Multigraph::new(&["a", "b", "c"], &[("a", "b", 1)]).unwrap();
        let sg = SinkedGraph::new(g, &"a".into()).unwrap();
        assert_eq!(reduced_laplacian(&sg), Err(Error::SingularReducedLaplacian));
    }

    #[test]
    fn invariant_factors_independent_of_sink() {
        let g = crate::graph::cartesian_product(&cycle_graph(3), &complete_graph(2));
        let base = {
            let sg = SinkedGraph::new(g.clone(), &g.labels()[0]).unwrap();
            invariant_factors(&reduced_laplacian(&sg).unwrap()).unwrap()
        };
        for s in g.labels() {
            let sg = SinkedGraph::new(g.clone(), s).unwrap();
            assert_eq!(invariant_factors(&reduced_laplacian(&sg).unwrap()).unwrap(), base);
        }
    }
}
