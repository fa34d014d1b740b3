// Collapsing a biregular bipartite graph onto a thick edge. With unequal
// side degrees the target is a digraph and the induced map is checked on
// lattice classes.

use rand::rngs::StdRng;
use rand::SeedableRng;
use sandpile::morphism::{bipartite_collapse_hom, InjectionOptions};
use sandpile::{Multigraph, VertexId};

pub fn run_example() -> sandpile::Result<()> {
    // K_{2,3}: the pair side has degree 3, the triple side degree 2.
    let left = ["a1", "a2"];
    let right = ["b1", "b2", "b3"];
    let mut edges = Vec::new();
    for a in left {
        for b in right {
            edges.push((a, b, 1));
        }
    }
    let verts: Vec<&str> = left.iter().chain(&right).copied().collect();
    let k23 = Multigraph::new(&verts, &edges)?;
    let v1: Vec<VertexId> = left.iter().map(|&s| s.into()).collect();
    let v2: Vec<VertexId> = right.iter().map(|&s| s.into()).collect();

    let f = bipartite_collapse_hom(&k23, &v1, &v2)?;
    println!("kind: {}", f.hom().kind().as_str());
    println!("SP(c(K2(3,2))) = {}", f.target().structure());
    println!("SP(c(K_{{2,3}})) = {}", f.source().structure());
    let report = f.verify_injection(&InjectionOptions::default(), &mut StdRng::seed_from_u64(5))?;
    println!("well defined: {}, image order {}", report.well_defined, report.image_order);
    println!("injective homomorphism: {}", report.passed());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
