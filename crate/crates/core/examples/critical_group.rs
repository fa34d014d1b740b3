// Sandpile groups of a few cones, read off the Smith form of the reduced
// Laplacian.

use sandpile::{cone, cycle_graph, hypercube, Multigraph, Sandpile};

pub fn run_example() -> sandpile::Result<()> {
    let c5 = Sandpile::new(cone(&cycle_graph(5), 1)?)?;
    println!("SP(c(C5)) = {}", c5.structure());

    let q2 = Sandpile::new(cone(&hypercube(2), 1)?)?;
    let s = q2.structure();
    println!("SP(c(Q2)) = {s}, elementary divisors {:?}", s.elementary_divisors);

    // A thick edge: K2 with three parallel edges.
    let k2 = Multigraph::new(&["a", "b"], &[("a", "b", 3)])?;
    let thick = Sandpile::new(cone(&k2, 1)?)?;
    println!("SP(c(K2(3))) has order {}", thick.structure().order);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
