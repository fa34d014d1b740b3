// Toppling a configuration to stability, and checking that the toppling
// order does not matter.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sandpile::{cone, hypercube, Sandpile};

pub fn run_example() -> sandpile::Result<()> {
    let pile = Sandpile::new(cone(&hypercube(2), 1)?)?;
    let s = pile.stabilize(&[3, 2, 3, 2])?;
    println!("s(3,2,3,2) = {:?} after firings {:?}", s.stable, s.firings);

    let start = [9, 0, 4, 7];
    let batch = pile.stabilize(&start)?;
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..5 {
        let one = pile.stabilize_by(&start, |unstable| rng.gen_range(0..unstable.len()))?;
        assert_eq!(one, batch);
    }
    println!("s{start:?} = {:?} under every schedule tried", batch.stable);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
