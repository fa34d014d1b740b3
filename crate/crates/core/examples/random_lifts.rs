// Random covering-style lifts: each one comes with a uniform homomorphism
// onto the base graph, so its sandpile group contains a copy of the base's.

use rand::rngs::StdRng;
use rand::SeedableRng;
use sandpile::morphism::{random_lift, InjectionOptions};
use sandpile::Multigraph;

pub fn run_example() -> sandpile::Result<()> {
    let h = Multigraph::new(&["s", "x", "y"], &[("s", "x", 1), ("x", "y", 2), ("y", "s", 1)])?;
    let mut rng = StdRng::seed_from_u64(11);
    for k in 1..=3 {
        let f = random_lift(&h, &"s".into(), k, &mut rng)?;
        let report = f.verify_injection(&InjectionOptions::default(), &mut rng)?;
        println!(
            "degree {k}: SP(H) = {} into SP(G) = {}, passed {}",
            f.target().structure(),
            f.source().structure(),
            report.passed()
        );
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
