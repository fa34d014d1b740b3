// Mapping arbitrary integer vectors to the recurrent configuration in their
// class, on an undirected cone and on a digraph.

use sandpile::{cone, k2_thick, path_graph, Sandpile};

pub fn run_example() -> sandpile::Result<()> {
    let pile = Sandpile::new(cone(&path_graph(3), 1)?)?;
    for x in [[0, 0, 0], [-5, 7, 2], [100, -3, 0]] {
        let r = pile.recurrent_representative(&x)?;
        println!("{x:?} ~ {:?}", r.values());
        assert!(pile.congruent(&x, r.values())?);
    }

    let d = Sandpile::new(k2_thick(2, 3)?)?;
    println!("SP(c(K2(2,3))) = {}", d.structure());
    let r = d.recurrent_representative(&[-4, 9])?;
    println!("(-4,9) ~ {:?} on the digraph", r.values());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
