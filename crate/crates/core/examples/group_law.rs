// Recurrent configurations as group elements: burning certificates, the
// identity, sums and orders.

use sandpile::sandpile::Certificate;
use sandpile::{cone, cycle_graph, Sandpile};

pub fn run_example() -> sandpile::Result<()> {
    let pile = Sandpile::new(cone(&cycle_graph(5), 1)?)?;
    let e = pile.identity()?;
    println!("identity of c(C5): {:?}", e.values());

    let a = pile.recurrent(&[2, 1, 1, 1, 1])?;
    if let Certificate::Burning(order) = a.certificate() {
        println!("(2,1,1,1,1) burns in the order {order:?}");
    }
    let b = pile.recurrent(&[1, 2, 1, 1, 1])?;
    let sum = pile.add(&a, &b)?;
    println!("(2,1,1,1,1) + (1,2,1,1,1) = {:?}", sum.values());
    println!("order of (2,1,1,1,1): {}", pile.element_order(a.values())?);
    println!("inverse of (2,1,1,1,1): {:?}", pile.inverse(&a)?.values());

    let all = pile.recurrents(1_000)?;
    println!("{} recurrent configurations", all.len());
    assert!(pile.recurrent(&[0, 0, 0, 0, 0]).is_err());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
