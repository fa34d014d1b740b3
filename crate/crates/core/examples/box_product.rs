// Box products of configurations and the injection of SP(c(G)) into
// SP(c(G□H)).

use sandpile::{complete_graph, cycle_graph, BoxContext};

pub fn run_example() -> sandpile::Result<()> {
    let ctx = BoxContext::new(&cycle_graph(5), &complete_graph(2), 1)?;
    let c = ctx.box_config(&[2, 1, 5, 4, 3], &[1, 2])?;
    println!("(2,1,5,4,3) □ (1,2) = {c:?}");
    println!("SP(c(C5□K2)) = {}", ctx.product().structure());

    let a = ctx.left().recurrent(&[2, 1, 1, 1, 1])?;
    let img = ctx.pi_tilde(&a)?;
    println!("π(2,1,1,1,1) = {:?}, order {}", img.values(), ctx.product().element_order(img.values())?);

    let b = ctx.right().recurrent(&[1, 0])?;
    let img = ctx.pi_tilde_right(&b)?;
    println!("π(1,0) = {:?}, order {}", img.values(), ctx.product().element_order(img.values())?);

    // Boxing with the identity sends the identity to the identity.
    assert_eq!(&ctx.pi_tilde(ctx.left().identity()?)?, ctx.product().identity()?);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
