// Cones with several edges to the sink: the hat-K̂ subgroups of c3(Q2) and
// the even cone where the odd-cone formula breaks down.

use sandpile::hypercube::{all_betas, verify_even_cone_counterexample};
use sandpile::{hypercube, BoxContext, CubeCone};

pub fn run_example() -> sandpile::Result<()> {
    let q = CubeCone::new(2, 3)?;
    println!("SP(c3(Q2)) = {}", q.sandpile().structure());
    for beta in all_betas(2) {
        let k = q.hat_k_elements(&beta)?;
        println!("β = {beta}: order {}, {:?}", k.subgroup.order, k.sorted_raw());
    }

    // Boxing with the identity of c3(Q1) leaves the stable range.
    let ctx = BoxContext::new(&hypercube(1), &hypercube(1), 3)?;
    let e = ctx.left().identity()?;
    println!("{:?} □ {:?} = {:?}", e.values(), e.values(), ctx.box_config(e.values(), e.values())?);
    println!("its representative: {:?}", ctx.hat_pi(e)?.values());

    let r = verify_even_cone_counterexample()?;
    println!("SP(c2(Q2)) divisors {:?} vs formula {:?}", r.computed, r.formula_divisors);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
