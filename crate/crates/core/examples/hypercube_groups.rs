// The cyclic subgroups K̃_β of SP(c(Q_d)) and the checks that they add up
// to the whole group.

use sandpile::hypercube::{all_betas, verify_decomposition, verify_if_count, verify_structure};
use sandpile::CubeCone;

pub fn run_example() -> sandpile::Result<()> {
    let q = CubeCone::new(2, 1)?;
    for beta in all_betas(2) {
        let k = q.k_tilde_elements(&beta)?;
        let elems: Vec<&[i64]> = k.elements.iter().map(|c| c.values()).collect();
        println!("β = {beta}: Γ = {:?}, order {}, elements {elems:?}", k.generator.values(), k.order);
    }

    for d in 1..=4 {
        let r = verify_structure(d, 1)?;
        println!("SP(c3(Q{d})) elementary divisors {:?} match: {}", r.computed, r.passed);
    }
    let r = verify_decomposition(3)?;
    println!("d = 3: spans {}, {:?} distinct sums of {}", r.spans, r.distinct_sums, r.expected_sums);
    let r = verify_if_count(5)?;
    println!("IF(5) = {} (computed {})", r.formula, r.computed);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
