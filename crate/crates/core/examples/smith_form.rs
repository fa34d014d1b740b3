// Smith normal form with its unimodular transforms, and membership in the
// row lattice of a matrix.

use sandpile::linalg::{determinant, lattice_membership};
use sandpile::{smith_normal_form, IntMatrix};

pub fn run_example() -> sandpile::Result<()> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let s = smith_normal_form(&a);
    println!("diagonal: {:?}", s.diagonal());
    assert_eq!(s.u.mul(&a)?.mul(&s.v)?, s.d);
    println!("det = {}", determinant(&a)?);

    let l = IntMatrix::from_rows(&[vec![3, -1], vec![-1, 3]])?;
    let inside = lattice_membership(&l, &[2.into(), 2.into()])?;
    let outside = lattice_membership(&l, &[1.into(), 0.into()])?;
    println!("(2,2) in the lattice: {}, (1,0): {}", inside.is_some(), outside.is_some());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
