// A uniform homomorphism between two small cones and the injection it
// induces on sandpile groups, next to a plain homomorphism that fails the
// uniform clauses.

use rand::rngs::StdRng;
use rand::SeedableRng;
use sandpile::morphism::{classify, find_violation, InjectionOptions};
use sandpile::{validate_hom, HomKind, InducedMap, Multigraph, VertexId, VertexMap};

fn ids(v: &[&str]) -> Vec<VertexId> {
    v.iter().map(|&s| s.into()).collect()
}

fn pairs(v: &[(&str, &str)]) -> Vec<(VertexId, VertexId)> {
    v.iter().map(|&(a, b)| (a.into(), b.into())).collect()
}

pub fn run_example() -> sandpile::Result<()> {
    let g = Multigraph::new(
        &["sG", "u2", "u3", "u4", "u5"],
        &[
            ("u2", "u3", 1),
            ("u3", "u4", 1),
            ("u4", "u5", 1),
            ("u5", "u2", 1),
            ("sG", "u2", 1),
            ("sG", "u4", 1),
            ("sG", "u3", 2),
            ("sG", "u5", 2),
        ],
    )?;
    let h = Multigraph::new(&["sH", "v2", "v3"], &[("sH", "v2", 1), ("sH", "v3", 2), ("v2", "v3", 2)])?;
    let map = VertexMap::new(
        g,
        h,
        &pairs(&[("sG", "sH"), ("u2", "v2"), ("u4", "v2"), ("u3", "v3"), ("u5", "v3")]),
    )?;
    let hom = validate_hom(map, &ids(&["v2", "v3"]), HomKind::Uniform)?;
    let f = InducedMap::new(hom, &"sG".into(), &"sH".into())?;
    println!("SP(H) = {}, SP(G) = {}", f.target().structure(), f.source().structure());

    let gen = f.target().recurrent(&[0, 3])?;
    let img = f.apply(&gen)?;
    println!("f(0,3) = {:?} of order {}", img.values(), f.source().element_order(img.values())?);

    let report = f.verify_injection(&InjectionOptions::default(), &mut StdRng::seed_from_u64(1))?;
    println!("injective homomorphism: {} ({} pairs checked)", report.passed(), report.pairs_checked);

    // C5 onto C3 is a homomorphism, but its fibers have sizes 1, 2, 2.
    let c5 = Multigraph::new(
        &["v1", "v2", "v3", "v4", "v5"],
        &[("v1", "v2", 1), ("v2", "v5", 1), ("v5", "v4", 1), ("v4", "v3", 1), ("v3", "v1", 1)],
    )?;
    let c3 = Multigraph::new(&["u1", "u2", "u3"], &[("u1", "u2", 1), ("u2", "u3", 1), ("u3", "u1", 1)])?;
    let m = VertexMap::new(
        c5,
        c3,
        &pairs(&[("v1", "u1"), ("v2", "u2"), ("v4", "u2"), ("v3", "u3"), ("v5", "u3")]),
    )?;
    println!("{:?}", classify(&m));
    if let Some(v) = find_violation(&m, &ids(&["u1", "u2", "u3"]), HomKind::Uniform)? {
        println!("not uniform: {v}");
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
