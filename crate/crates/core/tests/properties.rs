//! Property tests over randomly generated graphs, configurations and
//! matrices.

mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use sandpile::io::{graph_json, parse_graph, render};
use sandpile::{cone, smith_normal_form, BoxContext, IntMatrix, Sandpile, SinkedGraph};

use common::{bareiss, matmul, mults_of, Mults, Naive};

/// Connected multigraphs on 2..=max vertices (last one is the sink), with a
/// spanning path so every draw is connected.
fn mults(max: usize) -> impl Strategy<Value = Mults> {
    (2..=max).prop_flat_map(|n| {
        proptest::collection::vec(0u64..=2, n * (n - 1) / 2).prop_map(move |flat| {
            let mut m = vec![vec![0; n]; n];
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let w = flat[k] + u64::from(v == u + 1 && flat[k] == 0);
                    m[u][v] = w;
                    m[v][u] = w;
                    k += 1;
                }
            }
            Mults(m)
        })
    })
}

fn pile_of(m: &Mults) -> Sandpile {
    Sandpile::new(SinkedGraph::new(m.to_graph(), &m.sink()).unwrap()).unwrap()
}

fn with_config(max: usize, hi: i64) -> impl Strategy<Value = (Mults, Vec<i64>)> {
    mults(max).prop_flat_map(move |m| {
        let k = m.len() - 1;
        (Just(m), proptest::collection::vec(-hi..=hi, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn smith_form_postconditions(rows in proptest::collection::vec(proptest::collection::vec(-20i64..=20, 1..6), 1..6)) {
        let c = rows[0].len();
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|mut r| { r.resize(c, 0); r }).collect();
        let a = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&a);
        let d = s.d.to_rows();
        prop_assert_eq!(matmul(&matmul(&s.u.to_rows(), &a.to_rows()), &s.v.to_rows()), d.clone());
        prop_assert_eq!(bareiss(&s.u.to_rows()).abs(), BigInt::from(1));
        prop_assert_eq!(bareiss(&s.v.to_rows()).abs(), BigInt::from(1));
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                prop_assert!(i == j || x.is_zero());
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
    }

    #[test]
    fn stabilization_ignores_schedule((m, c) in with_config(6, 12), seed in any::<u64>()) {
        let p = pile_of(&m);
        let c: Vec<i64> = c.into_iter().map(i64::abs).collect();
        let batch = p.stabilize(&c).unwrap();
        let mut state = seed;
        let picked = p.stabilize_by(&c, |u| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % u.len()
        }).unwrap();
        prop_assert_eq!(&picked, &batch);
        prop_assert_eq!(batch.stable, Naive::new(&m).stabilize(&c));
    }

    #[test]
    fn representative_is_congruent_and_recurrent((m, x) in with_config(6, 15)) {
        let p = pile_of(&m);
        let r = p.recurrent_representative(&x).unwrap();
        prop_assert!(p.congruent(r.values(), &x).unwrap());
        prop_assert!(Naive::new(&m).burns(r.values()));
    }

    #[test]
    fn burning_agrees_with_orbit(m in mults(5)) {
        let naive = Naive::new(&m);
        let orbit = naive.orbit();
        let p = pile_of(&m);
        for c in naive.stable_configs() {
            prop_assert_eq!(p.burning(&c).unwrap().is_some(), orbit.contains(&c));
        }
    }

    #[test]
    fn box_preserves_stable_and_recurrent(g in mults(4), h in mults(3), seed in any::<u64>()) {
        let ctx = BoxContext::new(&g.to_graph(), &h.to_graph(), 1).unwrap();
        let (gl, hl) = (Naive::new(&mults_of(ctx.left().graph())), Naive::new(&mults_of(ctx.right().graph())));
        let prod = Naive::new(&mults_of(ctx.product().graph()));
        let pick = |cs: Vec<Vec<i64>>, k: u64| cs[(k as usize) % cs.len()].clone();
        let (a, b) = (pick(gl.stable_configs(), seed), pick(hl.stable_configs(), seed >> 32));
        prop_assert!(prod.is_stable(&ctx.box_config(&a, &b).unwrap()));
        let mut ro: Vec<Vec<i64>> = gl.orbit().into_iter().collect();
        ro.sort();
        let mut rh: Vec<Vec<i64>> = hl.orbit().into_iter().collect();
        rh.sort();
        let (a, b) = (pick(ro, seed), pick(rh, seed >> 32));
        prop_assert!(prod.burns(&ctx.box_config(&a, &b).unwrap()));
    }

    #[test]
    fn hat_pi_is_congruent_and_recurrent(g in mults(4), h in mults(3), n in 2u64..=3, seed in any::<u64>()) {
        let ctx = BoxContext::new(&g.to_graph(), &h.to_graph(), n).unwrap();
        let mut rg: Vec<Vec<i64>> = Naive::new(&mults_of(ctx.left().graph())).orbit().into_iter().collect();
        rg.sort();
        let a = &rg[(seed as usize) % rg.len()];
        let e_h = ctx.right().identity().unwrap().values().to_vec();
        let r = ctx.hat_pi(&ctx.left().recurrent(a).unwrap()).unwrap();
        prop_assert!(Naive::new(&mults_of(ctx.product().graph())).burns(r.values()));
        prop_assert!(ctx.product().congruent(r.values(), &ctx.box_config(a, &e_h).unwrap()).unwrap());
    }

    #[test]
    fn graph_json_round_trip(m in mults(6), n in 0u64..=2) {
        let g = if n == 0 { m.to_graph() } else { cone(&m.to_graph(), n).unwrap().graph().as_undirected().unwrap().clone() };
        let sink = m.sink();
        let text = render(&graph_json(&g.clone().into(), Some(&sink)));
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.graph, g.into());
        prop_assert_eq!(back.sink, Some(sink));
    }
}
