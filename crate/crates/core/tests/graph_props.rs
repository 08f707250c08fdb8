use proptest::prelude::*;
use rbds_core::{sanitize, RBGraph};
use rbds_testkit::*;

#[test]
fn pair_private_contains_single_private_sets_up_to_seven_vertices() {
    let mut checked = 0usize;
    for g in all_sanitized(7) {
        let blues: Vec<_> = g.blues().collect();
        for (i, &v) in blues.iter().enumerate() {
            let pv = g.private_neighborhood(v).unwrap();
            for &w in &blues[i + 1..] {
                let pvw = g.pair_private_neighborhood(v, w).unwrap();
                let pw = g.private_neighborhood(w).unwrap();
                assert!(pv.is_subset(&pvw) && pw.is_subset(&pvw), "{g:?} {v} {w}");
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn adjacency_is_symmetric(g in arb_rb(6)) {
        for u in g.vertices() {
            for v in g.vertices() {
                let uv = g.neighborhood(v).unwrap().contains(&u);
                let vu = g.neighborhood(u).unwrap().contains(&v);
                prop_assert_eq!(uv, vu);
            }
        }
    }

    #[test]
    fn private_sets_match_definition(g in arb_rb(6)) {
        for b in g.blues().collect::<Vec<_>>() {
            let p = g.private_neighborhood(b).unwrap();
            prop_assert_eq!(&p, &private_def(&g, b));
            prop_assert!(p.is_subset(&g.neighborhood(b).unwrap()));
        }
    }

    #[test]
    fn pair_private_sets_are_symmetric_and_inside_union(g in arb_rb(5)) {
        let blues: Vec<_> = g.blues().collect();
        for &v in &blues {
            for &w in &blues {
                if v == w { continue; }
                let p = g.pair_private_neighborhood(v, w).unwrap();
                prop_assert_eq!(&p, &g.pair_private_neighborhood(w, v).unwrap());
                prop_assert_eq!(&p, &pair_private_def(&g, v, w));
                prop_assert!(p.is_subset(&g.pair_neighborhood(v, w).unwrap()));
            }
        }
    }

    #[test]
    fn sanitize_is_idempotent(nb in 1usize..5, nr in 1usize..5, bits in proptest::collection::vec(any::<bool>(), 36)) {
        // arbitrary edges, including same-color ones
        let n = nb + nr;
        let mut g = RBGraph::from_parts(nb, nr, []).unwrap();
        let mut i = 0;
        for u in 1..=n as u32 {
            for v in u + 1..=n as u32 {
                if bits[i % bits.len()] {
                    g.add_edge(vid(u), vid(v)).unwrap();
                }
                i += 1;
            }
        }
        let (once, _) = sanitize(&g);
        let (twice, rep) = sanitize(&once);
        prop_assert_eq!(&once, &twice);
        prop_assert!(rep.is_noop());
        for (u, v) in once.edges() {
            prop_assert_ne!(once.color(u), once.color(v));
        }
    }
}
