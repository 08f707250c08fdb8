use rand::Rng;
use rbds_core::transforms::{FaceCoverRbds, TransformError};
use rbds_core::*;
use rbds_testkit::*;

fn radial(g: &SimpleGraph) -> (PlaneGraph, FaceCoverRbds) {
    let pg = PlaneGraph::embed(g).unwrap();
    let fc = face_cover_to_rbds(&pg).unwrap();
    (pg, fc)
}

#[test]
fn face_cover_examples() {
    let (pg, fc) = radial(&complete(3));
    assert_eq!((fc.graph.num_blue(), fc.graph.num_red()), (2, 3));
    for b in fc.graph.blues() {
        assert_eq!(fc.graph.degree(b), 3);
    }
    assert_eq!(brute_face_cover(&pg), 1);
    assert_eq!(min_rbds(&fc.graph).size(), Some(1));

    let tree = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]);
    let (_, fc) = radial(&tree);
    assert_eq!(fc.graph.num_blue(), 1);
    assert_eq!(fc.graph.degree(vid(1)), 5);
    assert_eq!(min_rbds(&fc.graph).size(), Some(1));
    // vertex 1 has degree 3, so the single face passes it three times
    let mult: Vec<(usize, usize, usize)> = fc.incidences().collect();
    assert!(mult.contains(&(0, 1, 3)) && mult.contains(&(0, 0, 1)));

    let (pg, fc) = radial(&cube());
    assert_eq!((fc.graph.num_blue(), fc.graph.num_red()), (6, 8));
    assert!(fc.graph.blues().all(|b| fc.graph.degree(b) == 4));
    assert_eq!(brute_face_cover(&pg), 2);
    assert_eq!(min_rbds(&fc.graph).size(), Some(2));

    for f in 0..fc.faces.len() {
        assert_eq!(fc.blue_face(fc.face_blue(f)), Some(f));
    }
    for v in 0..8 {
        assert_eq!(fc.red_vertex(fc.vertex_red(v)), Some(v));
        assert!(fc.graph.is_red(fc.vertex_red(v)));
    }
    assert_eq!(fc.blue_face(vid(7)), None);

    let disconnected = PlaneGraph::new(vec![vec![], vec![]]).unwrap();
    assert_eq!(face_cover_to_rbds(&disconnected), Err(TransformError::Disconnected));
}

#[test]
fn face_cover_optimum_matches_brute_force() {
    let mut r = rng(41);
    let mut tested = 0;
    while tested < 400 {
        let n = r.random_range(1..=10);
        let p: f64 = r.random_range(0.2..0.8);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let g = SimpleGraph::from_edges(n, pairs.into_iter().filter(|_| r.random_bool(p)));
        if !g.is_connected() || !is_planar(&g).is_planar() {
            continue;
        }
        let (pg, fc) = radial(&g);
        assert_eq!(min_rbds(&fc.graph).size(), Some(brute_face_cover(&pg)));
        assert!(planarity::rb_is_planar(&fc.graph));
        tested += 1;
    }
}

#[test]
fn to_ds_examples() {
    let out = rbds_to_ds(&Instance::new(rb(1, 1, &[(1, 2)]), 1)).unwrap();
    assert_eq!(out.graph.num_vertices(), 4);
    assert_eq!(out.k, 2);
    assert_eq!(brute_min_ds(&out.graph), 2);
    let ds = min_ds(&out.graph).unwrap();
    assert_eq!(ds.size, 2);
    assert_eq!(ds.witness, vec![0, out.hub]);
    assert_eq!(out.origin, vec![Some(vid(1)), Some(vid(2)), None, None]);
    assert_eq!(out.graph.neighbors(out.pendant), &[out.hub]);

    let no_blues = rb(0, 2, &[]);
    assert_eq!(rbds_to_ds(&Instance::new(no_blues, 0)), Err(TransformError::IsolatedRed(vid(1))));

    let star = rb(1, 3, &[(1, 2), (1, 3), (1, 4)]);
    let out = rbds_to_ds(&Instance::new(star, 1)).unwrap();
    assert_eq!(brute_min_ds(&out.graph), 2);
    assert_eq!(min_ds(&out.graph).unwrap().size, 2);

    let mut same = rb(2, 1, &[(1, 3)]);
    same.add_edge(vid(1), vid(2)).unwrap();
    assert_eq!(rbds_to_ds(&Instance::new(same, 1)), Err(TransformError::SameColorEdge(vid(1), vid(2))));
}

#[test]
fn to_ds_shifts_optimum_by_one() {
    let mut r = rng(42);
    let mut tested = 0;
    for _ in 0..2000 {
        let (g, _) = sanitize(&random_rb(&mut r, 14));
        let Some(opt) = min_rbds(&g).size() else { continue };
        let out = rbds_to_ds(&Instance::new(g, 0)).unwrap();
        assert_eq!(min_ds(&out.graph).unwrap().size, opt + 1);
        tested += 1;
    }
    assert!(tested > 500);
}
