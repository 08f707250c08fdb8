use rbds_cli::format::{has_file_layout, no_instance, renumber, SeedLine};
use rbds_cli::plane_io::{parse_edge_list, parse_plane, write_edge_list, write_plane};
use rbds_cli::{parse_instance, parse_solution, parse_trace, write_instance, write_solution, write_trace};
use rbds_cli::{InstanceFile, TraceFile};
use rbds_core::generators::{gen_grid, gen_matching, gen_random_planar, RNG_ALGORITHM};
use rbds_core::{kernelize, min_rbds, Instance, PlaneGraph, RBGraph, SimpleGraph, Solution, VertexId};

fn generated() -> Vec<InstanceFile> {
    let mut out = vec![InstanceFile::new(gen_grid(1, 1)), InstanceFile::new(gen_grid(7, 3))];
    out.extend((1..6).map(|m| InstanceFile::new(gen_matching(m))));
    for seed in 0..20 {
        out.push(InstanceFile {
            instance: gen_random_planar(5 + seed as usize * 7, 0.75, seed),
            seed: Some(SeedLine { algorithm: RNG_ALGORITHM.into(), seed }),
        });
    }
    out
}

#[test]
fn instance_round_trip() {
    for file in generated() {
        assert!(has_file_layout(&file.instance.graph));
        let text = write_instance(&file);
        assert_eq!(parse_instance(&text).unwrap(), file, "{text}");
    }
}

#[test]
fn header_comments_and_blank_lines() {
    let text = "c hello\n\np rbds 2 1 1\nc between\ne 1 3\ne 2 3\n";
    let f = parse_instance(text).unwrap();
    assert_eq!(f.instance.k, 1);
    assert_eq!(f.instance.graph.num_edges(), 2);
    assert_eq!(f.seed, None);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let cases: &[(&str, usize)] = &[
        ("p rbds 2\n", 1),
        ("c x\ne 1 2\np rbds 1 1 0\n", 2),
        ("p rbds 1 1 0\np rbds 1 1 0\n", 2),
        ("p rbds 1 1 0\ne 1 1\n", 2),
        ("p rbds 1 1 0\ne 2 1\n", 2),
        ("p rbds 1 2 0\ne 1 2\ne 1 3\ne 1 2\n", 4),
        ("p rbds 1 1 -1\n", 1),
        ("p rbds 1 1 0\nx 1\n", 2),
        ("p rbds 1 1 0\ne 1 2 3\n", 2),
        ("p graph 1 1 0\n", 1),
        ("c only comments\n", 1),
        ("p rbds 1 1 0\n\n\ne 1 x\n", 4),
    ];
    for &(text, line) in cases {
        let e = parse_instance(text).unwrap_err();
        assert_eq!(e.line, line, "{text:?}: {e}");
        assert!(e.to_string().starts_with(&format!("line {line}:")));
    }
}

#[test]
fn renumber_inverts_to_original_ids() {
    let r = kernelize(&gen_grid(6, 7)).unwrap();
    let kernel = r.kernel().expect("reduced");
    assert!(kernel.graph.num_edges() > 0);
    let (g, order) = renumber(&kernel.graph);
    assert!(has_file_layout(&g));
    for (u, v) in g.edges() {
        assert!(kernel.graph.has_edge(order[u.index() - 1], order[v.index() - 1]));
    }
    assert_eq!(g.num_edges(), kernel.graph.num_edges());
}

#[test]
fn solution_round_trip() {
    let sol = Solution::new([VertexId(3), VertexId(1), VertexId(7)]);
    let text = write_solution(&sol);
    assert_eq!(text, "s 1 3 7\n");
    assert_eq!(parse_solution(&text).unwrap(), sol);
    assert_eq!(parse_solution("c x\nOPT 3\ns 1 3 7\n").unwrap(), sol);
    assert_eq!(parse_solution("s\n").unwrap(), Solution::default());
    assert_eq!(parse_solution("s 1\ns 2\n").unwrap_err().line, 2);
    assert_eq!(parse_solution("s 1 a\n").unwrap_err().line, 1);
    assert!(parse_solution("").is_err());
}

#[test]
fn trace_round_trip() {
    let mut insts: Vec<Instance> = (0..30).map(|s| gen_random_planar(30 + s as usize, 0.9, s)).collect();
    insts.push(gen_grid(6, 6));
    insts.push(gen_matching(4));
    let mut mat = gen_matching(4);
    mat.k = 2;
    insts.push(mat);
    for inst in insts {
        let r = kernelize(&inst).unwrap();
        let kernel_ids = r.kernel().map(|k| renumber(&k.graph).1).unwrap_or_default();
        let file = TraceFile { trace: r.trace().clone(), k: inst.k, kernel_ids };
        let text = write_trace(&file);
        assert!(text.lines().filter(|l| l.starts_with('r')).all(|l| l.split('\t').count() == 6));
        assert_eq!(parse_trace(&text).unwrap(), file);
    }
}

#[test]
fn trace_parse_errors() {
    let head = "f\tnv=2\tne=1\thash=00ff\tk=1\n";
    let cases: &[(String, usize)] = &[
        ("r R1 k_delta=0 removed=[] added=[] witness=(1,2)\n".into(), 1),
        (format!("{head}r R9 k_delta=0 removed=[] added=[] witness=(1,2)\n"), 2),
        (format!("{head}r R3 k_delta=0 removed=[] added=[] witness=(1)\n"), 2),
        (format!("{head}r R3 k_delta=-1 removed=[1:X:(2)] added=[] witness=(1)\n"), 2),
        (format!("{head}r R3 k_delta=-1 removed=[1:B:2] added=[] witness=(1)\n"), 2),
        (format!("{head}m 2 5\n"), 2),
        (format!("{head}{head}"), 2),
        ("c nothing\n".into(), 1),
    ];
    for (text, line) in cases {
        assert_eq!(parse_trace(text).unwrap_err().line, *line, "{text:?}");
    }
    let ok = format!("{head}r R3 k_delta=-1 removed=[1:B:(2);2:R:()] added=[] witness=(1)\nm 1 7\n");
    let t = parse_trace(&ok).unwrap();
    assert_eq!(t.trace.original.hash, 0xff);
    assert_eq!(t.kernel_ids, vec![VertexId(7)]);
}

#[test]
fn no_instance_is_the_two_vertex_negative() {
    let f = no_instance();
    let text = write_instance(&f);
    assert_eq!(text, "p rbds 1 1 0\n");
    assert!(min_rbds(&f.instance.graph).size().is_none());
}

#[test]
fn plane_round_trip() {
    let cube = SimpleGraph::from_edges(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    );
    let pg = PlaneGraph::embed(&cube).unwrap();
    let text = write_plane(&pg);
    assert!(text.starts_with("p plane 8 12\nv 1: "));
    assert_eq!(parse_plane(&text).unwrap(), pg);
    assert_eq!(parse_edge_list(&write_edge_list(&cube)).unwrap(), cube);
}

#[test]
fn plane_parse_errors() {
    assert_eq!(parse_plane("p plane 2 1\nv 1: 2\n").unwrap_err().line, 2);
    assert_eq!(parse_plane("p plane 2 1\nv 1: 3\n").unwrap_err().line, 2);
    assert_eq!(parse_plane("p plane 2 2\nv 1: 2\nv 2: 1\n").unwrap_err().line, 3);
    assert_eq!(parse_plane("p plane 2 1\nv 1 2\n").unwrap_err().line, 2);
    assert_eq!(parse_plane("v 1: 2\n").unwrap_err().line, 1);
    assert_eq!(parse_edge_list("p edge 2 1\ne 1 1\n").unwrap_err().line, 2);
    assert_eq!(parse_edge_list("p edge 2 2\ne 1 2\ne 2 1\n").unwrap_err().line, 3);
}

#[test]
fn empty_instance_round_trip() {
    let f = InstanceFile::new(Instance::new(RBGraph::new(), 0));
    assert_eq!(write_instance(&f), "p rbds 0 0 0\n");
    assert_eq!(parse_instance("p rbds 0 0 0\n").unwrap(), f);
}
