//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --release -p rbds --test acceptance`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rbds_cli::bench::bench_file;
use rbds_cli::{write_instance, InstanceFile};
use rbds_core::generators::{gen_grid, gen_matching, gen_random_planar};
use rbds_core::planarity::{planar_verdict, rb_is_planar, KuratowskiKind};
use rbds_core::*;
use rbds_testkit::*;

/// Kernels above this size are not solved exactly.
const SOLVE_LIMIT: usize = 400;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(failures: usize, detail: String) -> Verdict {
    Verdict { pass: failures == 0, detail }
}

/// Per-run checks for the criteria that apply to every corpus.
#[derive(Default)]
struct Audit {
    runs: usize,
    reduced: usize,
    bound_violations: usize,
    sharp_checked: usize,
    sharp_violations: usize,
    feasible: usize,
    lifted: usize,
    lift_failures: usize,
    lift_skipped: usize,
    shrink_violations: usize,
    first_failure: Option<String>,
}

impl Audit {
    fn fail(&mut self, what: &str, inst: &Instance) {
        if self.first_failure.is_none() {
            self.first_failure =
                Some(format!("{what}: k={} edges={:?}", inst.k, inst.graph.edges().collect::<Vec<_>>()));
        }
    }

    /// `planar` marks inputs whose kernels the sharper count applies to.
    fn run(&mut self, inst: &Instance, planar: bool) -> KernelResult {
        let res = kernelize(inst).expect("non-negative budget");
        self.runs += 1;
        let trace = res.trace();

        let n0 = inst.graph.num_vertices();
        let changing: Vec<&RuleApplication> = trace
            .applications
            .iter()
            .filter(|a| !matches!(a.tag, RuleTag::SanitizeEdge | RuleTag::SanitizeNo))
            .collect();
        if changing.len() > n0 || changing.iter().any(|a| a.vertex_delta() >= 0) {
            self.shrink_violations += 1;
            self.fail("shrinkage", inst);
        }

        let KernelResult::Reduced { kernel, trace } = &res else { return res };
        self.reduced += 1;
        let nk = kernel.graph.num_vertices();
        if nk as i64 > SIZE_FACTOR * kernel.k {
            self.bound_violations += 1;
            self.fail("46k' bound", inst);
        }
        let feasible = decide_rbds(&inst.graph, inst.k);
        if !feasible {
            return res;
        }
        self.feasible += 1;
        if nk > SOLVE_LIMIT {
            self.lift_skipped += 1;
            return res;
        }
        let SolveOutcome::Optimal { size: opt, witness } = min_rbds(&kernel.graph) else {
            self.lift_failures += 1;
            self.fail("feasible instance with infeasible kernel", inst);
            return res;
        };
        if planar && opt >= 3 && opt as i64 <= kernel.k {
            self.sharp_checked += 1;
            if nk > 15 * (3 * opt - 6) + opt {
                self.sharp_violations += 1;
                self.fail("sharper bound", inst);
            }
        }
        self.lifted += 1;
        match trace.lift(&kernel.graph, &witness) {
            Ok(sol) if verify_solution(&inst.graph, &sol) && sol.len() as i64 <= inst.k => {}
            _ => {
                self.lift_failures += 1;
                self.fail("lifting", inst);
            }
        }
        res
    }
}

fn kernel_verdict(res: &KernelResult) -> bool {
    match res {
        KernelResult::No { .. } => false,
        KernelResult::Reduced { kernel, .. } => decide_rbds(&kernel.graph, kernel.k),
    }
}

fn criterion1(audit: &mut Audit) -> Verdict {
    let mut checks = 0usize;
    let mut bad = 0usize;
    let mut oracle_bad = 0usize;
    let mut sweep = |g: &RBGraph, audit: &mut Audit| {
        let opt = brute_min_rbds(g);
        for k in 0..=g.num_blue() as i64 {
            let inst = Instance::new(g.clone(), k);
            let truth = decide_rbds(g, k);
            if truth != opt.is_some_and(|o| o as i64 <= k) {
                oracle_bad += 1;
            }
            let res = audit.run(&inst, false);
            checks += 1;
            if kernel_verdict(&res) != truth {
                bad += 1;
                audit.fail("safeness", &inst);
            }
        }
    };
    let mut exhaustive = all_sanitized(7);
    exhaustive.extend((0..=7).map(|nr| rb(0, nr, &[])));
    for g in &exhaustive {
        sweep(g, audit);
    }
    let mut r = rng(2024);
    for _ in 0..5000 {
        let (g, _) = sanitize(&random_rb(&mut r, 12));
        sweep(&g, audit);
    }
    verdict(
        bad + oracle_bad,
        format!(
            "{} exhaustive graphs (<= 7 vertices) + 5000 random (<= 12), {checks} (G, k) pairs, \
             {bad} verdict disagreements, {oracle_bad} solver/brute-force disagreements",
            exhaustive.len()
        ),
    )
}

fn planar_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for seed in 0..200u64 {
        let n = 10 + (seed as usize * 37) % 300;
        let density = 0.3 + (seed % 8) as f64 * 0.1;
        out.push(gen_random_planar(n, density, seed));
    }
    out
}

fn generated_corpus(audit: &mut Audit, planar: &[Instance]) {
    for inst in planar {
        audit.run(inst, true);
        audit.run(&Instance::new(inst.graph.clone(), inst.k / 4), true);
    }
    for (rows, cols) in [(1, 1), (1, 7), (2, 2), (3, 5), (4, 4), (5, 5), (6, 8), (9, 9), (12, 15), (20, 20)] {
        let g = gen_grid(rows, cols);
        audit.run(&g, true);
        audit.run(&Instance::new(g.graph.clone(), g.k / 3), true);
    }
    for m in 1..=8 {
        let g = gen_matching(m);
        audit.run(&g, true);
        audit.run(&Instance::new(g.graph, m as i64 - 1), true);
    }
}

fn criterion2(a: &Audit) -> Verdict {
    verdict(
        a.bound_violations + a.sharp_violations,
        format!(
            "{} reduced outputs, {} over 46k'; sharper count checked on {} planar yes-kernels with opt >= 3, {} over",
            a.reduced, a.bound_violations, a.sharp_checked, a.sharp_violations
        ),
    )
}

fn criterion3(a: &Audit) -> Verdict {
    verdict(
        a.lift_failures,
        format!(
            "{} feasible instances, {} lifted, {} invalid, {} skipped (kernel above {SOLVE_LIMIT} vertices)",
            a.feasible, a.lifted, a.lift_failures, a.lift_skipped
        ),
    )
}

/// Planarity of every graph right after a pair-gadget step, and of the
/// kernel. All other steps take subgraphs.
fn stays_planar(inst: &Instance) -> (bool, usize) {
    let res = kernelize(inst).unwrap();
    let trace = res.trace();
    let mut gadgets = 0;
    let mut ok = true;
    for (i, app) in trace.applications.iter().enumerate() {
        if app.tag == RuleTag::R4Case2 {
            gadgets += 1;
            let prefix = KernelTrace { original: trace.original, applications: trace.applications[..=i].to_vec() };
            ok &= rb_is_planar(&prefix.replay(&inst.graph).unwrap());
        }
    }
    if let Some(kernel) = res.kernel() {
        let g = &kernel.graph;
        ok &= g.edges().all(|(u, v)| g.color(u) != g.color(v)) && rb_is_planar(g);
    }
    (ok, gadgets)
}

/// Planar graph on which the pair rule fires with its gadget.
fn gadget_fixture() -> RBGraph {
    rb(
        6,
        5,
        &[
            (1, 7),
            (1, 8),
            (1, 10),
            (2, 7),
            (2, 8),
            (2, 11),
            (3, 9),
            (3, 10),
            (4, 7),
            (4, 10),
            (4, 11),
            (5, 9),
            (5, 11),
            (6, 8),
            (6, 10),
            (6, 11),
        ],
    )
}

fn disjoint_union(parts: &[&RBGraph]) -> RBGraph {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        let shift = |v: VertexId| VertexId(v.0 + offset);
        vertices.extend(g.vertices().map(|v| (shift(v), g.color(v).unwrap())));
        edges.extend(g.edges().map(|(u, v)| (shift(u), shift(v))));
        offset += g.id_bound() as u32;
    }
    RBGraph::from_labeled(vertices, edges).unwrap()
}

fn criterion4(planar: &[Instance]) -> Verdict {
    let mut bad = 0;
    let mut nonempty = 0;
    let mut gadgets = 0;
    for inst in planar {
        let (ok, g) = stays_planar(inst);
        bad += usize::from(!ok || !rb_is_planar(&inst.graph));
        gadgets += g;
        nonempty += kernelize(inst).unwrap().kernel().is_some_and(|k| k.graph.num_vertices() > 0) as usize;
    }
    let fixture = gadget_fixture();
    let mut mixed_gadgets = 0;
    let mut mixed_bad = 0;
    for seed in 0..20u64 {
        let grid = gen_grid(3 + seed as usize % 4, 4);
        let random = gen_random_planar(30 + 10 * seed as usize, 0.8, seed);
        let copies = 1 + seed as usize % 3;
        let mut parts = vec![&grid.graph, &random.graph];
        parts.extend(std::iter::repeat_n(&fixture, copies));
        let g = disjoint_union(&parts);
        let k = g.num_blue() as i64;
        let (ok, n) = stays_planar(&Instance::new(g, k));
        mixed_bad += usize::from(!ok);
        mixed_gadgets += n;
    }
    verdict(
        bad + mixed_bad + usize::from(mixed_gadgets == 0),
        format!(
            "{} generated instances ({nonempty} non-empty kernels, {gadgets} pair gadgets), {bad} failures; \
             20 unions with a gadget fixture ({mixed_gadgets} pair gadgets), {mixed_bad} failures",
            planar.len()
        ),
    )
}

fn criterion5(a: &Audit) -> Verdict {
    verdict(a.shrink_violations, format!("{} runs, {} violations", a.runs, a.shrink_violations))
}

fn criterion6() -> Verdict {
    let mut checked = 0usize;
    let mut with_rule3 = 0usize;
    let mut bad = 0usize;
    for n in 1..=9 {
        for nb in 1..=n {
            for g in distinct_blue_rows(nb, n - nb) {
                if find_rule1(&g).is_some() || find_rule2(&g).is_some() {
                    continue;
                }
                checked += 1;
                let def = kernel::find_rule3_definitional(&g);
                with_rule3 += def.is_some() as usize;
                if find_rule3(&g).ok() != Some(def) {
                    bad += 1;
                }
            }
        }
    }
    verdict(
        bad,
        format!("{checked} graphs reduced under Rules 1-2 ({with_rule3} with Rule 3 applicable), {bad} mismatches"),
    )
}

/// Every rotation system of `g` that is a plane embedding.
fn all_embeddings(g: &SimpleGraph) -> Vec<PlaneGraph> {
    fn rec(v: usize, rot: &mut Vec<Vec<usize>>, out: &mut Vec<PlaneGraph>) {
        if v == rot.len() {
            let pg = PlaneGraph::new(rot.clone()).unwrap();
            if pg.is_planar_embedding() {
                out.push(pg);
            }
            return;
        }
        if rot[v].len() <= 2 {
            return rec(v + 1, rot, out);
        }
        let tail: Vec<usize> = rot[v][1..].to_vec();
        for perm in permutations(&tail) {
            rot[v][1..].copy_from_slice(&perm);
            rec(v + 1, rot, out);
        }
    }
    let mut rot: Vec<Vec<usize>> = (0..g.num_vertices()).map(|v| g.neighbors(v).to_vec()).collect();
    let mut out = Vec::new();
    rec(0, &mut rot, &mut out);
    out
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn criterion7() -> Verdict {
    let mut ds_checked = 0usize;
    let mut ds_bad = 0usize;
    let mut ds_check = |g: &RBGraph| {
        let Some(opt) = min_rbds(g).size() else { return };
        let ds = rbds_to_ds(&Instance::new(g.clone(), opt as i64)).unwrap();
        ds_checked += 1;
        if min_ds(&ds.graph).unwrap().size != opt + 1 {
            ds_bad += 1;
        }
    };
    for g in all_sanitized(7) {
        ds_check(&g);
    }
    let mut r = rng(77);
    for _ in 0..4000 {
        let (g, _) = sanitize(&random_rb(&mut r, 14));
        ds_check(&g);
    }

    let mut fc_checked = 0usize;
    let mut fc_bad = 0usize;
    let mut fc_check = |pg: &PlaneGraph| {
        let fc = face_cover_to_rbds(pg).unwrap();
        fc_checked += 1;
        if min_rbds(&fc.graph).size() != Some(brute_face_cover(pg)) || !rb_is_planar(&fc.graph) {
            fc_bad += 1;
        }
    };
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = SimpleGraph::from_edges(
                n,
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
            );
            if !g.is_connected() || !planar_verdict(&g) {
                continue;
            }
            if n <= 5 {
                for pg in all_embeddings(&g) {
                    fc_check(&pg);
                }
            } else {
                fc_check(&PlaneGraph::embed(&g).unwrap());
            }
        }
    }
    let mut sampled = 0;
    while sampled < 3000 {
        let n = r.random_range(7..=10);
        let p: f64 = r.random_range(0.2..0.7);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let g = SimpleGraph::from_edges(n, pairs.into_iter().filter(|_| r.random_bool(p)));
        if !g.is_connected() || !planar_verdict(&g) {
            continue;
        }
        fc_check(&PlaneGraph::embed(&g).unwrap());
        sampled += 1;
    }
    verdict(
        ds_bad + fc_bad,
        format!(
            "dominating set: {ds_checked} feasible instances (all <= 7 vertices, 4000 random <= 14), \
             {ds_bad} mismatches; face cover: {fc_checked} plane graphs (every embedding <= 5 vertices, \
             every graph <= 6, 3000 random 7-10), {fc_bad} mismatches"
        ),
    )
}

fn criterion8() -> Verdict {
    let inst = gen_grid(100, 100);
    let start = Instant::now();
    let res = kernelize(&inst).unwrap();
    let elapsed = start.elapsed();

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid100.rbds");
    std::fs::write(&path, write_instance(&InstanceFile::new(inst))).unwrap();
    let row = bench_file(&path).unwrap();
    let expected: Vec<(RuleTag, usize)> =
        RuleTag::ALL.iter().map(|&t| (t, res.trace().count(t))).filter(|&(_, c)| c > 0).collect();
    let counts_ok = row.rules == expected && !row.rules.is_empty();
    let fast = elapsed < Duration::from_secs(60);
    verdict(
        usize::from(!fast) + usize::from(!counts_ok),
        format!(
            "grid(100,100): {:.3} s, kernel {} vertices, k'={}, bench rules_fired_by_type={}",
            elapsed.as_secs_f64(),
            row.n_out.map_or("-".into(), |n| n.to_string()),
            row.k_out.map_or("-".into(), |k| k.to_string()),
            row.rules_field()
        ),
    )
}

fn grid(r: usize, c: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..c {
            if i + 1 < r {
                edges.push((i * c + j, (i + 1) * c + j));
            }
            if j + 1 < c {
                edges.push((i * c + j, i * c + j + 1));
            }
        }
    }
    SimpleGraph::from_edges(r * c, edges)
}

fn random_tree(r: &mut impl Rng, n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (1..n).map(|v| (r.random_range(0..v), v)))
}

fn stacked_triangulation(r: &mut impl Rng, n: usize) -> SimpleGraph {
    let mut g = complete(3);
    let mut faces = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let f = r.random_range(0..faces.len());
        let [a, b, c] = faces[f];
        let w = g.add_vertex();
        debug_assert_eq!(v, w);
        for u in [a, b, c] {
            g.add_edge(u, w);
        }
        faces[f] = [a, b, w];
        faces.push([b, c, w]);
        faces.push([c, a, w]);
    }
    g
}

fn dense_random(r: &mut impl Rng, n: usize) -> SimpleGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(r);
    let m = (3 * n - 6 + 1 + r.random_range(0..n)).min(pairs.len());
    SimpleGraph::from_edges(n, pairs.into_iter().take(m))
}

fn is_kuratowski(g: &SimpleGraph, kind: KuratowskiKind, edges: &[(usize, usize)]) -> bool {
    if !edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
        return false;
    }
    let h = SimpleGraph::from_edges(g.num_vertices(), edges.iter().copied());
    let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..h.num_vertices() {
        *by_degree.entry(h.degree(v)).or_default() += 1;
    }
    let (branch_degree, branches) = match kind {
        KuratowskiKind::K5 => (4, 5),
        KuratowskiKind::K33 => (3, 6),
    };
    by_degree.keys().all(|&d| d == 0 || d == 2 || d == branch_degree)
        && by_degree.get(&branch_degree) == Some(&branches)
        && !planar_verdict(&h)
}

fn criterion9() -> Verdict {
    let mut r = rng(9);
    let mut suite: Vec<(String, SimpleGraph, bool)> = Vec::new();
    for (a, b) in [(1, 1), (1, 9), (2, 2), (3, 3), (4, 7), (5, 5), (10, 10), (30, 30)] {
        suite.push((format!("grid {a}x{b}"), grid(a, b), true));
    }
    for n in [1, 2, 5, 10, 30, 100, 300, 1000] {
        suite.push((format!("tree {n}"), random_tree(&mut r, n), true));
    }
    suite.push(("K4".into(), complete(4), true));
    suite.push(("Q3".into(), cube(), true));
    for n in [4, 5, 6, 8, 12, 20, 50, 100, 400, 2000] {
        suite.push((format!("triangulation {n}"), stacked_triangulation(&mut r, n), true));
    }
    suite.push(("K5".into(), complete(5), false));
    suite.push(("K3,3".into(), complete_bipartite(3, 3), false));
    for i in 0..20 {
        let n = 6 + i * 2;
        suite.push((format!("dense random {n}"), dense_random(&mut r, n), false));
    }
    assert_eq!(suite.len(), 50);

    let mut wrong = Vec::new();
    for (name, g, planar) in &suite {
        let ok = match is_planar(g) {
            Planarity::Planar(rot) => *planar && PlaneGraph::new(rot).is_ok_and(|pg| pg.is_planar_embedding()),
            Planarity::NonPlanar(w) => !*planar && is_kuratowski(g, w.kind, &w.edges),
        };
        let brute_ok = rotation_count(g) > 200_000 || brute_planar(g) == *planar;
        if !ok || !brute_ok {
            wrong.push(name.clone());
        }
    }
    verdict(wrong.len(), format!("{} graphs (28 planar, 22 non-planar), wrong: {wrong:?}", suite.len()))
}

fn main() {
    let mut audit = Audit::default();
    let planar = planar_corpus();
    let mut results: Vec<(u8, &str, Verdict)> = Vec::new();
    let t = Instant::now();
    let lap = |what: &str| eprintln!("[{:>7.1} s] {what}", t.elapsed().as_secs_f64());
    results.push((1, "safeness", criterion1(&mut audit)));
    lap("criterion 1");
    generated_corpus(&mut audit, &planar);
    lap("generated corpora");
    results.push((2, "size bound", criterion2(&audit)));
    results.push((3, "lifting", criterion3(&audit)));
    results.push((4, "planarity preservation", criterion4(&planar)));
    results.push((5, "termination and shrinkage", criterion5(&audit)));
    lap("criterion 4");
    results.push((6, "isolated-edge scan equivalence", criterion6()));
    lap("criterion 6");
    results.push((7, "transforms", criterion7()));
    lap("criterion 7");
    results.push((8, "performance", criterion8()));
    lap("criterion 8");
    results.push((9, "planarity golden suite", criterion9()));
    lap("criterion 9");

    let mut all = true;
    for (i, name, v) in &results {
        all &= v.pass;
        println!("{} criterion {i} ({name}): {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    if let Some(f) = &audit.first_failure {
        println!("first failing run: {f}");
    }
    println!("acceptance finished in {:.1} s", t.elapsed().as_secs_f64());
    if !all {
        std::process::exit(1);
    }
}
