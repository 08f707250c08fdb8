//! Brute-force oracles, exhaustive enumerators and graph fixtures for tests.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rbds_core::{PlaneGraph, RBGraph, SimpleGraph, VertexId};

pub fn vid(x: u32) -> VertexId {
    VertexId(x)
}

pub fn ids(xs: &[u32]) -> BTreeSet<VertexId> {
    xs.iter().map(|&x| VertexId(x)).collect()
}

/// Blues `1..=nb`, reds after; edges given as raw id pairs.
pub fn rb(nb: usize, nr: usize, edges: &[(u32, u32)]) -> RBGraph {
    RBGraph::from_parts(nb, nr, edges.iter().map(|&(a, b)| (VertexId(a), VertexId(b)))).unwrap()
}

fn nbhd(g: &RBGraph, v: VertexId) -> BTreeSet<VertexId> {
    g.neighbors(v).unwrap().iter().copied().collect()
}

fn second(g: &RBGraph, r: VertexId) -> BTreeSet<VertexId> {
    nbhd(g, r).into_iter().flat_map(|x| nbhd(g, x)).collect()
}

/// `P(b)` straight from the definition.
pub fn private_def(g: &RBGraph, b: VertexId) -> BTreeSet<VertexId> {
    let nb = nbhd(g, b);
    nb.iter().copied().filter(|&r| second(g, r).is_subset(&nb)).collect()
}

/// `P(v, w)` straight from the definition.
pub fn pair_private_def(g: &RBGraph, v: VertexId, w: VertexId) -> BTreeSet<VertexId> {
    let nvw: BTreeSet<VertexId> = nbhd(g, v).union(&nbhd(g, w)).copied().collect();
    nvw.iter().copied().filter(|&r| second(g, r).is_subset(&nvw)).collect()
}

/// First pair `(v, w)`, `v < w`, satisfying the pair rule, with its case
/// number and private set.
pub fn pair_rule_def(g: &RBGraph) -> Option<(VertexId, VertexId, u8, BTreeSet<VertexId>)> {
    let blues: Vec<VertexId> = g.blues().collect();
    for (i, &v) in blues.iter().enumerate() {
        for &w in &blues[i + 1..] {
            let p = pair_private_def(g, v, w);
            if p.len() <= 1 {
                continue;
            }
            if blues.iter().any(|&d| d != v && d != w && p.is_subset(&nbhd(g, d))) {
                continue;
            }
            let in_v = p.is_subset(&nbhd(g, v));
            let in_w = p.is_subset(&nbhd(g, w));
            let case = match (in_v, in_w) {
                (false, false) => 1,
                (true, true) => 2,
                (true, false) => 3,
                (false, true) => 4,
            };
            return Some((v, w, case, p));
        }
    }
    None
}

/// Smallest dominating blue set size by trying all subsets in order of size.
pub fn brute_min_rbds(g: &RBGraph) -> Option<usize> {
    let blues: Vec<VertexId> = g.blues().collect();
    let reds: Vec<VertexId> = g.reds().collect();
    assert!(blues.len() <= 20);
    let masks: Vec<u32> = reds
        .iter()
        .map(|&r| blues.iter().enumerate().filter(|&(_, &b)| g.has_edge(b, r)).fold(0u32, |m, (i, _)| m | (1 << i)))
        .collect();
    let mut best: Option<usize> = None;
    for s in 0u32..(1u32 << blues.len()) {
        let size = s.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        if masks.iter().all(|&m| m & s != 0) {
            best = Some(size);
        }
    }
    best
}

pub fn brute_decide(g: &RBGraph, k: i64) -> bool {
    brute_min_rbds(g).is_some_and(|s| (s as i64) <= k)
}

/// Minimum dominating set size by subset enumeration.
pub fn brute_min_ds(g: &SimpleGraph) -> usize {
    let n = g.num_vertices();
    let closed: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &u| m | (1 << u))).collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    (0u32..=full)
        .filter(|&s| {
            closed.iter().enumerate().fold(0u32, |acc, (v, &c)| if s >> v & 1 == 1 { acc | c } else { acc }) == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Every bipartite graph with `nb + nr <= max_n`, `nb >= 1`, and no
/// isolated blue. Labeled, so it covers every isomorphism class.
pub fn all_sanitized(max_n: usize) -> Vec<RBGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for nb in 1..=n {
            let nr = n - nb;
            let cells = nb * nr;
            for mask in 0u64..(1u64 << cells) {
                let mut edges = Vec::new();
                for c in 0..cells {
                    if mask >> c & 1 == 1 {
                        let b = (c / nr) as u32 + 1;
                        let r = (nb + c % nr) as u32 + 1;
                        edges.push((b, r));
                    }
                }
                let g = rb(nb, nr, &edges);
                if g.blues().all(|b| g.degree(b) > 0) {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Graphs on `nb` blues and `nr` reds whose blue neighborhoods are
/// nonempty and strictly increasing as bitmasks over the reds. Every graph
/// with pairwise distinct, nonempty blue neighborhoods is isomorphic to
/// exactly one of these.
pub fn distinct_blue_rows(nb: usize, nr: usize) -> Vec<RBGraph> {
    fn extend(rows: &mut Vec<u32>, nb: usize, nr: usize, out: &mut Vec<RBGraph>) {
        if rows.len() == nb {
            let edges: Vec<(u32, u32)> = rows
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| {
                    (0..nr).filter(move |&j| m >> j & 1 == 1).map(move |j| (i as u32 + 1, (nb + j) as u32 + 1))
                })
                .collect();
            out.push(rb(nb, nr, &edges));
            return;
        }
        let from = rows.last().map_or(1, |&m| m + 1);
        for m in from..(1u32 << nr) {
            rows.push(m);
            extend(rows, nb, nr, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), nb, nr, &mut out);
    out
}

/// Fewest faces whose boundaries together touch every vertex.
pub fn brute_face_cover(pg: &PlaneGraph) -> usize {
    let fs = pg.faces().unwrap();
    let n = pg.num_vertices();
    (0u32..(1 << fs.len()))
        .filter(|&s| (0..n).all(|v| (0..fs.len()).any(|f| s >> f & 1 == 1 && fs[f].vertices.contains(&v))))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Random bipartite graph on at most `max_n` vertices, possibly with
/// isolated vertices.
pub fn random_rb(rng: &mut ChaCha8Rng, max_n: usize) -> RBGraph {
    let n = rng.random_range(2..=max_n);
    let nb = rng.random_range(1..n);
    let nr = n - nb;
    let p: f64 = rng.random_range(0.15..0.7);
    let mut edges = Vec::new();
    for b in 1..=nb as u32 {
        for r in nb as u32 + 1..=n as u32 {
            if rng.random_bool(p) {
                edges.push((b, r));
            }
        }
    }
    rb(nb, nr, &edges)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of rotation systems [`brute_planar`] would try.
pub fn rotation_count(g: &SimpleGraph) -> u64 {
    (0..g.num_vertices())
        .map(|v| (1..g.degree(v).max(1) as u64).fold(1u64, |a, b| a.saturating_mul(b)))
        .fold(1u64, |a, b| a.saturating_mul(b))
}

/// Planarity by trying every rotation system and checking Euler's formula
/// per component. Exponential; small graphs only.
pub fn brute_planar(g: &SimpleGraph) -> bool {
    let n = g.num_vertices();
    let mut rot: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let (label, count) = g.components();
    let mut target = vec![0i64; count];
    let mut nv = vec![0i64; count];
    let mut deg = vec![0i64; count];
    for v in 0..n {
        nv[label[v]] += 1;
        deg[label[v]] += g.degree(v) as i64;
    }
    for c in 0..count {
        target[c] = deg[c] / 2 - nv[c] + 2;
    }
    fn face_counts(rot: &[Vec<usize>], label: &[usize], count: usize) -> Vec<i64> {
        let n = rot.len();
        let mut seen: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut f = vec![0i64; count];
        for v in 0..n {
            if rot[v].is_empty() {
                f[label[v]] += 1;
            }
            for i in 0..rot[v].len() {
                if seen[v][i] {
                    continue;
                }
                f[label[v]] += 1;
                let (mut a, mut ia) = (v, i);
                while !seen[a][ia] {
                    seen[a][ia] = true;
                    let b = rot[a][ia];
                    let j = rot[b].iter().position(|&x| x == a).unwrap();
                    a = b;
                    ia = (j + 1) % rot[b].len();
                }
            }
        }
        f
    }
    fn search(v: usize, rot: &mut Vec<Vec<usize>>, label: &[usize], count: usize, target: &[i64]) -> bool {
        if v == rot.len() {
            return face_counts(rot, label, count) == target;
        }
        if rot[v].len() <= 2 {
            return search(v + 1, rot, label, count, target);
        }
        // fix the first entry; permute the rest
        let mut perm: Vec<usize> = rot[v][1..].to_vec();
        perm.sort();
        loop {
            rot[v][1..].copy_from_slice(&perm);
            if search(v + 1, rot, label, count, target) {
                return true;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        false
    }
    search(0, &mut rot, &label, count, &target)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn complete(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    SimpleGraph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn cube() -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(8, edges)
}

pub fn cycle(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Proptest strategy for bipartite graphs with up to `max_side` vertices per
/// color.
pub fn arb_rb(max_side: usize) -> impl Strategy<Value = RBGraph> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(nb, nr)| {
        proptest::collection::vec(any::<bool>(), nb * nr).prop_map(move |bits| {
            let edges: Vec<(u32, u32)> = bits
                .iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(|(c, _)| ((c / nr) as u32 + 1, (nb + c % nr) as u32 + 1))
                .collect();
            rb(nb, nr, &edges)
        })
    })
}

/// Arbitrary simple graph on up to `max_n` vertices.
pub fn arb_simple(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            SimpleGraph::from_edges(n, pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e))
        })
    })
}
