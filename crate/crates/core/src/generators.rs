//! Seeded instance generators.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Instance, RBGraph, VertexId};

/// Identifier of the PRNG behind [`gen_random_planar`], written into
/// generated instance headers.
pub const RNG_ALGORITHM: &str = "chacha8";

/// `rows x cols` grid; cell `(i, j)` is blue iff `i + j` is even. Blues are
/// numbered first in row-major order, then reds. The budget is the number
/// of blues.
pub fn gen_grid(rows: usize, cols: usize) -> Instance {
    assert!(rows >= 1 && cols >= 1, "grid needs at least one row and column");
    let blue = |i: usize, j: usize| (i + j).is_multiple_of(2);
    let cells: Vec<(usize, usize)> = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).collect();
    let n_blue = cells.iter().filter(|&&(i, j)| blue(i, j)).count();
    let mut id = alloc::vec![0u32; rows * cols];
    let (mut nb, mut nr) = (0u32, n_blue as u32);
    for &(i, j) in &cells {
        if blue(i, j) {
            nb += 1;
            id[i * cols + j] = nb;
        } else {
            nr += 1;
            id[i * cols + j] = nr;
        }
    }
    let mut edges = Vec::new();
    for &(i, j) in &cells {
        let here = VertexId(id[i * cols + j]);
        if i + 1 < rows {
            edges.push((here, VertexId(id[(i + 1) * cols + j])));
        }
        if j + 1 < cols {
            edges.push((here, VertexId(id[i * cols + j + 1])));
        }
    }
    let graph = RBGraph::from_parts(n_blue, rows * cols - n_blue, edges).expect("grid is simple");
    Instance::new(graph, n_blue as i64)
}

/// `m` disjoint blue-red edges `(i, m + i)` with budget `m`.
pub fn gen_matching(m: usize) -> Instance {
    assert!(m >= 1, "matching needs at least one edge");
    let edges = (1..=m as u32).map(|i| (VertexId(i), VertexId(m as u32 + i)));
    Instance::new(RBGraph::from_parts(m, m, edges).expect("matching is simple"), m as i64)
}

/// Random stacked triangulation on `n` vertices, each edge kept with
/// probability `density`, vertices colored blue or red by fair coin.
///
/// Same-color edges are then dropped, and vertices left isolated are
/// discarded. The surviving blues are numbered first, in order of
/// creation, then the reds. The budget is the number of blues.
pub fn gen_random_planar(n: usize, density: f64, seed: u64) -> Instance {
    assert!(n >= 3, "need at least three vertices");
    assert!(density > 0.0 && density <= 1.0, "density must lie in (0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut edges: Vec<(usize, usize)> = alloc::vec![(0, 1), (1, 2), (0, 2)];
    let mut faces: Vec<[usize; 3]> = alloc::vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let f = rng.random_range(0..faces.len());
        let [a, b, c] = faces[f];
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    let kept: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.random_bool(density)).collect();
    let is_blue: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();

    let cross: Vec<(usize, usize)> = kept.into_iter().filter(|&(u, v)| is_blue[u] != is_blue[v]).collect();
    let mut degree = alloc::vec![0usize; n];
    for &(u, v) in &cross {
        degree[u] += 1;
        degree[v] += 1;
    }
    let blues: Vec<usize> = (0..n).filter(|&v| is_blue[v] && degree[v] > 0).collect();
    let reds: Vec<usize> = (0..n).filter(|&v| !is_blue[v] && degree[v] > 0).collect();
    let mut id = alloc::vec![0u32; n];
    for (i, &v) in blues.iter().chain(reds.iter()).enumerate() {
        id[v] = i as u32 + 1;
    }
    let graph = RBGraph::from_parts(
        blues.len(),
        reds.len(),
        cross.into_iter().map(|(u, v)| (VertexId(id[u]), VertexId(id[v]))),
    )
    .expect("subgraph of a simple graph");
    let k = graph.num_blue() as i64;
    Instance::new(graph, k)
}
