//! Planarity testing, rotation systems and face traversal.

mod lr;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::RBGraph;
use crate::simple::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("plane graph is disconnected")]
    Disconnected,
    #[error("rotation of vertex {0} is inconsistent")]
    BadRotation(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// An edge set forming a subdivision of K5 or K3,3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Vertices of degree at least three in the subdivision.
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    /// Clockwise neighbor order per vertex.
    Planar(Vec<Vec<usize>>),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn rotation(&self) -> Option<&[Vec<usize>]> {
        match self {
            Planarity::Planar(r) => Some(r),
            Planarity::NonPlanar(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&KuratowskiWitness> {
        match self {
            Planarity::NonPlanar(w) => Some(w),
            Planarity::Planar(_) => None,
        }
    }
}

/// Left-right planarity test. Returns an embedding or a Kuratowski subgraph.
pub fn is_planar(g: &SimpleGraph) -> Planarity {
    match lr::lr_embedding(g) {
        Some(rotation) => Planarity::Planar(rotation),
        None => Planarity::NonPlanar(kuratowski(g)),
    }
}

/// Cheap verdict without building a witness.
pub fn planar_verdict(g: &SimpleGraph) -> bool {
    lr::lr_embedding(g).is_some()
}

/// Planarity of the underlying graph of a red/blue graph.
pub fn rb_is_planar(g: &RBGraph) -> bool {
    planar_verdict(&crate::simple::underlying(g).0)
}

/// Edge-count condition every planar bipartite graph meets.
pub fn bipartite_euler_bound(g: &RBGraph) -> bool {
    let n = g.num_vertices();
    n < 3 || g.num_edges() + 4 <= 2 * n
}

fn kuratowski(g: &SimpleGraph) -> KuratowskiWitness {
    let mut h = g.clone();
    for (u, v) in g.edges() {
        h.remove_edge(u, v);
        if lr::lr_embedding(&h).is_some() {
            h.add_edge(u, v);
        }
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let branch_vertices: Vec<usize> = (0..h.num_vertices()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 { KuratowskiKind::K5 } else { KuratowskiKind::K33 };
    debug_assert!(matches!((kind, branch_vertices.len()), (KuratowskiKind::K5, 5) | (KuratowskiKind::K33, 6)));
    KuratowskiWitness { kind, branch_vertices, edges }
}

/// A face: its boundary walk as darts `(tail, head)` and the vertices on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<(usize, usize)>,
    pub vertices: BTreeSet<usize>,
}

impl Face {
    /// How many times `v` occurs on the boundary walk (at least 1 for an
    /// isolated vertex).
    pub fn multiplicity(&self, v: usize) -> usize {
        if self.boundary.is_empty() {
            return usize::from(self.vertices.contains(&v));
        }
        self.boundary.iter().filter(|&&(t, _)| t == v).count()
    }
}

/// A graph with a rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    n_edges: usize,
    connected: bool,
}

impl PlaneGraph {
    /// Validates that `rotation[v]` lists every neighbor of `v` once and that
    /// adjacency is symmetric.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self, PlanarityError> {
        let n = rotation.len();
        let mut degree_sum = 0;
        for (v, rot) in rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &w in rot {
                if w >= n || w == v || !seen.insert(w) || !rotation[w].contains(&v) {
                    return Err(PlanarityError::BadRotation(v));
                }
            }
            degree_sum += rot.len();
        }
        let g =
            SimpleGraph::from_edges(n, rotation.iter().enumerate().flat_map(|(v, r)| r.iter().map(move |&w| (v, w))));
        Ok(PlaneGraph { rotation, n_edges: degree_sum / 2, connected: g.is_connected() })
    }

    /// Embeds a planar graph, or returns its Kuratowski witness.
    pub fn embed(g: &SimpleGraph) -> Result<Self, KuratowskiWitness> {
        match is_planar(g) {
            Planarity::Planar(rotation) => {
                Ok(PlaneGraph::new(rotation).expect("LR embedding is a valid rotation system"))
            }
            Planarity::NonPlanar(w) => Err(w),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.n_edges
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(
            self.num_vertices(),
            self.rotation.iter().enumerate().flat_map(|(v, r)| r.iter().map(move |&w| (v, w))),
        )
    }

    /// All faces, numbered by first discovery: vertices ascending, darts in
    /// rotation order.
    pub fn faces(&self) -> Result<Vec<Face>, PlanarityError> {
        if !self.connected {
            return Err(PlanarityError::Disconnected);
        }
        Ok(self.trace_faces())
    }

    /// Whether the rotation system is a genus-0 embedding: every component
    /// has `|E| - |V| + 2` faces.
    pub fn is_planar_embedding(&self) -> bool {
        let g = self.graph();
        let (label, count) = g.components();
        let mut nv = alloc::vec![0i64; count];
        let mut ne = alloc::vec![0i64; count];
        let mut nf = alloc::vec![0i64; count];
        for v in 0..self.num_vertices() {
            nv[label[v]] += 1;
            ne[label[v]] += self.rotation[v].len() as i64;
        }
        for f in self.trace_faces() {
            let v = *f.vertices.first().expect("faces are non-empty");
            nf[label[v]] += 1;
        }
        (0..count).all(|c| nf[c] == ne[c] / 2 - nv[c] + 2)
    }

    fn trace_faces(&self) -> Vec<Face> {
        let n = self.num_vertices();
        let mut offset = alloc::vec![0usize; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + self.rotation[v].len();
        }
        let dart = |v: usize, w: usize| {
            let i = self.rotation[v].iter().position(|&x| x == w).expect("symmetric rotation");
            offset[v] + i
        };
        let mut seen = alloc::vec![false; offset[n]];
        let mut faces = Vec::new();
        for v in 0..n {
            if self.rotation[v].is_empty() {
                faces.push(Face { boundary: Vec::new(), vertices: [v].into_iter().collect() });
                continue;
            }
            for (i, &w) in self.rotation[v].iter().enumerate() {
                if seen[offset[v] + i] {
                    continue;
                }
                let mut boundary = Vec::new();
                let (mut a, mut b) = (v, w);
                loop {
                    seen[dart(a, b)] = true;
                    boundary.push((a, b));
                    let rot = &self.rotation[b];
                    let j = rot.iter().position(|&x| x == a).expect("symmetric rotation");
                    let c = rot[(j + 1) % rot.len()];
                    a = b;
                    b = c;
                    if (a, b) == (v, w) {
                        break;
                    }
                }
                let vertices = boundary.iter().map(|&(t, _)| t).collect();
                faces.push(Face { boundary, vertices });
            }
        }
        faces
    }
}

/// Free-function form of [`PlaneGraph::faces`].
pub fn faces(pg: &PlaneGraph) -> Result<Vec<Face>, PlanarityError> {
    pg.faces()
}
