//! Face Cover to red-blue domination, and red-blue domination to Dominating
//! Set.

use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Instance, RBGraph, VertexId};
use crate::planarity::{Face, PlaneGraph};
use crate::simple::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("plane graph is disconnected")]
    Disconnected,
    #[error("red vertex {0} has no blue neighbor")]
    IsolatedRed(VertexId),
    #[error("edge {0}-{1} joins two vertices of the same color")]
    SameColorEdge(VertexId, VertexId),
}

/// Face Cover instance rewritten as a red-blue graph.
///
/// Face `f` becomes blue id `f + 1`; plane vertex `v` becomes red id
/// `faces.len() + v + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCoverRbds {
    pub graph: RBGraph,
    pub faces: Vec<Face>,
}

impl FaceCoverRbds {
    pub fn face_blue(&self, f: usize) -> VertexId {
        VertexId(f as u32 + 1)
    }

    pub fn vertex_red(&self, v: usize) -> VertexId {
        VertexId((self.faces.len() + v) as u32 + 1)
    }

    pub fn blue_face(&self, b: VertexId) -> Option<usize> {
        let f = (b.0 as usize).checked_sub(1)?;
        (f < self.faces.len()).then_some(f)
    }

    pub fn red_vertex(&self, r: VertexId) -> Option<usize> {
        let v = (r.0 as usize).checked_sub(self.faces.len() + 1)?;
        (v < self.graph.num_red()).then_some(v)
    }

    /// `(face, vertex, multiplicity)` for every incidence.
    pub fn incidences(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.faces
            .iter()
            .enumerate()
            .flat_map(|(f, face)| face.vertices.iter().map(move |&v| (f, v, face.multiplicity(v))))
    }
}

/// Radial-graph construction: blues are faces, reds are vertices, and a red
/// is adjacent to every face it lies on.
pub fn face_cover_to_rbds(pg: &PlaneGraph) -> Result<FaceCoverRbds, TransformError> {
    let faces = pg.faces().map_err(|_| TransformError::Disconnected)?;
    let nf = faces.len();
    let edges: Vec<(VertexId, VertexId)> = faces
        .iter()
        .enumerate()
        .flat_map(|(f, face)| {
            face.vertices.iter().map(move |&v| (VertexId(f as u32 + 1), VertexId((nf + v) as u32 + 1)))
        })
        .collect();
    let graph = RBGraph::from_parts(nf, pg.num_vertices(), edges).expect("incidences are simple");
    Ok(FaceCoverRbds { graph, faces })
}

/// Dominating Set instance built from a red-blue instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsInstance {
    pub graph: SimpleGraph,
    pub k: i64,
    /// Original id of each vertex; `None` for the two added vertices.
    pub origin: Vec<Option<VertexId>>,
    /// The vertex adjacent to every blue.
    pub hub: usize,
    /// Its degree-one neighbor.
    pub pendant: usize,
}

/// Adds a hub adjacent to all blues and a pendant on the hub; the budget
/// grows by one.
pub fn rbds_to_ds(inst: &Instance) -> Result<DsInstance, TransformError> {
    let g = &inst.graph;
    for (u, v) in g.edges() {
        if g.color(u) == g.color(v) {
            return Err(TransformError::SameColorEdge(u, v));
        }
    }
    if let Some(r) = g.reds().find(|&r| g.degree(r) == 0) {
        return Err(TransformError::IsolatedRed(r));
    }
    let mut origin: Vec<Option<VertexId>> = g.vertices().map(Some).collect();
    let index = |v: VertexId| origin.binary_search(&Some(v)).expect("live vertex");
    let mut ds = SimpleGraph::new(origin.len());
    for (u, v) in g.edges() {
        ds.add_edge(index(u), index(v));
    }
    let blues: Vec<usize> = g.blues().map(index).collect();
    let hub = ds.add_vertex();
    let pendant = ds.add_vertex();
    for b in blues {
        ds.add_edge(hub, b);
    }
    ds.add_edge(hub, pendant);
    origin.push(None);
    origin.push(None);
    Ok(DsInstance { graph: ds, k: inst.k + 1, origin, hub, pendant })
}
