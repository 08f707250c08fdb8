//! Red/blue bipartite graphs and the neighborhood calculus the reduction
//! rules are phrased in.
//!
//! Vertex identifiers are allocated sequentially starting at 1 and are never
//! reused, so a trace can keep naming vertices after they have been deleted.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Stable vertex identifier. Never reassigned within one graph's lifetime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn as_char(self) -> char {
        match self {
            Color::Blue => 'B',
            Color::Red => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'B' | 'b' => Some(Color::Blue),
            'R' | 'r' => Some(Color::Red),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not a live vertex")]
    UnknownVertex(VertexId),
    #[error("vertex {0} has the wrong color for this operation")]
    WrongColor(VertexId),
    #[error("operation needs two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {{{0},{1}}} already present")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge {{{0},{1}}} not present")]
    MissingEdge(VertexId, VertexId),
    #[error("vertex id {0} is zero or repeated")]
    BadId(VertexId),
}

#[derive(Clone, Debug)]
struct Node {
    color: Color,
    // Sorted, duplicate free.
    adj: Vec<VertexId>,
}

/// A graph whose vertices are colored blue or red.
///
/// Same-color edges are representable so that raw inputs can be loaded;
/// [`RBGraph::sanitize`] removes them.
#[derive(Clone, Debug)]
pub struct RBGraph {
    slots: Vec<Option<Node>>,
    n_blue: usize,
    n_red: usize,
    n_edges: usize,
}

impl Default for RBGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl PartialEq for RBGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n_blue == other.n_blue
            && self.n_red == other.n_red
            && self.n_edges == other.n_edges
            && self.vertices().eq(other.vertices())
            && self.vertices().all(|v| self.color(v) == other.color(v) && self.adj(v) == other.adj(v))
    }
}

impl Eq for RBGraph {}

impl RBGraph {
    pub fn new() -> Self {
        RBGraph { slots: alloc::vec![None], n_blue: 0, n_red: 0, n_edges: 0 }
    }

    /// Builds a graph with blue ids `1..=n_blue` and red ids
    /// `n_blue+1..=n_blue+n_red`, plus the given edges.
    pub fn from_parts(
        n_blue: usize,
        n_red: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = RBGraph::new();
        for _ in 0..n_blue {
            g.add_vertex(Color::Blue);
        }
        for _ in 0..n_red {
            g.add_vertex(Color::Red);
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph with the given ids, which need not be contiguous.
    /// Fresh vertices are numbered after the largest id.
    pub fn from_labeled(
        vertices: impl IntoIterator<Item = (VertexId, Color)>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = RBGraph::new();
        for (v, color) in vertices {
            if v.0 == 0 || g.contains(v) {
                return Err(GraphError::BadId(v));
            }
            if g.slots.len() <= v.index() {
                g.slots.resize(v.index() + 1, None);
            }
            g.slots[v.index()] = Some(Node { color, adj: Vec::new() });
            match color {
                Color::Blue => g.n_blue += 1,
                Color::Red => g.n_red += 1,
            }
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The id the next added vertex will receive.
    pub fn next_id(&self) -> VertexId {
        VertexId(self.slots.len() as u32)
    }

    /// One past the largest id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.slots.len()
    }

    pub fn add_vertex(&mut self, color: Color) -> VertexId {
        let id = self.next_id();
        self.slots.push(Some(Node { color, adj: Vec::new() }));
        match color {
            Color::Blue => self.n_blue += 1,
            Color::Red => self.n_red += 1,
        }
        id
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.node(u)?;
        self.node(v)?;
        let au = &mut self.node_mut(u).adj;
        match au.binary_search(&v) {
            Ok(_) => return Err(GraphError::ParallelEdge(u, v)),
            Err(pos) => au.insert(pos, v),
        }
        let av = &mut self.node_mut(v).adj;
        let pos = av.binary_search(&u).unwrap_err();
        av.insert(pos, u);
        self.n_edges += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.node(u)?;
        self.node(v)?;
        let au = &mut self.node_mut(u).adj;
        match au.binary_search(&v) {
            Ok(pos) => {
                au.remove(pos);
            }
            Err(_) => return Err(GraphError::MissingEdge(u, v)),
        }
        let av = &mut self.node_mut(v).adj;
        let pos = av.binary_search(&u).expect("adjacency is symmetric");
        av.remove(pos);
        self.n_edges -= 1;
        Ok(())
    }

    /// Deletes `v` with its incident edges and returns its former neighbors.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        self.node(v)?;
        let node = self.slots[v.index()].take().expect("checked live");
        for &u in &node.adj {
            let au = &mut self.node_mut(u).adj;
            let pos = au.binary_search(&v).expect("adjacency is symmetric");
            au.remove(pos);
        }
        self.n_edges -= node.adj.len();
        match node.color {
            Color::Blue => self.n_blue -= 1,
            Color::Red => self.n_red -= 1,
        }
        Ok(node.adj)
    }

    /// Creates a fresh red vertex adjacent to exactly the given blue vertices.
    pub fn add_red_vertex(&mut self, neighbors: &[VertexId]) -> Result<VertexId, GraphError> {
        for &b in neighbors {
            if self.node(b)?.color != Color::Blue {
                return Err(GraphError::WrongColor(b));
            }
        }
        let r = self.add_vertex(Color::Red);
        for &b in neighbors {
            self.add_edge(r, b)?;
        }
        Ok(r)
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        matches!(self.slots.get(v.index()), Some(Some(_)))
    }

    #[inline]
    pub fn color(&self, v: VertexId) -> Option<Color> {
        self.slots.get(v.index()).and_then(|s| s.as_ref()).map(|n| n.color)
    }

    #[inline]
    pub fn is_blue(&self, v: VertexId) -> bool {
        self.color(v) == Some(Color::Blue)
    }

    #[inline]
    pub fn is_red(&self, v: VertexId) -> bool {
        self.color(v) == Some(Color::Red)
    }

    /// Sorted neighbor slice of a live vertex.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        Ok(&self.node(v)?.adj)
    }

    /// Sorted neighbor slice; panics if `v` is not live.
    #[inline]
    pub fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.slots[v.index()].as_ref().expect("live vertex").adj
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.contains(u) && self.adj(u).binary_search(&v).is_ok()
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.slots.iter().enumerate().filter(|(_, s)| s.is_some()).map(|(i, _)| VertexId(i as u32))
    }

    pub fn blues(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices_of(Color::Blue)
    }

    pub fn reds(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices_of(Color::Red)
    }

    fn vertices_of(&self, color: Color) -> impl Iterator<Item = VertexId> + '_ {
        self.slots.iter().enumerate().filter_map(move |(i, s)| match s {
            Some(n) if n.color == color => Some(VertexId(i as u32)),
            _ => None,
        })
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| self.adj(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn num_blue(&self) -> usize {
        self.n_blue
    }

    pub fn num_red(&self) -> usize {
        self.n_red
    }

    pub fn num_vertices(&self) -> usize {
        self.n_blue + self.n_red
    }

    pub fn num_edges(&self) -> usize {
        self.n_edges
    }

    pub fn is_empty(&self) -> bool {
        self.num_vertices() == 0
    }

    /// `N(v)`, materialized.
    pub fn neighborhood(&self, v: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        Ok(self.neighbors(v)?.iter().copied().collect())
    }

    /// `N(v) ∪ N(w)` for two distinct blue vertices.
    pub fn pair_neighborhood(&self, v: VertexId, w: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        self.check_blue_pair(v, w)?;
        Ok(self.adj(v).iter().chain(self.adj(w)).copied().collect())
    }

    /// `P(b) = { r ∈ N(b) : N(N(r)) ⊆ N(b) }`.
    pub fn private_neighborhood(&self, b: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        self.check_blue(b)?;
        let nb = self.adj(b);
        Ok(nb.iter().copied().filter(|&r| self.second_nbhd_within(r, nb)).collect())
    }

    /// `P(v,w) = { r ∈ N(v,w) : N(N(r)) ⊆ N(v,w) }`.
    pub fn pair_private_neighborhood(&self, v: VertexId, w: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        self.check_blue_pair(v, w)?;
        let union = sorted_union(self.adj(v), self.adj(w));
        Ok(union.iter().copied().filter(|&r| self.second_nbhd_within(r, &union)).collect())
    }

    /// Whether `N(N(r)) ⊆ within`, where `within` is sorted.
    pub(crate) fn second_nbhd_within(&self, r: VertexId, within: &[VertexId]) -> bool {
        self.adj(r).iter().all(|&x| is_sorted_subset(self.adj(x), within))
    }

    fn check_blue(&self, v: VertexId) -> Result<(), GraphError> {
        match self.color(v) {
            None => Err(GraphError::UnknownVertex(v)),
            Some(Color::Red) => Err(GraphError::WrongColor(v)),
            Some(Color::Blue) => Ok(()),
        }
    }

    fn check_blue_pair(&self, v: VertexId, w: VertexId) -> Result<(), GraphError> {
        if v == w {
            return Err(GraphError::SameVertex(v));
        }
        self.check_blue(v)?;
        self.check_blue(w)
    }

    /// Removes all same-color edges and all isolated blue vertices, and
    /// reports red vertices left without any neighbor.
    pub fn sanitize(&mut self) -> SanitizeReport {
        let mut report = SanitizeReport::default();
        let same: Vec<_> = self.edges().filter(|&(u, v)| self.color(u) == self.color(v)).collect();
        for &(u, v) in &same {
            self.remove_edge(u, v).expect("edge listed as present");
        }
        report.removed_edges = same;
        report.removed_blues = self.remove_isolated_blues();
        report.isolated_reds = self.reds().filter(|&r| self.degree(r) == 0).collect();
        report
    }

    pub(crate) fn remove_isolated_blues(&mut self) -> Vec<VertexId> {
        let isolated: Vec<_> = self.blues().filter(|&b| self.degree(b) == 0).collect();
        for &b in &isolated {
            self.remove_vertex(b).expect("listed as live");
        }
        isolated
    }

    fn node(&self, v: VertexId) -> Result<&Node, GraphError> {
        self.slots.get(v.index()).and_then(|s| s.as_ref()).ok_or(GraphError::UnknownVertex(v))
    }

    fn node_mut(&mut self, v: VertexId) -> &mut Node {
        self.slots[v.index()].as_mut().expect("live vertex")
    }
}

/// Outcome of [`RBGraph::sanitize`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SanitizeReport {
    pub removed_edges: Vec<(VertexId, VertexId)>,
    pub removed_blues: Vec<VertexId>,
    pub isolated_reds: Vec<VertexId>,
}

impl SanitizeReport {
    /// Some red vertex can never be dominated.
    pub fn is_infeasible(&self) -> bool {
        !self.isolated_reds.is_empty()
    }

    pub fn is_noop(&self) -> bool {
        self.removed_edges.is_empty() && self.removed_blues.is_empty()
    }
}

/// Functional form of [`RBGraph::sanitize`].
pub fn sanitize(g: &RBGraph) -> (RBGraph, SanitizeReport) {
    let mut out = g.clone();
    let report = out.sanitize();
    (out, report)
}

/// A graph together with a domination budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: RBGraph,
    pub k: i64,
}

impl Instance {
    pub fn new(graph: RBGraph, k: i64) -> Self {
        Instance { graph, k }
    }
}

/// A set of blue vertices claimed to dominate every red vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Solution {
    pub chosen: BTreeSet<VertexId>,
}

impl Solution {
    pub fn new(chosen: impl IntoIterator<Item = VertexId>) -> Self {
        Solution { chosen: chosen.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.chosen.iter().copied()
    }
}

impl FromIterator<VertexId> for Solution {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        Solution::new(iter)
    }
}

pub(crate) fn is_sorted_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

pub(crate) fn sorted_union(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
