use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use sha2::{Digest, Sha256};

use super::KernelError;
use crate::graph::{Color, RBGraph, Solution, VertexId};
use crate::solver::verify_solution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleTag {
    R1,
    R2,
    R3,
    R4Case1,
    R4Case2,
    R4Case3,
    R4Case4,
    SanitizeNo,
    SanitizeEdge,
    SanitizeIsolatedBlue,
}

impl RuleTag {
    pub const ALL: [RuleTag; 10] = [
        RuleTag::R1,
        RuleTag::R2,
        RuleTag::R3,
        RuleTag::R4Case1,
        RuleTag::R4Case2,
        RuleTag::R4Case3,
        RuleTag::R4Case4,
        RuleTag::SanitizeNo,
        RuleTag::SanitizeEdge,
        RuleTag::SanitizeIsolatedBlue,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleTag::R1 => "R1",
            RuleTag::R2 => "R2",
            RuleTag::R3 => "R3",
            RuleTag::R4Case1 => "R4-case1",
            RuleTag::R4Case2 => "R4-case2",
            RuleTag::R4Case3 => "R4-case3",
            RuleTag::R4Case4 => "R4-case4",
            RuleTag::SanitizeNo => "Sanitize-NO",
            RuleTag::SanitizeEdge => "Sanitize-edge",
            RuleTag::SanitizeIsolatedBlue => "Sanitize-isolated-blue",
        }
    }

    /// Budget change the rule implies.
    pub fn delta_k(self) -> i64 {
        match self {
            RuleTag::R3 | RuleTag::R4Case3 | RuleTag::R4Case4 => -1,
            RuleTag::R4Case1 => -2,
            _ => 0,
        }
    }

    /// One of the four reduction rules, as opposed to sanitize bookkeeping.
    pub fn is_reduction(self) -> bool {
        !matches!(self, RuleTag::SanitizeNo | RuleTag::SanitizeEdge | RuleTag::SanitizeIsolatedBlue)
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleTag {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        RuleTag::ALL.into_iter().find(|t| t.as_str() == s).ok_or(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovedVertex {
    pub id: VertexId,
    pub color: Color,
    /// Neighbors at removal time.
    pub neighbors: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddedVertex {
    pub id: VertexId,
    pub neighbors: Vec<VertexId>,
}

/// One logged step of the kernelization.
///
/// `witness` holds the vertices that licensed the step: `(b, b')` for R1,
/// `(r, r')` for R2, `(v)` for R3, `(v, w)` for R4, the two endpoints for a
/// removed same-color edge, and the offending red for Sanitize-NO.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleApplication {
    pub tag: RuleTag,
    pub removed: Vec<RemovedVertex>,
    pub added: Vec<AddedVertex>,
    pub witness: Vec<VertexId>,
    pub delta_k: i64,
}

impl RuleApplication {
    pub(crate) fn bookkeeping(tag: RuleTag, witness: Vec<VertexId>) -> Self {
        RuleApplication { tag, removed: Vec::new(), added: Vec::new(), witness, delta_k: 0 }
    }

    /// Vertex-count change caused by this step.
    pub fn vertex_delta(&self) -> i64 {
        self.added.len() as i64 - self.removed.len() as i64
    }

    /// Checks the per-tag shape invariants.
    pub fn check_shape(&self) -> Result<(), KernelError> {
        let bad = |why: &'static str| Err(KernelError::MalformedRecord(why));
        if self.delta_k != self.tag.delta_k() {
            return bad("budget change does not match rule");
        }
        match self.tag {
            RuleTag::R4Case2 => {
                if self.added.len() != 1 || self.added[0].neighbors.len() != 2 {
                    return bad("pair gadget must add one red with two neighbors");
                }
            }
            _ if !self.added.is_empty() => return bad("only the pair gadget adds vertices"),
            _ => {}
        }
        let want_witness = match self.tag {
            RuleTag::R3 | RuleTag::SanitizeNo | RuleTag::SanitizeIsolatedBlue => 1,
            _ => 2,
        };
        if self.witness.len() != want_witness {
            return bad("wrong witness arity");
        }
        Ok(())
    }
}

/// Vertex and edge counts plus a content digest of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub hash: u64,
}

impl Fingerprint {
    pub fn of(g: &RBGraph) -> Self {
        let mut h = Sha256::new();
        for v in g.vertices() {
            h.update(b"v");
            h.update(v.0.to_le_bytes());
            h.update([g.color(v).unwrap().as_char() as u8]);
        }
        for (u, v) in g.edges() {
            h.update(b"e");
            h.update(u.0.to_le_bytes());
            h.update(v.0.to_le_bytes());
        }
        let digest = h.finalize();
        let mut first = [0u8; 8];
        first.copy_from_slice(&digest[..8]);
        Fingerprint { n_vertices: g.num_vertices(), n_edges: g.num_edges(), hash: u64::from_be_bytes(first) }
    }

    pub fn hash_hex(&self) -> String {
        alloc::format!("{:016x}", self.hash)
    }
}

/// Ordered log of everything the kernelizer did to an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTrace {
    pub original: Fingerprint,
    pub applications: Vec<RuleApplication>,
}

impl KernelTrace {
    pub fn new(original: &RBGraph) -> Self {
        KernelTrace { original: Fingerprint::of(original), applications: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.applications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.applications.is_empty()
    }

    /// Total budget change.
    pub fn delta_k(&self) -> i64 {
        self.applications.iter().map(|a| a.delta_k).sum()
    }

    /// Number of reduction-rule applications (sanitize steps excluded).
    pub fn reductions(&self) -> usize {
        self.applications.iter().filter(|a| a.tag.is_reduction()).count()
    }

    pub fn count(&self, tag: RuleTag) -> usize {
        self.applications.iter().filter(|a| a.tag == tag).count()
    }

    /// Replays the trace forward on `original`, reproducing the kernel graph.
    pub fn replay(&self, original: &RBGraph) -> Result<RBGraph, KernelError> {
        if Fingerprint::of(original) != self.original {
            return Err(KernelError::FingerprintMismatch);
        }
        let mut g = original.clone();
        for app in &self.applications {
            replay_step(&mut g, app)?;
        }
        Ok(g)
    }

    /// Lifts a solution of the kernel graph to one of the original graph by
    /// undoing the trace backwards.
    ///
    /// Rules 1, 2, the pair gadget and sanitize steps lift by identity; the
    /// other rules add the vertices they forced.
    pub fn lift(&self, kernel: &RBGraph, kernel_solution: &Solution) -> Result<Solution, KernelError> {
        if !verify_solution(kernel, kernel_solution) {
            return Err(KernelError::InvalidKernelSolution);
        }
        let mut chosen = kernel_solution.chosen.clone();
        for app in self.applications.iter().rev() {
            app.check_shape()?;
            match app.tag {
                RuleTag::R3 | RuleTag::R4Case3 => {
                    chosen.insert(app.witness[0]);
                }
                RuleTag::R4Case4 => {
                    chosen.insert(app.witness[1]);
                }
                RuleTag::R4Case1 => {
                    chosen.insert(app.witness[0]);
                    chosen.insert(app.witness[1]);
                }
                _ => {}
            }
        }
        Ok(Solution { chosen })
    }
}

fn replay_step(g: &mut RBGraph, app: &RuleApplication) -> Result<(), KernelError> {
    app.check_shape()?;
    if app.tag == RuleTag::SanitizeEdge {
        g.remove_edge(app.witness[0], app.witness[1])?;
        return Ok(());
    }
    for rv in &app.removed {
        if g.color(rv.id) != Some(rv.color) || g.neighbors(rv.id)? != rv.neighbors.as_slice() {
            return Err(KernelError::ReplayDiverged(rv.id));
        }
        g.remove_vertex(rv.id)?;
    }
    for av in &app.added {
        if g.next_id() != av.id {
            return Err(KernelError::ReplayDiverged(av.id));
        }
        g.add_red_vertex(&av.neighbors)?;
    }
    Ok(())
}

/// Functional form of [`KernelTrace::lift`].
pub fn lift_solution(
    trace: &KernelTrace,
    kernel: &RBGraph,
    kernel_solution: &Solution,
) -> Result<Solution, KernelError> {
    trace.lift(kernel, kernel_solution)
}
