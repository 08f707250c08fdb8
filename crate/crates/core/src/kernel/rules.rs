//! The four reduction rules: detection (`find_rule*`) and application.
//!
//! Finders scan vertices, or pairs `(v, w)` with `v < w`, in ascending id
//! order and return the first match. When two neighborhoods are equal the
//! lower id is the one removed.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::trace::{AddedVertex, RemovedVertex, RuleApplication, RuleTag};
use super::KernelError;
use crate::graph::{is_sorted_subset, sorted_union, Instance, RBGraph, VertexId};

/// Which branch of the pair rule applies, by the two containment tests
/// `P(v,w) ⊆ N(v)` and `P(v,w) ⊆ N(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairCase {
    /// Neither containment holds: both `v` and `w` are forced.
    Both,
    /// Both hold: the private set collapses to one gadget red.
    Gadget,
    /// Only `P ⊆ N(v)`: `v` is forced.
    First,
    /// Only `P ⊆ N(w)`: `w` is forced.
    Second,
}

impl PairCase {
    pub fn number(self) -> u8 {
        match self {
            PairCase::Both => 1,
            PairCase::Gadget => 2,
            PairCase::First => 3,
            PairCase::Second => 4,
        }
    }

    pub fn from_containment(in_v: bool, in_w: bool) -> PairCase {
        match (in_v, in_w) {
            (false, false) => PairCase::Both,
            (true, true) => PairCase::Gadget,
            (true, false) => PairCase::First,
            (false, true) => PairCase::Second,
        }
    }
}

/// A rule instance found on a specific graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding {
    /// Remove blue `removed`, whose neighborhood is inside `superset`'s.
    Rule1 {
        removed: VertexId,
        superset: VertexId,
    },
    /// Remove red `removed`, whose neighborhood contains `subset`'s.
    Rule2 {
        removed: VertexId,
        subset: VertexId,
    },
    /// Take `v` into the solution; remove `v` and `N(v)`.
    Rule3 {
        v: VertexId,
    },
    Rule4 {
        v: VertexId,
        w: VertexId,
        case: PairCase,
        private: Vec<VertexId>,
    },
}

/// Smallest blue `b' != b` with `N(b) ⊆ N(b')`.
pub(crate) fn rule1_witness(g: &RBGraph, b: VertexId) -> Option<VertexId> {
    let nb = g.adj(b);
    if nb.is_empty() {
        return g.blues().find(|&x| x != b);
    }
    // Any superset shares N(b)'s first red, so candidates are its neighbors.
    g.adj(nb[0]).iter().copied().filter(|&x| x != b && g.is_blue(x)).find(|&x| is_sorted_subset(nb, g.adj(x)))
}

/// Smallest red `r' != r` with `N(r') ⊆ N(r)`.
pub(crate) fn rule2_witness(g: &RBGraph, r: VertexId) -> Option<VertexId> {
    let nr = g.adj(r);
    let mut best: Option<VertexId> = None;
    for &b in nr {
        for &x in g.adj(b) {
            if x != r && g.is_red(x) && best.is_none_or(|cur| x < cur) && is_sorted_subset(g.adj(x), nr) {
                best = Some(x);
            }
        }
    }
    best
}

pub fn find_rule1(g: &RBGraph) -> Option<Finding> {
    g.blues().find_map(|b| rule1_witness(g, b).map(|superset| Finding::Rule1 { removed: b, superset }))
}

pub fn find_rule2(g: &RBGraph) -> Option<Finding> {
    // An isolated red has N = ∅, a subset of every red neighborhood.
    let isolated: Vec<VertexId> = g.reds().filter(|&r| g.degree(r) == 0).collect();
    g.reds().find_map(|r| {
        let local = rule2_witness(g, r);
        let empty = isolated.iter().copied().find(|&z| z != r);
        let subset = match (local, empty) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        subset.map(|subset| Finding::Rule2 { removed: r, subset })
    })
}

/// Fact-6 shape: `N(v) = {r}` and `N(r) = {v}`.
#[inline]
pub(crate) fn is_isolated_edge(g: &RBGraph, v: VertexId) -> bool {
    let nv = g.adj(v);
    nv.len() == 1 && g.is_red(nv[0]) && g.adj(nv[0]) == [v]
}

fn check_reduced_under_1_2(g: &RBGraph) -> Result<(), KernelError> {
    if find_rule1(g).is_some() || find_rule2(g).is_some() {
        return Err(KernelError::NotReducedUnderElementaryRules);
    }
    Ok(())
}

/// Rule 3 detection through the two-vertex-component characterization,
/// valid on graphs reduced under Rules 1 and 2.
pub fn find_rule3(g: &RBGraph) -> Result<Option<Finding>, KernelError> {
    check_reduced_under_1_2(g)?;
    Ok(find_rule3_unchecked(g))
}

pub(crate) fn find_rule3_unchecked(g: &RBGraph) -> Option<Finding> {
    g.blues().find(|&v| is_isolated_edge(g, v)).map(|v| Finding::Rule3 { v })
}

/// Rule 3 detection straight from the definition: first blue with `P(v) ≠ ∅`.
pub fn find_rule3_definitional(g: &RBGraph) -> Option<Finding> {
    g.blues().find(|&v| has_private(g, v)).map(|v| Finding::Rule3 { v })
}

pub(crate) fn has_private(g: &RBGraph, v: VertexId) -> bool {
    let nv = g.adj(v);
    nv.iter().any(|&r| g.second_nbhd_within(r, nv))
}

/// Evaluates the pair rule on `(v, w)`: `Some` iff `|P(v,w)| > 1` and no
/// third blue dominates `P(v,w)`.
pub(crate) fn pair_rule(g: &RBGraph, v: VertexId, w: VertexId) -> Option<(PairCase, Vec<VertexId>)> {
    let (nv, nw) = (g.adj(v), g.adj(w));
    let union = sorted_union(nv, nw);
    let private: Vec<VertexId> = union.iter().copied().filter(|&r| g.second_nbhd_within(r, &union)).collect();
    if private.len() <= 1 {
        return None;
    }
    let dominated =
        g.adj(private[0]).iter().any(|&d| d != v && d != w && g.is_blue(d) && is_sorted_subset(&private, g.adj(d)));
    if dominated {
        return None;
    }
    let case = PairCase::from_containment(is_sorted_subset(&private, nv), is_sorted_subset(&private, nw));
    Some((case, private))
}

/// Blues at distance 2 or 4 from `v` with id above `v`, ascending.
pub(crate) fn pair_partners(g: &RBGraph, v: VertexId, out: &mut Vec<VertexId>) {
    out.clear();
    let mut frontier: Vec<VertexId> = alloc::vec![v];
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    seen.insert(v);
    for _ in 0..4 {
        let mut next = Vec::new();
        for &x in &frontier {
            for &y in g.adj(x) {
                if seen.insert(y) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    out.extend(seen.into_iter().filter(|&x| x > v && g.is_blue(x)));
}

/// Rule 4 detection by pair scan. Requires Rules 1 and 2 to be exhausted.
pub fn find_rule4(g: &RBGraph) -> Result<Option<Finding>, KernelError> {
    check_reduced_under_1_2(g)?;
    Ok(find_rule4_unchecked(g))
}

pub(crate) fn find_rule4_unchecked(g: &RBGraph) -> Option<Finding> {
    // Pairs further apart than four edges satisfy P(v,w) = P(v) ∪ P(w), so
    // they only need examining when one side has a private neighbor.
    let with_private: Vec<VertexId> = g.blues().filter(|&b| has_private(g, b)).collect();
    let mut partners = Vec::new();
    for v in g.blues() {
        pair_partners(g, v, &mut partners);
        if has_private(g, v) {
            partners = g.blues().filter(|&x| x > v).collect();
        } else {
            for &x in with_private.iter().filter(|&&x| x > v) {
                if let Err(pos) = partners.binary_search(&x) {
                    partners.insert(pos, x);
                }
            }
        }
        for &w in &partners {
            if let Some((case, private)) = pair_rule(g, v, w) {
                return Some(Finding::Rule4 { v, w, case, private });
            }
        }
    }
    None
}

/// True iff none of the four rules applies.
pub fn is_reduced(g: &RBGraph) -> bool {
    find_rule1(g).is_none()
        && find_rule2(g).is_none()
        && find_rule3_unchecked(g).is_none()
        && find_rule4_unchecked(g).is_none()
}

/// What a finding removes and adds, computed against the graph it was found on.
pub(crate) struct Footprint {
    pub remove: Vec<VertexId>,
    pub gadget: Option<[VertexId; 2]>,
}

pub(crate) fn footprint(g: &RBGraph, finding: &Finding) -> Result<Footprint, KernelError> {
    let live = |x: VertexId| {
        if g.contains(x) {
            Ok(x)
        } else {
            Err(KernelError::StaleFinding(x))
        }
    };
    let with_nbhd = |xs: &[VertexId]| -> Result<Vec<VertexId>, KernelError> {
        let mut set = BTreeSet::new();
        for &x in xs {
            live(x)?;
            set.insert(x);
            set.extend(g.adj(x).iter().copied());
        }
        Ok(set.into_iter().collect())
    };
    Ok(match *finding {
        Finding::Rule1 { removed, superset } => {
            live(superset)?;
            Footprint { remove: alloc::vec![live(removed)?], gadget: None }
        }
        Finding::Rule2 { removed, subset } => {
            live(subset)?;
            Footprint { remove: alloc::vec![live(removed)?], gadget: None }
        }
        Finding::Rule3 { v } => Footprint { remove: with_nbhd(&[v])?, gadget: None },
        Finding::Rule4 { v, w, case, ref private } => match case {
            PairCase::Both => Footprint { remove: with_nbhd(&[v, w])?, gadget: None },
            PairCase::Gadget => {
                live(v)?;
                live(w)?;
                for &r in private {
                    live(r)?;
                }
                Footprint { remove: private.clone(), gadget: Some([v, w]) }
            }
            PairCase::First => {
                live(w)?;
                Footprint { remove: with_nbhd(&[v])?, gadget: None }
            }
            PairCase::Second => {
                live(v)?;
                Footprint { remove: with_nbhd(&[w])?, gadget: None }
            }
        },
    })
}

pub(crate) fn apply_to_graph(g: &mut RBGraph, finding: &Finding) -> Result<RuleApplication, KernelError> {
    let fp = footprint(g, finding)?;
    let (tag, witness, delta_k) = match *finding {
        Finding::Rule1 { removed, superset } => (RuleTag::R1, alloc::vec![removed, superset], 0),
        Finding::Rule2 { removed, subset } => (RuleTag::R2, alloc::vec![removed, subset], 0),
        Finding::Rule3 { v } => (RuleTag::R3, alloc::vec![v], -1),
        Finding::Rule4 { v, w, case, .. } => {
            let (tag, dk) = match case {
                PairCase::Both => (RuleTag::R4Case1, -2),
                PairCase::Gadget => (RuleTag::R4Case2, 0),
                PairCase::First => (RuleTag::R4Case3, -1),
                PairCase::Second => (RuleTag::R4Case4, -1),
            };
            (tag, alloc::vec![v, w], dk)
        }
    };
    let mut removed = Vec::with_capacity(fp.remove.len());
    for &x in &fp.remove {
        let color = g.color(x).expect("footprint vertices are live");
        let neighbors = g.remove_vertex(x)?;
        removed.push(RemovedVertex { id: x, color, neighbors });
    }
    let mut added = Vec::new();
    if let Some(pair) = fp.gadget {
        let id = g.add_red_vertex(&pair)?;
        added.push(AddedVertex { id, neighbors: pair.to_vec() });
    }
    Ok(RuleApplication { tag, removed, added, witness, delta_k })
}

/// Applies a finding to the instance it was produced on.
pub fn apply_rule(inst: &mut Instance, finding: &Finding) -> Result<RuleApplication, KernelError> {
    let app = apply_to_graph(&mut inst.graph, finding)?;
    inst.k += app.delta_k;
    Ok(app)
}
