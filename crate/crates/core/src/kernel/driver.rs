//! The kernelization loop.
//!
//! Both drivers run the same schedule: sanitize, exhaust Rule 1, exhaust
//! Rule 2, and start over if anything changed; otherwise apply Rule 3 if
//! possible, else Rule 4, and start over. [`kernelize_reference`] rescans the
//! whole graph for every step. [`kernelize`] keeps per-vertex candidate sets
//! and only re-examines vertices near the last change, producing the
//! identical trace.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::rules::{
    apply_to_graph, find_rule1, find_rule2, find_rule3_unchecked, find_rule4_unchecked, footprint, is_isolated_edge,
    pair_partners, pair_rule, rule1_witness, rule2_witness, Finding,
};
use super::trace::{KernelTrace, RemovedVertex, RuleApplication, RuleTag};
use super::KernelError;
use crate::graph::{Color, Instance, RBGraph, SanitizeReport, VertexId};

/// Multiplier in the kernel size guarantee `|V(G')| <= 46 k'`.
pub const SIZE_FACTOR: i64 = 46;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NoReason {
    /// A red vertex has no blue neighbor.
    IsolatedRed,
    /// The rules forced more vertices than the budget allows.
    Budget,
    /// The reduced graph is larger than `46 k'`.
    SizeBound,
}

impl NoReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NoReason::IsolatedRed => "isolated-red",
            NoReason::Budget => "budget",
            NoReason::SizeBound => "size-bound",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelResult {
    No { reason: NoReason, trace: KernelTrace },
    Reduced { kernel: Instance, trace: KernelTrace },
}

impl KernelResult {
    pub fn trace(&self) -> &KernelTrace {
        match self {
            KernelResult::No { trace, .. } | KernelResult::Reduced { trace, .. } => trace,
        }
    }

    pub fn kernel(&self) -> Option<&Instance> {
        match self {
            KernelResult::Reduced { kernel, .. } => Some(kernel),
            KernelResult::No { .. } => None,
        }
    }

    pub fn is_no(&self) -> bool {
        matches!(self, KernelResult::No { .. })
    }
}

fn record_sanitize(report: &SanitizeReport, trace: &mut KernelTrace) {
    for &(u, v) in &report.removed_edges {
        trace.applications.push(RuleApplication::bookkeeping(RuleTag::SanitizeEdge, alloc::vec![u, v]));
    }
    for &b in &report.removed_blues {
        trace.applications.push(isolated_blue_record(b));
    }
    for &r in &report.isolated_reds {
        trace.applications.push(RuleApplication::bookkeeping(RuleTag::SanitizeNo, alloc::vec![r]));
    }
}

fn isolated_blue_record(b: VertexId) -> RuleApplication {
    let mut app = RuleApplication::bookkeeping(RuleTag::SanitizeIsolatedBlue, alloc::vec![b]);
    app.removed.push(RemovedVertex { id: b, color: Color::Blue, neighbors: Vec::new() });
    app
}

fn finish(g: RBGraph, k: i64, trace: KernelTrace) -> KernelResult {
    if g.num_red() == 0 {
        return KernelResult::Reduced { kernel: Instance::new(g, k), trace };
    }
    if g.num_blue() == 0 {
        return KernelResult::No { reason: NoReason::IsolatedRed, trace };
    }
    if g.num_vertices() as i64 > SIZE_FACTOR * k {
        return KernelResult::No { reason: NoReason::SizeBound, trace };
    }
    KernelResult::Reduced { kernel: Instance::new(g, k), trace }
}

fn check_input(inst: &Instance) -> Result<(), KernelError> {
    if inst.k < 0 {
        return Err(KernelError::NegativeBudget(inst.k));
    }
    Ok(())
}

/// Reference driver: every step rescans the full graph.
pub fn kernelize_reference(inst: &Instance) -> Result<KernelResult, KernelError> {
    check_input(inst)?;
    let mut g = inst.graph.clone();
    let mut k = inst.k;
    let mut trace = KernelTrace::new(&g);
    loop {
        let report = g.sanitize();
        record_sanitize(&report, &mut trace);
        if report.is_infeasible() {
            return Ok(KernelResult::No { reason: NoReason::IsolatedRed, trace });
        }
        let mut changed = false;
        while let Some(f) = find_rule1(&g) {
            trace.applications.push(apply_to_graph(&mut g, &f)?);
            changed = true;
        }
        while let Some(f) = find_rule2(&g) {
            trace.applications.push(apply_to_graph(&mut g, &f)?);
            changed = true;
        }
        if changed {
            continue;
        }
        let Some(f) = find_rule3_unchecked(&g).or_else(|| find_rule4_unchecked(&g)) else {
            break;
        };
        let app = apply_to_graph(&mut g, &f)?;
        k += app.delta_k;
        trace.applications.push(app);
        if k < 0 {
            return Ok(KernelResult::No { reason: NoReason::Budget, trace });
        }
    }
    Ok(finish(g, k, trace))
}

/// Reduces `inst` to an equivalent instance of size at most `46 k'`, or
/// reports that it is a no-instance.
pub fn kernelize(inst: &Instance) -> Result<KernelResult, KernelError> {
    check_input(inst)?;
    let mut g = inst.graph.clone();
    let mut trace = KernelTrace::new(&g);
    let report = g.sanitize();
    record_sanitize(&report, &mut trace);
    if report.is_infeasible() {
        return Ok(KernelResult::No { reason: NoReason::IsolatedRed, trace });
    }
    Engine::new(g, inst.k, trace).run()
}

// How far a change can influence each candidate predicate: Rules 1 and 2
// look at adjacency within distance 2, the isolated-edge test within 1, and
// the pair rule within 6 (partners up to distance 4, each with a radius-2
// private-set computation).
const RADIUS_ELEMENTARY: u8 = 2;
const RADIUS_SINGLE: u8 = 1;
const RADIUS_PAIR: u8 = 6;

struct Engine {
    g: RBGraph,
    k: i64,
    trace: KernelTrace,
    rule1: BTreeSet<VertexId>,
    rule2: BTreeSet<VertexId>,
    rule3: BTreeSet<VertexId>,
    rule4: BTreeSet<VertexId>,
    pair_dirty: Vec<VertexId>,
    pair_dirty_flag: Vec<bool>,
    isolated_blues: BTreeSet<VertexId>,
    // BFS scratch, stamped per search
    stamp: Vec<u32>,
    epoch: u32,
    partners: Vec<VertexId>,
}

impl Engine {
    fn new(g: RBGraph, k: i64, trace: KernelTrace) -> Self {
        let n = g.id_bound();
        let mut e = Engine {
            g,
            k,
            trace,
            rule1: BTreeSet::new(),
            rule2: BTreeSet::new(),
            rule3: BTreeSet::new(),
            rule4: BTreeSet::new(),
            pair_dirty: Vec::new(),
            pair_dirty_flag: alloc::vec![false; n],
            isolated_blues: BTreeSet::new(),
            stamp: alloc::vec![0; n],
            epoch: 0,
            partners: Vec::new(),
        };
        let all: Vec<VertexId> = e.g.vertices().collect();
        for v in all {
            e.refresh_elementary(v);
            e.refresh_single(v);
            e.mark_pair_dirty(v);
        }
        e
    }

    fn run(mut self) -> Result<KernelResult, KernelError> {
        loop {
            self.drop_isolated_blues();
            let mut changed = false;
            while let Some(&b) = self.rule1.first() {
                let superset = rule1_witness(&self.g, b).expect("candidate set is exact");
                self.apply(&Finding::Rule1 { removed: b, superset })?;
                changed = true;
            }
            while let Some(&r) = self.rule2.first() {
                let subset = rule2_witness(&self.g, r).expect("candidate set is exact");
                self.apply(&Finding::Rule2 { removed: r, subset })?;
                changed = true;
            }
            if changed {
                continue;
            }
            let finding = if let Some(&v) = self.rule3.first() {
                Finding::Rule3 { v }
            } else {
                self.refresh_pairs();
                let Some(&v) = self.rule4.first() else { break };
                self.first_pair(v).expect("candidate set is exact")
            };
            let dk = self.apply(&finding)?;
            self.k += dk;
            if self.k < 0 {
                return Ok(KernelResult::No { reason: NoReason::Budget, trace: self.trace });
            }
        }
        debug_assert!(self.g.reds().all(|r| self.g.degree(r) > 0));
        Ok(finish(self.g, self.k, self.trace))
    }

    fn drop_isolated_blues(&mut self) {
        let pending = core::mem::take(&mut self.isolated_blues);
        for b in pending {
            if self.g.contains(b) && self.g.degree(b) == 0 {
                self.g.remove_vertex(b).expect("live");
                self.forget(b);
                self.trace.applications.push(isolated_blue_record(b));
            }
        }
    }

    fn apply(&mut self, finding: &Finding) -> Result<i64, KernelError> {
        let fp = footprint(&self.g, finding)?;
        let mut seeds: Vec<VertexId> = Vec::new();
        for &x in &fp.remove {
            seeds.push(x);
            seeds.extend_from_slice(self.g.adj(x));
        }
        if let Some(pair) = fp.gadget {
            seeds.extend_from_slice(&pair);
        }
        let ball = self.ball(&seeds, RADIUS_PAIR);

        let app = apply_to_graph(&mut self.g, finding)?;
        let dk = app.delta_k;
        for rv in &app.removed {
            self.forget(rv.id);
            for &u in &rv.neighbors {
                if self.g.is_blue(u) && self.g.degree(u) == 0 {
                    self.isolated_blues.insert(u);
                }
            }
        }
        self.grow(self.g.id_bound());
        for (x, d) in ball {
            if !self.g.contains(x) {
                continue;
            }
            if d <= RADIUS_ELEMENTARY {
                self.refresh_elementary(x);
            }
            if d <= RADIUS_SINGLE {
                self.refresh_single(x);
            }
            self.mark_pair_dirty(x);
        }
        for av in &app.added {
            self.refresh_elementary(av.id);
        }
        self.trace.applications.push(app);
        Ok(dk)
    }

    fn grow(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
            self.pair_dirty_flag.resize(n, false);
        }
    }

    /// Multi-source BFS up to `radius`, returning `(vertex, distance)`.
    fn ball(&mut self, seeds: &[VertexId], radius: u8) -> Vec<(VertexId, u8)> {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut out = Vec::new();
        for &s in seeds {
            if self.stamp[s.index()] != epoch {
                self.stamp[s.index()] = epoch;
                out.push((s, 0));
            }
        }
        let mut head = 0;
        while head < out.len() {
            let (x, d) = out[head];
            head += 1;
            if d == radius {
                continue;
            }
            for &y in self.g.adj(x) {
                if self.stamp[y.index()] != epoch {
                    self.stamp[y.index()] = epoch;
                    out.push((y, d + 1));
                }
            }
        }
        out
    }

    fn forget(&mut self, v: VertexId) {
        self.rule1.remove(&v);
        self.rule2.remove(&v);
        self.rule3.remove(&v);
        self.rule4.remove(&v);
        self.isolated_blues.remove(&v);
    }

    fn refresh_elementary(&mut self, v: VertexId) {
        match self.g.color(v) {
            Some(Color::Blue) => set_flag(&mut self.rule1, v, rule1_witness(&self.g, v).is_some()),
            Some(Color::Red) => set_flag(&mut self.rule2, v, rule2_witness(&self.g, v).is_some()),
            None => {}
        }
    }

    fn refresh_single(&mut self, v: VertexId) {
        if self.g.is_blue(v) {
            set_flag(&mut self.rule3, v, is_isolated_edge(&self.g, v));
        }
    }

    fn mark_pair_dirty(&mut self, v: VertexId) {
        if self.g.is_blue(v) && !self.pair_dirty_flag[v.index()] {
            self.pair_dirty_flag[v.index()] = true;
            self.pair_dirty.push(v);
        }
    }

    fn refresh_pairs(&mut self) {
        let dirty = core::mem::take(&mut self.pair_dirty);
        for v in dirty {
            self.pair_dirty_flag[v.index()] = false;
            if self.g.is_blue(v) {
                let hit = self.first_pair(v).is_some();
                set_flag(&mut self.rule4, v, hit);
            }
        }
    }

    fn first_pair(&mut self, v: VertexId) -> Option<Finding> {
        let mut partners = core::mem::take(&mut self.partners);
        pair_partners(&self.g, v, &mut partners);
        let found = partners
            .iter()
            .find_map(|&w| pair_rule(&self.g, v, w).map(|(case, private)| Finding::Rule4 { v, w, case, private }));
        self.partners = partners;
        found
    }
}

fn set_flag(set: &mut BTreeSet<VertexId>, v: VertexId, on: bool) {
    if on {
        set.insert(v);
    } else {
        set.remove(&v);
    }
}
