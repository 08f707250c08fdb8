//! Left-right planarity test with embedding construction.
//!
//! Follows Brandes' formulation of the de Fraysseix–Rosenstiehl criterion:
//! a DFS orientation with lowpoints, a constraint-stack test over conflict
//! pairs of return-edge intervals, and a final embedding pass driven by the
//! edge sides found during testing. All three phases are iterative.

use alloc::vec::Vec;

use crate::simple::SimpleGraph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval { low: Some(e), high: Some(e) }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    g: &'a SimpleGraph,
    // undirected edge ids: incident[v] = (neighbor, edge)
    incident: Vec<Vec<(usize, usize)>>,
    // orientation of each edge once visited
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<usize>>,
    roots: Vec<usize>,

    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    reference: Vec<Option<usize>>,
    side: Vec<i8>,
}

/// Runs the test; on success returns, for every vertex, its neighbors in
/// clockwise order.
pub(crate) fn lr_embedding(g: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.num_vertices();
    let m = g.num_edges();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut st = LrState::new(g);
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            st.roots.push(v);
            st.orient(v);
        }
    }
    for v in 0..n {
        let depth = &st.nesting_depth;
        st.out[v].sort_by_key(|&e| depth[e]);
    }
    for i in 0..st.roots.len() {
        if !st.test(st.roots[i]) {
            return None;
        }
    }
    Some(st.embed())
}

impl<'a> LrState<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.num_vertices();
        let m = g.num_edges();
        let mut incident = alloc::vec![Vec::new(); n];
        for (e, (u, v)) in g.edges().enumerate() {
            incident[u].push((v, e));
            incident[v].push((u, e));
        }
        LrState {
            g,
            incident,
            src: alloc::vec![NONE; m],
            dst: alloc::vec![NONE; m],
            oriented: alloc::vec![false; m],
            height: alloc::vec![NONE; n],
            parent_edge: alloc::vec![NONE; n],
            lowpt: alloc::vec![0; m],
            lowpt2: alloc::vec![0; m],
            nesting_depth: alloc::vec![0; m],
            out: alloc::vec![Vec::new(); n],
            roots: Vec::new(),
            stack: Vec::new(),
            stack_bottom: alloc::vec![0; m],
            lowpt_edge: alloc::vec![NONE; m],
            reference: alloc::vec![None; m],
            side: alloc::vec![1; m],
        }
    }

    fn orient(&mut self, root: usize) {
        let mut next = alloc::vec![0usize; 0];
        next.resize(self.g.num_vertices(), 0);
        let mut descended = alloc::vec![false; self.src.len()];
        let mut dfs = alloc::vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while next[v] < self.incident[v].len() {
                let (w, vw) = self.incident[v][next[v]];
                if !descended[vw] {
                    if self.oriented[vw] {
                        next[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.src[vw] = v;
                    self.dst[vw] = w;
                    self.out[v].push(vw);
                    self.lowpt[vw] = self.height[v];
                    self.lowpt2[vw] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        dfs.push(v);
                        dfs.push(w);
                        descended[vw] = true;
                        break;
                    }
                    self.lowpt[vw] = self.height[w];
                }
                self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    // chordal
                    self.nesting_depth[vw] += 1;
                }
                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                next[v] += 1;
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let n = self.g.num_vertices();
        let mut next = alloc::vec![0usize; n];
        let mut descended = alloc::vec![false; self.src.len()];
        let mut dfs = alloc::vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut suspended = false;
            while next[v] < self.out[v].len() {
                let ei = self.out[v][next[v]];
                let w = self.dst[ei];
                if !descended[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if self.parent_edge[w] == ei {
                        dfs.push(v);
                        dfs.push(w);
                        descended[ei] = true;
                        suspended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair { left: Interval::default(), right: Interval::single(ei) });
                }
                if self.lowpt[ei] < self.height[v] {
                    if ei == self.out[v][0] {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                next[v] += 1;
            }
            if !suspended && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                // align
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(&top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.reference[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(low) = p.left.low {
                self.reference[low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            // trim right interval
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        // side of e is side of a highest return edge
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        let mut chain = Vec::new();
        let mut x = e;
        while let Some(r) = self.reference[x] {
            chain.push(x);
            x = r;
        }
        for &y in chain.iter().rev() {
            let r = self.reference[y].take().unwrap();
            self.side[y] *= self.side[r];
        }
        self.side[e]
    }

    fn embed(&mut self) -> Vec<Vec<usize>> {
        let n = self.g.num_vertices();
        let m = self.src.len();
        for e in 0..m {
            let s = self.sign(e) as i64;
            self.nesting_depth[e] *= s;
        }
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| depth[e]);
        }
        let mut emb = HalfEdges::new(&self.incident);
        for v in 0..n {
            let mut prev = None;
            for &e in &self.out[v] {
                let w = self.dst[e];
                emb.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        let mut left_ref = alloc::vec![NONE; n];
        let mut right_ref = alloc::vec![NONE; n];
        let mut next = alloc::vec![0usize; n];
        for i in 0..self.roots.len() {
            let mut dfs = alloc::vec![self.roots[i]];
            while let Some(v) = dfs.pop() {
                while next[v] < self.out[v].len() {
                    let ei = self.out[v][next[v]];
                    next[v] += 1;
                    let w = self.dst[ei];
                    if self.parent_edge[w] == ei {
                        emb.add_first(w, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        dfs.push(v);
                        dfs.push(w);
                        break;
                    }
                    if self.side[ei] == 1 {
                        emb.add_cw(w, v, Some(right_ref[w]));
                    } else {
                        emb.add_ccw(w, v, Some(left_ref[w]));
                        left_ref[w] = v;
                    }
                }
            }
        }
        emb.rotation()
    }
}

/// Cyclic neighbor lists under construction, as linked half-edges.
struct HalfEdges {
    // position of each neighbor in `nbrs[v]`
    nbrs: Vec<Vec<usize>>,
    cw: Vec<Vec<usize>>,
    ccw: Vec<Vec<usize>>,
    first: Vec<usize>,
}

impl HalfEdges {
    fn new(incident: &[Vec<(usize, usize)>]) -> Self {
        let nbrs: Vec<Vec<usize>> = incident
            .iter()
            .map(|inc| {
                let mut ns: Vec<usize> = inc.iter().map(|&(w, _)| w).collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        let cw = nbrs.iter().map(|ns| alloc::vec![NONE; ns.len()]).collect();
        let ccw = nbrs.iter().map(|ns| alloc::vec![NONE; ns.len()]).collect();
        HalfEdges { first: alloc::vec![NONE; nbrs.len()], nbrs, cw, ccw }
    }

    fn slot(&self, v: usize, w: usize) -> usize {
        self.nbrs[v].binary_search(&w).expect("edge exists")
    }

    /// Inserts `v -> w` clockwise after `v -> reference`.
    fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        let sw = self.slot(v, w);
        match reference {
            None => {
                self.cw[v][sw] = sw;
                self.ccw[v][sw] = sw;
                self.first[v] = sw;
            }
            Some(r) => {
                let sr = self.slot(v, r);
                let after = self.cw[v][sr];
                self.cw[v][sr] = sw;
                self.cw[v][sw] = after;
                self.ccw[v][after] = sw;
                self.ccw[v][sw] = sr;
            }
        }
    }

    /// Inserts `v -> w` counterclockwise before `v -> reference`.
    fn add_ccw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(v, w, None),
            Some(r) => {
                let sr = self.slot(v, r);
                let before = self.nbrs[v][self.ccw[v][sr]];
                self.add_cw(v, w, Some(before));
                if self.first[v] == sr {
                    self.first[v] = self.slot(v, w);
                }
            }
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let reference = (self.first[v] != NONE).then(|| self.nbrs[v][self.first[v]]);
        self.add_ccw(v, w, reference);
    }

    fn rotation(&self) -> Vec<Vec<usize>> {
        (0..self.nbrs.len())
            .map(|v| {
                let mut order = Vec::with_capacity(self.nbrs[v].len());
                if self.first[v] == NONE {
                    return order;
                }
                let mut s = self.first[v];
                loop {
                    order.push(self.nbrs[v][s]);
                    s = self.cw[v][s];
                    if s == self.first[v] {
                        break;
                    }
                }
                order
            })
            .collect()
    }
}
