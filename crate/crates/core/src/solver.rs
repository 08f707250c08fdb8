//! Exact red-blue domination and dominating-set oracles.
//!
//! Both problems are solved as set cover: for red-blue domination the blue
//! vertices are the sets and the reds the universe; for dominating set every
//! closed neighborhood is a set.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Color, RBGraph, Solution, VertexId};
use crate::simple::SimpleGraph;

/// Largest graph [`min_ds`] accepts.
pub const MAX_DS_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("instance has {0} vertices, above the limit of {1}")]
    TooLarge(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Infeasible,
    Optimal { size: usize, witness: Solution },
}

impl SolveOutcome {
    pub fn size(&self) -> Option<usize> {
        match self {
            SolveOutcome::Optimal { size, .. } => Some(*size),
            SolveOutcome::Infeasible => None,
        }
    }

    pub fn witness(&self) -> Option<&Solution> {
        match self {
            SolveOutcome::Optimal { witness, .. } => Some(witness),
            SolveOutcome::Infeasible => None,
        }
    }
}

/// Minimum dominating set of a simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsOutcome {
    pub size: usize,
    /// Lexicographically smallest optimal vertex set.
    pub witness: Vec<usize>,
}

/// True iff `solution` consists of live blue vertices and every red vertex
/// has a neighbor in it.
pub fn verify_solution(g: &RBGraph, solution: &Solution) -> bool {
    solution.iter().all(|b| g.is_blue(b)) && g.reds().all(|r| g.adj(r).iter().any(|b| solution.chosen.contains(b)))
}

/// Exact minimum red-blue dominating set. Among optima the lexicographically
/// smallest id set is returned.
pub fn min_rbds(g: &RBGraph) -> SolveOutcome {
    let (cover, blues) = rbds_cover(g);
    match cover.minimum() {
        None => SolveOutcome::Infeasible,
        Some(sets) => SolveOutcome::Optimal { size: sets.len(), witness: sets.into_iter().map(|i| blues[i]).collect() },
    }
}

/// Whether some set of at most `k` blue vertices dominates all reds.
pub fn decide_rbds(g: &RBGraph, k: i64) -> bool {
    if k < 0 {
        return false;
    }
    let (cover, _) = rbds_cover(g);
    cover.within(k as usize).is_some()
}

/// Exact minimum dominating set for graphs of at most [`MAX_DS_VERTICES`]
/// vertices.
pub fn min_ds(g: &SimpleGraph) -> Result<DsOutcome, SolverError> {
    let n = g.num_vertices();
    if n > MAX_DS_VERTICES {
        return Err(SolverError::TooLarge(n, MAX_DS_VERTICES));
    }
    let sets = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(v);
            for &u in g.neighbors(v) {
                s.insert(u);
            }
            s
        })
        .collect();
    let cover = SetCover::new(n, sets);
    let witness = cover.minimum().expect("closed neighborhoods cover every vertex");
    Ok(DsOutcome { size: witness.len(), witness })
}

fn rbds_cover(g: &RBGraph) -> (SetCover, Vec<VertexId>) {
    let blues: Vec<VertexId> = g.blues().collect();
    let reds: Vec<VertexId> = g.reds().collect();
    let red_index = |r: VertexId| reds.binary_search(&r).ok();
    let sets = blues
        .iter()
        .map(|&b| {
            let mut s = FixedBitSet::with_capacity(reds.len());
            for &r in g.adj(b) {
                if g.color(r) == Some(Color::Red) {
                    s.insert(red_index(r).expect("red listed"));
                }
            }
            s
        })
        .collect();
    (SetCover::new(reds.len(), sets), blues)
}

/// Unweighted set cover over a universe `0..n`.
pub(crate) struct SetCover {
    n: usize,
    sets: Vec<FixedBitSet>,
    /// For each element, the sets containing it.
    containing: Vec<Vec<usize>>,
}

struct Search<'a> {
    cover: &'a SetCover,
    /// Solutions must be strictly smaller than this.
    limit: usize,
    /// Stop at the first solution under `limit`.
    first_only: bool,
    best: Option<Vec<usize>>,
    chosen: Vec<usize>,
}

impl SetCover {
    pub(crate) fn new(n: usize, sets: Vec<FixedBitSet>) -> Self {
        let mut containing = alloc::vec![Vec::new(); n];
        for (i, s) in sets.iter().enumerate() {
            for e in s.ones() {
                containing[e].push(i);
            }
        }
        SetCover { n, sets, containing }
    }

    fn full(&self) -> FixedBitSet {
        let mut u = FixedBitSet::with_capacity(self.n);
        u.insert_range(..);
        u
    }

    fn all_sets(&self) -> FixedBitSet {
        let mut a = FixedBitSet::with_capacity(self.sets.len());
        a.insert_range(..);
        a
    }

    /// Lexicographically smallest minimum cover, or `None` if some element
    /// is in no set.
    pub(crate) fn minimum(&self) -> Option<Vec<usize>> {
        if self.containing.iter().any(|c| c.is_empty()) {
            return None;
        }
        let universe = self.full();
        let greedy = self.greedy(&universe);
        let size = match self.search(&universe, &self.all_sets(), greedy.len(), false) {
            Some(better) => better.len(),
            None => greedy.len(),
        };
        Some(self.lex_smallest(size))
    }

    /// Some cover with at most `k` sets.
    pub(crate) fn within(&self, k: usize) -> Option<Vec<usize>> {
        if self.containing.iter().any(|c| c.is_empty()) {
            return None;
        }
        self.search(&self.full(), &self.all_sets(), k + 1, true)
    }

    fn greedy(&self, universe: &FixedBitSet) -> Vec<usize> {
        let mut uncovered = universe.clone();
        let mut picked = Vec::new();
        while !uncovered.is_clear() {
            let (best, _) = self
                .sets
                .iter()
                .enumerate()
                .map(|(i, s)| (i, s.intersection_count(&uncovered)))
                .max_by_key(|&(i, c)| (c, core::cmp::Reverse(i)))
                .expect("feasible");
            uncovered.difference_with(&self.sets[best]);
            picked.push(best);
        }
        picked
    }

    fn search(
        &self,
        uncovered: &FixedBitSet,
        allowed: &FixedBitSet,
        limit: usize,
        first_only: bool,
    ) -> Option<Vec<usize>> {
        let mut s = Search { cover: self, limit, first_only, best: None, chosen: Vec::new() };
        s.branch(uncovered.clone(), allowed.clone());
        s.best
    }

    /// Rebuilds an optimum of known `size` greedily by smallest index.
    fn lex_smallest(&self, size: usize) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::with_capacity(size);
        let mut uncovered = self.full();
        let mut start = 0;
        while chosen.len() < size {
            let rest = size - chosen.len() - 1;
            let pick = (start..self.sets.len())
                .filter(|&c| self.sets[c].intersection_count(&uncovered) > 0)
                .find(|&c| {
                    let mut left = uncovered.clone();
                    left.difference_with(&self.sets[c]);
                    if left.is_clear() {
                        return true;
                    }
                    if rest == 0 {
                        return false;
                    }
                    let mut allowed = FixedBitSet::with_capacity(self.sets.len());
                    allowed.insert_range(c + 1..);
                    self.search(&left, &allowed, rest + 1, true).is_some()
                })
                .expect("an optimum of this size exists");
            uncovered.difference_with(&self.sets[pick]);
            chosen.push(pick);
            start = pick + 1;
        }
        debug_assert!(uncovered.is_clear());
        chosen
    }
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.first_only && self.best.is_some()
    }

    fn branch(&mut self, uncovered: FixedBitSet, mut allowed: FixedBitSet) {
        if self.done() {
            return;
        }
        if uncovered.is_clear() {
            if self.chosen.len() < self.limit {
                self.limit = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        if self.chosen.len() + 1 >= self.limit {
            return;
        }
        let cover = self.cover;

        // Element with the fewest allowed sets; also gather the bound data.
        let mut pivot = usize::MAX;
        let mut pivot_count = usize::MAX;
        for e in uncovered.ones() {
            let c = cover.containing[e].iter().filter(|&&s| allowed.contains(s)).count();
            if c == 0 {
                return;
            }
            if c < pivot_count {
                pivot_count = c;
                pivot = e;
            }
        }
        if self.chosen.len() + self.lower_bound(&uncovered, &allowed) >= self.limit {
            return;
        }

        let mut options: Vec<(usize, FixedBitSet)> = cover.containing[pivot]
            .iter()
            .filter(|&&s| allowed.contains(s))
            .map(|&s| {
                let mut gain = cover.sets[s].clone();
                gain.intersect_with(&uncovered);
                (s, gain)
            })
            .collect();
        // Skip options whose gain is inside another option's gain; on ties
        // keep the lower index.
        let dominated: Vec<bool> = (0..options.len())
            .map(|i| {
                options.iter().enumerate().any(|(j, other)| {
                    j != i && options[i].1.is_subset(&other.1) && (options[i].1 != other.1 || other.0 < options[i].0)
                })
            })
            .collect();
        let mut keep = dominated.iter();
        options.retain(|_| !*keep.next().unwrap());
        options.sort_by_key(|(s, gain)| (core::cmp::Reverse(gain.count_ones(..)), *s));

        for (s, gain) in options {
            let mut rest = uncovered.clone();
            rest.difference_with(&gain);
            allowed.remove(s);
            self.chosen.push(s);
            self.branch(rest, allowed.clone());
            self.chosen.pop();
            if self.done() || self.chosen.len() + 1 >= self.limit {
                return;
            }
        }
    }

    fn lower_bound(&self, uncovered: &FixedBitSet, allowed: &FixedBitSet) -> usize {
        let cover = self.cover;
        let max_gain = allowed.ones().map(|s| cover.sets[s].intersection_count(uncovered)).max().unwrap_or(0);
        if max_gain == 0 {
            return usize::MAX / 2;
        }
        let by_size = uncovered.count_ones(..).div_ceil(max_gain);

        // Elements with pairwise disjoint candidate sets need distinct sets.
        let mut used = FixedBitSet::with_capacity(cover.sets.len());
        let mut packing = 0;
        for e in uncovered.ones() {
            let cands = cover.containing[e].iter().filter(|&&s| allowed.contains(s));
            if cands.clone().all(|&s| !used.contains(s)) {
                packing += 1;
                for &s in cover.containing[e].iter().filter(|&&s| allowed.contains(s)) {
                    used.insert(s);
                }
            }
        }
        by_size.max(packing)
    }
}
