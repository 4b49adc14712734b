//! Exact maximum independent set by branch and bound on bitsets.
//!
//! The search branches on a maximum-degree vertex of the candidate subgraph
//! (take it, or drop it) and prunes with a greedy clique cover, whose size
//! bounds the independence number of the candidates from above. Vertices of
//! degree 0 or 1 in the candidate subgraph are taken without branching.

use super::{bit, Graph, VertexSet};

/// Returned when a search exceeds its node budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudgetExceeded(pub u64);

/// Branch-and-bound engine with an optional node budget.
#[derive(Clone, Debug)]
pub struct IndependentSetSearch<'g> {
    adj: &'g [u64],
    budget: Option<u64>,
    nodes: u64,
}

impl<'g> IndependentSetSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        IndependentSetSearch {
            adj: g.adjacency(),
            budget: None,
            nodes: 0,
        }
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.budget = Some(nodes);
        self
    }

    /// Nodes expanded so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn tick(&mut self) -> Result<(), SearchBudgetExceeded> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => Err(SearchBudgetExceeded(b)),
            _ => Ok(()),
        }
    }

    /// Number of cliques in a greedy clique cover of `cand`.
    fn clique_cover_bound(&self, mut cand: u64) -> usize {
        let mut k = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            let mut pool = cand & self.adj[v];
            while pool != 0 {
                let w = pool.trailing_zeros() as usize;
                cand &= !bit(w);
                pool &= self.adj[w];
            }
            k += 1;
        }
        k
    }

    /// Largest independent set inside `cand`, or the first one found of size
    /// at least `target` when a target is given.
    fn search(
        &mut self,
        cand: u64,
        current: u64,
        best: &mut u64,
        target: Option<usize>,
    ) -> Result<bool, SearchBudgetExceeded> {
        self.tick()?;
        let mut cand = cand;
        let mut current = current;
        // Forced moves: vertices of degree <= 1 inside the candidates.
        loop {
            let mut changed = false;
            let mut scan = cand;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if cand & bit(v) == 0 {
                    continue;
                }
                if (self.adj[v] & cand).count_ones() <= 1 {
                    current |= bit(v);
                    cand &= !(bit(v) | self.adj[v]);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        let size = current.count_ones() as usize;
        if cand == 0 {
            if size > best.count_ones() as usize {
                *best = current;
            }
            return Ok(target.is_some_and(|t| size >= t));
        }
        let incumbent = best.count_ones() as usize;
        let bound = size + self.clique_cover_bound(cand);
        let floor = match target {
            Some(t) => t.max(incumbent + 1),
            None => incumbent + 1,
        };
        if bound < floor {
            return Ok(false);
        }

        let mut pivot = cand.trailing_zeros() as usize;
        let mut pivot_deg = 0;
        for v in VertexSet(cand).iter() {
            let d = (self.adj[v] & cand).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }

        if self.search(
            cand & !(bit(pivot) | self.adj[pivot]),
            current | bit(pivot),
            best,
            target,
        )? {
            return Ok(true);
        }
        self.search(cand & !bit(pivot), current, best, target)
    }

    /// Independence number of the subgraph induced on `within`.
    pub fn independence_number_within(
        &mut self,
        within: VertexSet,
    ) -> Result<usize, SearchBudgetExceeded> {
        let mut best = 0u64;
        self.search(within.bits(), 0, &mut best, None)?;
        Ok(best.count_ones() as usize)
    }

    /// Whether the subgraph on `within` has an independent set of size `k`.
    pub fn has_independent_set(
        &mut self,
        within: VertexSet,
        k: usize,
    ) -> Result<bool, SearchBudgetExceeded> {
        if k == 0 {
            return Ok(true);
        }
        if within.len() < k {
            return Ok(false);
        }
        let mut best = 0u64;
        self.search(within.bits(), 0, &mut best, Some(k))
    }

    /// A maximum independent set; ties go to the lexicographically smallest
    /// sorted vertex list.
    pub fn maximum(&mut self, n: usize) -> Result<VertexSet, SearchBudgetExceeded> {
        let all = VertexSet::full(n);
        let mut remaining = self.independence_number_within(all)?;
        let mut cand = all.bits();
        let mut chosen = 0u64;
        for v in 0..n {
            if remaining == 0 {
                break;
            }
            if cand & bit(v) == 0 {
                continue;
            }
            let rest = cand & !(bit(v) | self.adj[v]);
            if self.has_independent_set(VertexSet(rest), remaining - 1)? {
                chosen |= bit(v);
                cand = rest;
                remaining -= 1;
            } else {
                cand &= !bit(v);
            }
        }
        debug_assert_eq!(remaining, 0);
        Ok(VertexSet(chosen))
    }
}

/// |α(G)|.
pub fn independence_number(g: &Graph) -> usize {
    IndependentSetSearch::new(g)
        .independence_number_within(g.vertices())
        .expect("unbounded search")
}

/// Exact maximum independent set with lexicographic tie-break.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    IndependentSetSearch::new(g)
        .maximum(g.n())
        .expect("unbounded search")
}

/// Complement of [`max_independent_set`].
pub fn min_vertex_cover(g: &Graph) -> VertexSet {
    max_independent_set(g).complement(g.n())
}
