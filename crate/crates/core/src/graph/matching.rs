//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(V^3) per call).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{bit, Graph, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, each stored as `(a, b)` with `a < b`,
/// sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching, normalising edge orientation and order. Returns
    /// `None` if two edges share a vertex.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut used = 0u64;
        let mut out = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.min(b), a.max(b));
            if a == b || used & (bit(a) | bit(b)) != 0 {
                return None;
            }
            used |= bit(a) | bit(b);
            out.push((a, b));
        }
        out.sort_unstable();
        Some(Matching { edges: out })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn matched_vertices(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// True when every vertex of a graph on `n` vertices is matched.
    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.edges.len() == n
    }

    pub fn is_matching_of(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(a, b)| g.has_edge(a, b))
    }
}

impl Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let labels: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
        labels.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let labels = Vec::<[usize; 2]>::deserialize(d)?;
        if labels
            .iter()
            .flatten()
            .any(|&l| l == 0 || l > super::MAX_VERTICES)
        {
            return Err(serde::de::Error::custom("vertex label out of range"));
        }
        Matching::new(labels.into_iter().map(|[a, b]| (a - 1, b - 1)))
            .ok_or_else(|| serde::de::Error::custom("edges share a vertex"))
    }
}

/// Blossom search over the subgraph on `active` vertices with edges given by
/// `adj` (rows may include inactive vertices; they are masked out).
struct Blossom<'a> {
    adj: &'a [u64],
    active: u64,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [u64], active: u64) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            active,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut [bool]) {
        while self.base[v] != b {
            blossom[self.base[v]] = true;
            blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.parent.fill(NONE);
        self.in_queue.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push_back(root);
        self.in_queue[root] = true;

        while let Some(v) = self.queue.pop_front() {
            for to in VertexSet(self.adj[v] & self.active).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    let mut blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut blossom);
                    self.mark_path(to, cur, v, &mut blossom);
                    for i in 0..n {
                        if self.active & bit(i) != 0 && blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_queue[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        // Greedy start in vertex order, then augment.
        for v in VertexSet(self.active).iter() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(w) = VertexSet(self.adj[v] & self.active)
                .iter()
                .find(|&w| self.mate[w] == NONE)
            {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for root in VertexSet(self.active).iter() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

fn matching_number_on(adj: &[u64], active: u64) -> usize {
    Blossom::new(adj, active)
        .run()
        .iter()
        .filter(|&&m| m != NONE)
        .count()
        / 2
}

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_on(g.adjacency(), VertexSet::full(g.n()).bits())
}

/// A maximum matching. Among all maximum matchings this returns the
/// lexicographically smallest sorted edge sequence.
pub fn max_matching(g: &Graph) -> Matching {
    let mut adj = g.adjacency().to_vec();
    let mut active = VertexSet::full(g.n()).bits();
    let mut need = matching_number_on(&adj, active);
    let mut chosen = Vec::with_capacity(need);
    for (a, b) in g.edges() {
        if need == 0 {
            break;
        }
        if active & bit(a) == 0 || active & bit(b) == 0 {
            continue;
        }
        let rest = active & !bit(a) & !bit(b);
        if matching_number_on(&adj, rest) + 1 == need {
            chosen.push((a, b));
            active = rest;
            need -= 1;
        } else {
            adj[a] &= !bit(b);
            adj[b] &= !bit(a);
        }
    }
    Matching::new(chosen).expect("greedy selection keeps edges disjoint")
}

/// All maximum matchings in lexicographic order of their sorted edge
/// sequences, stopping after `limit`. The first one is [`max_matching`].
pub fn maximum_matchings(g: &Graph, limit: usize) -> Vec<Matching> {
    fn go(
        edges: &[(usize, usize)],
        adj: &mut Vec<u64>,
        active: u64,
        need: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if need == 0 {
            out.push(Matching::new(chosen.iter().copied()).expect("disjoint by construction"));
            return;
        }
        let Some((&(a, b), rest_edges)) = edges.split_first() else {
            return;
        };
        if active & bit(a) != 0 && active & bit(b) != 0 && adj[a] & bit(b) != 0 {
            let rest = active & !bit(a) & !bit(b);
            if matching_number_on(adj, rest) + 1 == need {
                chosen.push((a, b));
                go(rest_edges, adj, rest, need - 1, chosen, out, limit);
                chosen.pop();
            }
        }
        let had = adj[a] & bit(b) != 0;
        adj[a] &= !bit(b);
        adj[b] &= !bit(a);
        if matching_number_on(adj, active) == need {
            go(rest_edges, adj, active, need, chosen, out, limit);
        }
        if had {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
    }
    let mut adj = g.adjacency().to_vec();
    let active = VertexSet::full(g.n()).bits();
    let need = matching_number_on(&adj, active);
    let mut out = Vec::new();
    go(
        &g.edges(),
        &mut adj,
        active,
        need,
        &mut Vec::new(),
        &mut out,
        limit,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_maximum_matchings() {
        let all = maximum_matchings(&Graph::ring(6), usize::MAX);
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], max_matching(&Graph::ring(6)));
        assert_eq!(maximum_matchings(&Graph::complete(4), usize::MAX).len(), 3);
        assert_eq!(maximum_matchings(&Graph::star(4), usize::MAX).len(), 3);
        assert_eq!(maximum_matchings(&Graph::complete(6), 5).len(), 5);
    }

    fn two_stars() -> Graph {
        Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn two_stars_matching() {
        let m = max_matching(&two_stars());
        assert_eq!(m.edges(), &[(0, 5), (2, 4)]);
        assert!(m.is_matching_of(&two_stars()));
    }

    #[test]
    fn star_and_complete() {
        for n in 2..10 {
            assert_eq!(matching_number(&Graph::star(n)), 1);
            assert_eq!(matching_number(&Graph::complete(n)), n / 2);
        }
        assert_eq!(
            max_matching(&Graph::complete(6)).edges(),
            &[(0, 1), (2, 3), (4, 5)]
        );
    }

    #[test]
    fn odd_cycles_need_blossoms() {
        assert_eq!(matching_number(&Graph::ring(5)), 2);
        assert_eq!(matching_number(&Graph::ring(7)), 3);
        // Two triangles joined by a path: needs blossom contraction.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
            ],
        )
        .unwrap();
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn single_vertex_has_empty_matching() {
        assert!(max_matching(&Graph::empty(1).unwrap()).is_empty());
    }

    #[test]
    fn rejects_overlapping_edges() {
        assert!(Matching::new([(0, 1), (1, 2)]).is_none());
        assert!(Matching::new([(1, 0), (3, 2)]).unwrap().is_perfect(4));
    }
}
