//! Simple undirected graphs on at most 64 vertices, stored as one neighbour
//! bitset per vertex, together with the exact combinatorial solvers that the
//! entanglement evaluation is built on.
//!
//! Vertices are `0..n` in the API. All text formats (edge lists, reports,
//! product-state strings) use 1-based labels.

mod independent;
mod matching;
mod orbit;
mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub use independent::{
    independence_number, max_independent_set, min_vertex_cover, IndependentSetSearch,
    SearchBudgetExceeded,
};
pub use matching::{matching_number, max_matching, maximum_matchings, Matching};
pub use orbit::{lc_orbit, lc_orbit_members, OrbitMember, OrbitSummary, DEFAULT_ORBIT_CAP};
pub use parse::{parse_connected_graph, parse_graph, to_edge_list, to_graph6, GraphFormat};

/// Hard cap on the number of vertices.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Complement within `0..n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & low_mask(n))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Sorted 1-based labels, as used in reports.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if labels.iter().any(|&l| l == 0 || l > MAX_VERTICES) {
            return Err(serde::de::Error::custom("vertex label out of range"));
        }
        Ok(labels.into_iter().map(|l| l - 1).collect())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph. Row `a` of `adj` is the neighbourhood of `a`.
///
/// The derived ordering compares adjacency rows lexicographically; it is the
/// canonical order used for deterministic tie-breaks between labelled graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v) + 1,
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u + 1));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v) + 1, u.max(v) + 1));
            }
            g.toggle_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric and
    /// loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mask = low_mask(n);
        for (a, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 64 - row.leading_zeros() as usize,
                    n,
                });
            }
            if row & bit(a) != 0 {
                return Err(GraphError::SelfLoop(a + 1));
            }
            for b in VertexSet(row).iter() {
                if adj[b] & bit(a) == 0 {
                    return Err(GraphError::Asymmetric(a + 1, b + 1));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn ring(n: usize) -> Self {
        assert!(n >= 3, "ring needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("valid ring")
    }

    /// Star with centre `0`.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).expect("valid star")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("valid vertex count");
        for a in 0..n {
            g.adj[a] = low_mask(n) & !bit(a);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbourhood(&self, a: usize) -> VertexSet {
        VertexSet(self.adj[a])
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & bit(b) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            for b in VertexSet(self.adj[a] & !low_mask(a + 1)).iter() {
                out.push((a, b));
            }
        }
        out
    }

    /// Adds the edge if absent, removes it if present.
    pub fn toggle_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        self.adj[a] ^= bit(b);
        self.adj[b] ^= bit(a);
    }

    fn check_vertex(&self, a: usize) -> Result<(), GraphError> {
        if a >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: a + 1,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Local complementation at `a`: complements the subgraph induced by the
    /// neighbourhood of `a`.
    pub fn local_complement(&self, a: usize) -> Result<Graph, GraphError> {
        self.check_vertex(a)?;
        let mut g = self.clone();
        g.local_complement_in_place(a);
        Ok(g)
    }

    pub(crate) fn local_complement_in_place(&mut self, a: usize) {
        let na = self.adj[a];
        for b in VertexSet(na).iter() {
            self.adj[b] ^= na & !bit(b);
        }
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0u64;
                for v in VertexSet(frontier).iter() {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A proper 2-colouring, if one exists. Each component's smallest vertex
    /// goes into the first class.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbourhood(v).iter() {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        let first: VertexSet = (0..self.n).filter(|&v| colour[v] == 0).collect();
        Some((first, first.complement(self.n)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        self.is_independent(s.complement(self.n))
    }

    /// Rank over GF(2) of the adjacency block between `a` and its complement.
    /// This is the Schmidt-rank exponent of the graph state across the cut.
    pub fn cut_rank(&self, a: VertexSet) -> Result<usize, GraphError> {
        let rest = a.complement(self.n);
        if a.is_empty() || rest.is_empty() || !a.is_subset(self.vertices()) {
            return Err(GraphError::TrivialCut);
        }
        Ok(gf2_rank(a.iter().map(|v| self.adj[v] & rest.0)))
    }

    /// Subgraph induced on `s`, relabelled to `0..|s|` in increasing order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.toggle_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

/// Rank of a set of GF(2) row vectors packed into `u64`s.
pub fn gf2_rank<I: IntoIterator<Item = u64>>(rows: I) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for mut r in rows {
        for &b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|x, y| y.cmp(x));
        }
    }
    basis.len()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        write!(f, "])")
    }
}

/// Wire form used in JSON reports: vertex count and 1-based edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(a, b)| [a + 1, b + 1]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(j.edges.len());
        for [a, b] in j.edges {
            if a == 0 || b == 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 0, n: j.n });
            }
            edges.push((a - 1, b - 1));
        }
        Graph::from_edges(j.n, &edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Graph::try_from(GraphJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_stars() -> Graph {
        Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn star_local_complement_at_centre_is_complete() {
        let s = Graph::star(4);
        assert_eq!(s.local_complement(0).unwrap(), Graph::complete(4));
    }

    #[test]
    fn local_complement_on_leaf_is_noop() {
        let p2 = Graph::path(2);
        assert_eq!(p2.local_complement(1).unwrap(), p2);
    }

    #[test]
    fn local_complement_rejects_bad_vertex() {
        assert!(matches!(
            Graph::path(3).local_complement(3),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn bipartition_examples() {
        let (a, b) = two_stars().bipartition().unwrap();
        assert_eq!(a, VertexSet::from_iter([0, 1, 4]));
        assert_eq!(b, VertexSet::from_iter([2, 3, 5]));
        assert!(Graph::complete(3).bipartition().is_none());
        let (a, b) = Graph::path(4).bipartition().unwrap();
        assert_eq!((a.labels(), b.labels()), (vec![1, 3], vec![2, 4]));
    }

    #[test]
    fn cut_rank_examples() {
        assert_eq!(Graph::path(3).cut_rank(VertexSet::singleton(1)).unwrap(), 1);
        let k6 = Graph::complete(6);
        for mask in 1..63u64 {
            assert_eq!(k6.cut_rank(VertexSet(mask)).unwrap(), 1);
        }
        let a = VertexSet::from_iter([0, 2, 4]);
        assert_eq!(two_stars().cut_rank(a).unwrap(), 2);
        assert!(two_stars().cut_rank(VertexSet::EMPTY).is_err());
        assert!(two_stars().cut_rank(VertexSet::full(6)).is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 2))
        ));
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components().len(), 2);
        assert!(!g.is_connected());
        assert!(two_stars().is_connected());
    }

    #[test]
    fn vertex_set_display_is_one_based() {
        assert_eq!(VertexSet::from_iter([0, 3]).to_string(), "{1,4}");
    }
}
