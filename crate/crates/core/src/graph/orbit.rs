//! Breadth-first enumeration of local-complementation orbits.
//!
//! Members are labelled graphs: two graphs are the same member only if their
//! adjacency rows agree exactly.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{independence_number, matching_number, Graph};

pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// One orbit member with a back-pointer to the member it was reached from.
#[derive(Clone, Debug)]
pub struct OrbitMember {
    pub graph: Graph,
    /// `(index of parent member, vertex complemented)`; `None` for the start.
    pub parent: Option<(usize, usize)>,
}

/// Enumerates the orbit of `g` in BFS order (vertices tried in ascending
/// order). Returns the members and whether the cap cut the search short.
pub fn lc_orbit_members(g: &Graph, cap: usize) -> (Vec<OrbitMember>, bool) {
    let cap = cap.max(1);
    let mut members = vec![OrbitMember {
        graph: g.clone(),
        parent: None,
    }];
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    seen.insert(g.adjacency().to_vec(), 0);
    let mut truncated = false;
    let mut head = 0;
    while head < members.len() {
        let cur = members[head].graph.clone();
        for a in 0..cur.n() {
            if cur.degree(a) < 2 {
                continue;
            }
            let mut next = cur.clone();
            next.local_complement_in_place(a);
            if seen.contains_key(next.adjacency()) {
                continue;
            }
            if members.len() == cap {
                truncated = true;
                break;
            }
            seen.insert(next.adjacency().to_vec(), members.len());
            members.push(OrbitMember {
                graph: next,
                parent: Some((head, a)),
            });
        }
        if truncated {
            break;
        }
        head += 1;
    }
    (members, truncated)
}

/// Vertices to complement, in order, to go from the start graph to member
/// `idx`.
pub(crate) fn path_to(members: &[OrbitMember], mut idx: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while let Some((p, a)) = members[idx].parent {
        path.push(a);
        idx = p;
    }
    path.reverse();
    path
}

fn labels<S: Serializer>(path: &[usize], s: S) -> Result<S::Ok, S::Error> {
    path.iter().map(|v| v + 1).collect::<Vec<_>>().serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub size: usize,
    /// Member minimising `(|β|, |M_max|, LC distance from the input,
    /// adjacency)`, so the input itself is chosen whenever it is optimal.
    pub representative: Graph,
    pub min_matching: usize,
    pub min_vertex_cover: usize,
    /// |β| and |M_max| of the representative itself.
    pub representative_vertex_cover: usize,
    pub representative_matching: usize,
    pub truncated: bool,
    /// LC vertices taking the input graph to the representative.
    #[serde(serialize_with = "labels")]
    pub path: Vec<usize>,
}

/// Orbit minima of the matching number and the vertex-cover number.
///
/// When `truncated` is set the minima are taken over the members found and
/// are only upper bounds on the true orbit minima.
pub fn lc_orbit(g: &Graph, cap: usize) -> OrbitSummary {
    let (members, truncated) = lc_orbit_members(g, cap);
    let metrics: Vec<(usize, usize)> = members
        .par_iter()
        .map(|m| {
            let beta = m.graph.n() - independence_number(&m.graph);
            (beta, matching_number(&m.graph))
        })
        .collect();
    let mut depth = vec![0usize; members.len()];
    for i in 1..members.len() {
        depth[i] = members[i].parent.map_or(0, |(p, _)| depth[p] + 1);
    }
    let best = (0..members.len())
        .min_by(|&i, &j| {
            (metrics[i], depth[i])
                .cmp(&(metrics[j], depth[j]))
                .then_with(|| {
                    members[i]
                        .graph
                        .adjacency()
                        .cmp(members[j].graph.adjacency())
                })
        })
        .expect("orbit contains the start graph");
    OrbitSummary {
        size: members.len(),
        representative: members[best].graph.clone(),
        min_matching: metrics.iter().map(|m| m.1).min().unwrap_or(0),
        min_vertex_cover: metrics.iter().map(|m| m.0).min().unwrap_or(0),
        representative_vertex_cover: metrics[best].0,
        representative_matching: metrics[best].1,
        truncated,
        path: path_to(&members, best),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_orbit_contains_complete_graph() {
        let s = lc_orbit(&Graph::star(4), DEFAULT_ORBIT_CAP);
        let (members, _) = lc_orbit_members(&Graph::star(4), DEFAULT_ORBIT_CAP);
        assert!(members.iter().any(|m| m.graph == Graph::complete(4)));
        assert_eq!((s.min_matching, s.min_vertex_cover), (1, 1));
        // Four stars (one per centre) plus K4.
        assert_eq!(s.size, 5);
        assert!(!s.truncated);
    }

    #[test]
    fn single_edge_orbit_is_trivial() {
        let s = lc_orbit(&Graph::path(2), 10);
        assert_eq!(s.size, 1);
        assert_eq!((s.min_matching, s.min_vertex_cover), (1, 1));
        assert!(s.path.is_empty());
    }

    #[test]
    fn path_reaches_representative() {
        for g in [Graph::complete(5), Graph::ring(5), Graph::path(5)] {
            let s = lc_orbit(&g, DEFAULT_ORBIT_CAP);
            let mut h = g.clone();
            for &a in &s.path {
                h = h.local_complement(a).unwrap();
            }
            assert_eq!(h, s.representative);
            assert_eq!(s.representative_vertex_cover, s.min_vertex_cover);
        }
    }

    #[test]
    fn cap_truncates() {
        let s = lc_orbit(&Graph::ring(6), 3);
        assert_eq!(s.size, 3);
        assert!(s.truncated);
    }

    #[test]
    fn orbit_is_closed() {
        let g = Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap();
        let (members, truncated) = lc_orbit_members(&g, DEFAULT_ORBIT_CAP);
        assert!(!truncated);
        let set: std::collections::HashSet<_> = members.iter().map(|m| m.graph.clone()).collect();
        for m in &members {
            for a in 0..6 {
                assert!(set.contains(&m.graph.local_complement(a).unwrap()));
            }
        }
        let s = lc_orbit(&g, DEFAULT_ORBIT_CAP);
        assert_eq!((s.min_matching, s.min_vertex_cover), (2, 2));
    }
}
