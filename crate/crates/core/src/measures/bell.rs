//! Converting a graph state into Bell pairs across a bipartition built from
//! a matching, using CZ gates inside each side and local complementations.
//!
//! CZ gates inside a side are free, so the search tracks only the crossing
//! edges. One search step is the macro "add the same-side edge (a, s),
//! complement at a, clear every same-side edge", whose net effect on the
//! crossing edges is to add the crossing neighbourhood of `a` to that of
//! `s`. The step is allowed only if no matched edge is removed.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::graph::{bit, maximum_matchings, Graph, Matching, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum BellMove {
    /// CZ between two vertices on the same side.
    Toggle { a: usize, b: usize },
    /// Local complementation at a vertex.
    LocalComplement { a: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BellExtraction {
    /// The side holding one endpoint of each matched edge.
    pub partition_a: VertexSet,
    pub moves: Vec<BellMove>,
    pub final_graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BellExtractionError {
    #[error("matching is not a matching of the graph")]
    NotAMatching,
    #[error("partition must hold exactly one endpoint of each matched edge")]
    BadPartition,
    #[error("no endpoint choice has cut rank {needed} (best {best})")]
    RankDeficient { needed: usize, best: usize },
    #[error("search exhausted its budget of {0} steps")]
    Budget(usize),
}

/// Default cap on the number of distinct crossing-edge states visited.
pub const BELL_STATE_CAP: usize = 1 << 20;

/// Tries the endpoint choices in order (bit `i` of the choice index set
/// means the larger endpoint of matched edge `i` goes to side A) and runs
/// the search on the first whose cut rank equals `|m|`.
pub fn bell_extraction(g: &Graph, m: &Matching) -> Result<BellExtraction, BellExtractionError> {
    if !m.is_matching_of(g) {
        return Err(BellExtractionError::NotAMatching);
    }
    let k = m.len();
    let mut best = 0;
    let mut last_err = None;
    for choice in 0u64..(1u64 << k) {
        let a: VertexSet = m
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if choice >> i & 1 == 1 { v } else { u })
            .collect();
        let rank = if k == 0 {
            0
        } else {
            g.cut_rank(a).unwrap_or(0)
        };
        best = best.max(rank);
        if rank != k {
            continue;
        }
        match bell_extraction_with(g, m, a, 4 * g.n()) {
            Ok(r) => return Ok(r),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or(BellExtractionError::RankDeficient { needed: k, best }))
}

/// Cap on the number of maximum matchings tried by [`extract_bell_pairs`].
pub const BELL_MATCHING_CAP: usize = 10_000;

/// Tries the maximum matchings of `g` in lexicographic order and returns the
/// first that can be extracted. When all fail, the error with the highest
/// cut rank is reported.
pub fn extract_bell_pairs(g: &Graph) -> Result<(Matching, BellExtraction), BellExtractionError> {
    let mut worst: Option<BellExtractionError> = None;
    for m in maximum_matchings(g, BELL_MATCHING_CAP) {
        match bell_extraction(g, &m) {
            Ok(r) => return Ok((m, r)),
            Err(e) => {
                let better = match (&worst, &e) {
                    (None, _) => true,
                    (
                        Some(BellExtractionError::RankDeficient { best: a, .. }),
                        BellExtractionError::RankDeficient { best: b, .. },
                    ) => b > a,
                    (Some(BellExtractionError::RankDeficient { .. }), _) => true,
                    _ => false,
                };
                if better {
                    worst = Some(e);
                }
            }
        }
    }
    Err(worst.unwrap_or(BellExtractionError::RankDeficient { needed: 0, best: 0 }))
}

/// Runs the search for a fixed side A. `depth_budget` bounds the number of
/// macro steps.
pub fn bell_extraction_with(
    g: &Graph,
    m: &Matching,
    a_side: VertexSet,
    depth_budget: usize,
) -> Result<BellExtraction, BellExtractionError> {
    if !m.is_matching_of(g) {
        return Err(BellExtractionError::NotAMatching);
    }
    let one_each = m
        .edges()
        .iter()
        .all(|&(u, v)| a_side.contains(u) != a_side.contains(v));
    if !one_each || !a_side.is_subset(m.matched_vertices()) {
        return Err(BellExtractionError::BadPartition);
    }
    let n = g.n();
    let side_of = |v: usize| a_side.contains(v);
    let matched: Vec<(usize, usize)> = m.edges().to_vec();

    // Crossing rows: for each vertex the crossing part of its neighbourhood.
    let crossing = |adj: &[u64]| -> Vec<u64> {
        (0..n)
            .map(|v| {
                let other = if side_of(v) {
                    !a_side.bits()
                } else {
                    a_side.bits()
                };
                adj[v] & other & VertexSet::full(n).bits()
            })
            .collect()
    };
    let start = crossing(g.adjacency());
    let target: Vec<u64> = {
        let mut t = vec![0u64; n];
        for &(u, v) in &matched {
            t[u] |= bit(v);
            t[v] |= bit(u);
        }
        t
    };

    // BFS over crossing states.
    let mut parent: HashMap<Vec<u64>, Option<(Vec<u64>, usize, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([(start.clone(), 0usize)]);
    let mut found = start == target;
    while let Some((state, depth)) = queue.pop_front() {
        if found || depth >= depth_budget {
            break;
        }
        for a in 0..n {
            for s in 0..n {
                if s == a || side_of(s) != side_of(a) {
                    continue;
                }
                // Matched edge (s, p) is lost if a is also adjacent to p.
                let lost = matched.iter().any(|&(u, v)| {
                    (u == s && state[a] & bit(v) != 0) || (v == s && state[a] & bit(u) != 0)
                });
                if lost || state[a] == 0 {
                    continue;
                }
                let mut next = state.clone();
                next[s] ^= state[a];
                for c in VertexSet(state[a]).iter() {
                    next[c] ^= bit(s);
                }
                if parent.contains_key(&next) {
                    continue;
                }
                if parent.len() >= BELL_STATE_CAP {
                    return Err(BellExtractionError::Budget(BELL_STATE_CAP));
                }
                parent.insert(next.clone(), Some((state.clone(), a, s)));
                if next == target {
                    found = true;
                    break;
                }
                queue.push_back((next, depth + 1));
            }
            if found {
                break;
            }
        }
    }
    if !found {
        return Err(BellExtractionError::Budget(depth_budget));
    }

    let mut steps = Vec::new();
    let mut cur = target.clone();
    while let Some(Some((prev, a, s))) = parent.get(&cur) {
        steps.push((*a, *s));
        cur = prev.clone();
    }
    steps.reverse();

    // Expand into primitive moves on the real graph.
    let mut h = g.clone();
    let mut moves = Vec::new();
    let strip = |h: &mut Graph, moves: &mut Vec<BellMove>| {
        for (u, v) in h.edges() {
            if side_of(u) == side_of(v) {
                h.toggle_edge(u, v);
                moves.push(BellMove::Toggle { a: u, b: v });
            }
        }
    };
    strip(&mut h, &mut moves);
    for (a, s) in steps {
        h.toggle_edge(a, s);
        moves.push(BellMove::Toggle {
            a: a.min(s),
            b: a.max(s),
        });
        h = h.local_complement(a).expect("vertex in range");
        moves.push(BellMove::LocalComplement { a });
        strip(&mut h, &mut moves);
    }
    let result = BellExtraction {
        partition_a: a_side,
        moves,
        final_graph: h,
    };
    assert!(
        verify_extraction(g, m, &result),
        "extraction failed its own postcondition"
    );
    Ok(result)
}

/// Replays the moves and checks every rule: toggles stay inside a side,
/// matched edges are present after every move, and the final graph is
/// exactly the matched edges.
pub fn verify_extraction(g: &Graph, m: &Matching, r: &BellExtraction) -> bool {
    let side = |v: usize| r.partition_a.contains(v);
    let has_matched = |h: &Graph| m.edges().iter().all(|&(u, v)| h.has_edge(u, v));
    let mut h = g.clone();
    if !has_matched(&h) {
        return false;
    }
    for mv in &r.moves {
        match *mv {
            BellMove::Toggle { a, b } => {
                if side(a) != side(b) || a == b {
                    return false;
                }
                h.toggle_edge(a, b);
            }
            BellMove::LocalComplement { a } => match h.local_complement(a) {
                Ok(next) => h = next,
                Err(_) => return false,
            },
        }
        if !has_matched(&h) {
            return false;
        }
    }
    let expected = Graph::from_edges(g.n(), m.edges()).expect("matching edges are valid");
    h == expected && h == r.final_graph
}
