//! Exhaustive reference solvers. They share no code with the graph module's
//! solvers: graphs are read once into boolean matrices.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count for subset enumeration.
pub const BRUTE_LIMIT: usize = 10;
/// Largest vertex count for brute-force orbit enumeration.
pub const BRUTE_ORBIT_LIMIT: usize = 8;

type Matrix = Vec<Vec<bool>>;

fn matrix(g: &Graph) -> Matrix {
    (0..g.n())
        .map(|a| (0..g.n()).map(|b| g.has_edge(a, b)).collect())
        .collect()
}

fn limit(n: usize, lim: usize) -> Result<()> {
    if n > lim {
        Err(Error::TooLarge {
            qubits: n,
            limit: lim,
        })
    } else {
        Ok(())
    }
}

/// Maximum independent set by enumeration; ties go to the lexicographically
/// smallest sorted vertex list.
pub fn brute_mis(g: &Graph) -> Result<Vec<usize>> {
    limit(g.n(), BRUTE_LIMIT)?;
    let m = matrix(g);
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let independent = verts.iter().all(|&a| verts.iter().all(|&b| !m[a][b]));
        if !independent {
            continue;
        }
        best = match best {
            Some(b) if b.len() > verts.len() || (b.len() == verts.len() && b <= verts) => Some(b),
            _ => Some(verts),
        };
    }
    Ok(best.unwrap_or_default())
}

/// Size of a minimum vertex cover by enumeration.
pub fn brute_vertex_cover(g: &Graph) -> Result<usize> {
    limit(g.n(), BRUTE_LIMIT)?;
    let m = matrix(g);
    let n = g.n();
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let covers = (0..n)
            .all(|a| (a + 1..n).all(|b| !m[a][b] || mask >> a & 1 == 1 || mask >> b & 1 == 1));
        if covers {
            best = best.min(mask.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Maximum matching by enumeration of edge subsets; ties go to the
/// lexicographically smallest sorted edge list.
pub fn brute_matching(g: &Graph) -> Result<Vec<(usize, usize)>> {
    limit(g.n(), BRUTE_LIMIT)?;
    let edges = g.edges();
    let mut best: Vec<(usize, usize)> = Vec::new();
    let mut cur = Vec::new();
    search_matching(&edges, 0, 0, &mut cur, &mut best);
    Ok(best)
}

fn search_matching(
    edges: &[(usize, usize)],
    start: usize,
    used: u64,
    cur: &mut Vec<(usize, usize)>,
    best: &mut Vec<(usize, usize)>,
) {
    if cur.len() > best.len() || (cur.len() == best.len() && *cur < *best) {
        *best = cur.clone();
    }
    for i in start..edges.len() {
        let (a, b) = edges[i];
        if used >> a & 1 == 1 || used >> b & 1 == 1 {
            continue;
        }
        cur.push((a, b));
        search_matching(edges, i + 1, used | 1 << a | 1 << b, cur, best);
        cur.pop();
    }
}

fn local_complement(m: &Matrix, a: usize) -> Matrix {
    let mut out = m.clone();
    let nb: Vec<usize> = (0..m.len()).filter(|&b| m[a][b]).collect();
    for &u in &nb {
        for &v in &nb {
            if u != v {
                out[u][v] = !m[u][v];
            }
        }
    }
    out
}

/// All labelled graphs LC-equivalent to `g`.
pub fn brute_orbit(g: &Graph) -> Result<Vec<Graph>> {
    limit(g.n(), BRUTE_ORBIT_LIMIT)?;
    let start = matrix(g);
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for a in 0..m.len() {
            let next = local_complement(&m, a);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|m| {
            let edges: Vec<(usize, usize)> = (0..m.len())
                .flat_map(|a| (a + 1..m.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| m[a][b])
                .collect();
            Graph::from_edges(m.len(), &edges).expect("valid")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_stars() -> Graph {
        Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn reference_values() {
        assert_eq!(brute_mis(&two_stars()).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(brute_matching(&two_stars()).unwrap().len(), 2);
        assert_eq!(brute_mis(&Graph::complete(5)).unwrap(), vec![0]);
        assert_eq!(brute_matching(&Graph::complete(5)).unwrap().len(), 2);
        assert_eq!(brute_vertex_cover(&two_stars()).unwrap(), 2);
    }

    #[test]
    fn p3_orbit() {
        let orbit = brute_orbit(&Graph::path(3)).unwrap();
        // The three paths (one per centre) and the triangle.
        assert_eq!(orbit.len(), 4);
        assert!(orbit.contains(&Graph::complete(3)));
    }
}
