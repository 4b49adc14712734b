//! Open-boundary lattice patches and the gap `|β| − |M_max|` on them.
//!
//! Sizes:
//!
//! - triangular `L`: an `L × L` grid with right, down and down-right edges;
//! - kagome `s`: `s × s` cells, each an up triangle plus the down triangle
//!   hanging off its right corner (one cell is a bowtie);
//! - hexagonal `s`: an `s × s` brick-wall patch of hexagons;
//! - hexa-triangular `k`: the 3.4.6.4 tiling with `k(k+1)/2` hexagons in a
//!   triangle, joined by squares and triangles, `N = 3k(k+1)`.
//!
//! Vertices are numbered row-major by position (bottom row first).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{matching_number, Graph, IndependentSetSearch, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeKind {
    Triangular,
    Kagome,
    HexaTriangular,
    Hexagonal,
}

impl LatticeKind {
    pub const ALL: [LatticeKind; 4] = [
        LatticeKind::Triangular,
        LatticeKind::Kagome,
        LatticeKind::HexaTriangular,
        LatticeKind::Hexagonal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LatticeKind::Triangular => "triangular",
            LatticeKind::Kagome => "kagome",
            LatticeKind::HexaTriangular => "hexa-triangular",
            LatticeKind::Hexagonal => "hexagonal",
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticeKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown lattice kind {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSpec {
    pub kind: LatticeKind,
    pub size: usize,
}

impl LatticeSpec {
    pub fn new(kind: LatticeKind, size: usize) -> Self {
        LatticeSpec { kind, size }
    }
}

/// Builds a graph from integer points and a neighbour rule, numbering the
/// points by `(y, x)`.
fn from_points(
    points: impl IntoIterator<Item = (i64, i64)>,
    adjacent: impl Fn((i64, i64), (i64, i64)) -> bool,
) -> Result<Graph> {
    let mut ids: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (x, y) in points {
        ids.insert((y, x), 0);
    }
    let pts: Vec<(i64, i64)> = ids.keys().map(|&(y, x)| (x, y)).collect();
    if pts.len() > MAX_VERTICES {
        return Err(Error::TooLarge {
            qubits: pts.len(),
            limit: MAX_VERTICES,
        });
    }
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if adjacent(pts[i], pts[j]) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(pts.len(), &edges)?)
}

fn triangular(l: usize) -> Result<Graph> {
    let l = l as i64;
    let pts = (0..l).flat_map(|y| (0..l).map(move |x| (x, y)));
    // Neighbours (1,0), (0,1) and the diagonal (1,1).
    from_points(pts, |a, b| {
        let d = (b.0 - a.0, b.1 - a.1);
        matches!(d, (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, 1) | (-1, -1))
    })
}

/// Kagome sites in half-lattice coordinates: a point is a site unless both
/// coordinates are odd, and sites at triangular-lattice distance one are
/// adjacent.
fn kagome(s: usize) -> Result<Graph> {
    let s = s as i64;
    let mut pts = Vec::new();
    for j in 0..s {
        for i in 0..s {
            let (x, y) = (2 * i, 2 * j);
            pts.extend([(x, y), (x + 1, y), (x, y + 1), (x + 2, y - 1), (x + 2, y)]);
        }
    }
    from_points(pts, |a, b| {
        let d = (b.0 - a.0, b.1 - a.1);
        matches!(d, (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, -1) | (-1, 1))
    })
}

/// Brick wall: rows `0..=s` of `2s + 2` points, horizontal edges along rows
/// and vertical edges where `x + y` is even, then dangling points removed.
fn hexagonal(s: usize) -> Result<Graph> {
    let s = s as i64;
    let width = 2 * s + 2;
    let adjacent = |a: (i64, i64), b: (i64, i64)| {
        let d = (b.0 - a.0, b.1 - a.1);
        let lo = if a.1 < b.1 { a } else { b };
        matches!(d, (1, 0) | (-1, 0)) || (matches!(d, (0, 1) | (0, -1)) && (lo.0 + lo.1) % 2 == 0)
    };
    let mut pts: Vec<(i64, i64)> = (0..=s)
        .flat_map(|y| (0..width).map(move |x| (x, y)))
        .collect();
    loop {
        let keep: Vec<(i64, i64)> = pts
            .iter()
            .copied()
            .filter(|&p| pts.iter().filter(|&&q| adjacent(p, q)).count() >= 2)
            .collect();
        if keep.len() == pts.len() {
            break;
        }
        pts = keep;
    }
    from_points(pts, adjacent)
}

/// Hexagon `m` of a cell has its corner at angle `30° + 60° m`. Neighbouring
/// hexagons in direction `60° t` are joined by the two parallel edges
/// `(t, t + 2)` and `(t − 1, t + 3)`, which also close the triangles.
fn hexa_triangular(k: usize) -> Result<Graph> {
    let k = k as i64;
    let cells: Vec<(i64, i64)> = (0..k)
        .flat_map(|j| (0..k - j).map(move |i| (i, j)))
        .collect();
    let n = cells.len() * 6;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            qubits: n,
            limit: MAX_VERTICES,
        });
    }
    let dirs = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    // Number cells by rows; within a cell, corners in angular order.
    let index = |c: (i64, i64)| cells.iter().position(|&d| d == c);
    let mut edges = Vec::new();
    for (ci, &c) in cells.iter().enumerate() {
        for m in 0..6 {
            edges.push((6 * ci + m, 6 * ci + (m + 1) % 6));
        }
        for (t, d) in dirs.iter().enumerate().take(3) {
            if let Some(qi) = index((c.0 + d.0, c.1 + d.1)) {
                edges.push((6 * ci + t, 6 * qi + (t + 2) % 6));
                edges.push((6 * ci + (t + 5) % 6, 6 * qi + (t + 3) % 6));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn generate_lattice(spec: LatticeSpec) -> Result<Graph> {
    if spec.size == 0 {
        return Err(Error::Invalid(
            "lattice size must be at least one cell".into(),
        ));
    }
    match spec.kind {
        LatticeKind::Triangular if spec.size < 2 => {
            Err(Error::Invalid("triangular lattice needs L >= 2".into()))
        }
        LatticeKind::Triangular => triangular(spec.size),
        LatticeKind::Kagome => kagome(spec.size),
        LatticeKind::Hexagonal => hexagonal(spec.size),
        LatticeKind::HexaTriangular => hexa_triangular(spec.size),
    }
}

/// The closed-form gap for `N` vertices. In the triangular sum each term
/// `√N − 3j` is clamped at zero.
pub fn gap_formula(kind: LatticeKind, n: usize) -> Result<f64> {
    let nf = n as f64;
    let half_floor = (n / 2) as f64;
    Ok(match kind {
        LatticeKind::Hexagonal => 0.0,
        LatticeKind::Triangular => {
            let l = (nf.sqrt().round()) as usize;
            if l * l != n || l <= 3 {
                return Err(Error::Invalid(format!(
                    "triangular gap formula needs N = L^2 with L > 3, got N = {n}"
                )));
            }
            let root = l as f64;
            let sum: f64 = (1..=(n - 1) / 3)
                .map(|j| (root - 3.0 * j as f64).max(0.0))
                .sum();
            n.div_ceil(2) as f64 - root - 2.0 * sum
        }
        LatticeKind::HexaTriangular => {
            (12.0 * nf - 3.0 * (9.0 + 12.0 * nf).sqrt() + 9.0) / 18.0 - half_floor
        }
        LatticeKind::Kagome => (6.0 * nf - (13.0 + 3.0 * nf).sqrt() - 11.0) / 9.0 - half_floor,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GapRow {
    pub kind: LatticeKind,
    pub size: usize,
    pub n: usize,
    pub matching: usize,
    pub vertex_cover: usize,
    pub gap_exact: i64,
    pub gap_formula: Option<f64>,
}

/// `|β(g)| − |M_max(g)|` on the graph itself, without orbit minimisation.
pub fn gap_exact(g: &Graph, node_budget: u64) -> Result<(usize, usize, i64)> {
    let mut search = IndependentSetSearch::new(g).with_budget(node_budget);
    let alpha = search.maximum(g.n()).map_err(|e| Error::Budget(e.0))?;
    let beta = g.n() - alpha.len();
    let m = matching_number(g);
    Ok((m, beta, beta as i64 - m as i64))
}

pub fn gap_row(spec: LatticeSpec, node_budget: u64) -> Result<GapRow> {
    let g = generate_lattice(spec)?;
    let (matching, vertex_cover, gap) = gap_exact(&g, node_budget)?;
    Ok(GapRow {
        kind: spec.kind,
        size: spec.size,
        n: g.n(),
        matching,
        vertex_cover,
        gap_exact: gap,
        gap_formula: gap_formula(spec.kind, g.n()).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort();
        d
    }

    #[test]
    fn small_patches() {
        let t = generate_lattice(LatticeSpec::new(LatticeKind::Triangular, 2)).unwrap();
        assert_eq!((t.n(), t.edge_count()), (4, 5));
        assert_eq!(degrees(&t), [2, 2, 3, 3]);
        let h = generate_lattice(LatticeSpec::new(LatticeKind::Hexagonal, 1)).unwrap();
        assert_eq!((h.n(), h.edge_count()), (6, 6));
        assert!(h.is_connected() && degrees(&h) == [2; 6]);
        let k = generate_lattice(LatticeSpec::new(LatticeKind::Kagome, 1)).unwrap();
        assert_eq!((k.n(), k.edge_count()), (5, 6));
        assert_eq!(degrees(&k), [2, 2, 2, 2, 4]);
        let ht = generate_lattice(LatticeSpec::new(LatticeKind::HexaTriangular, 1)).unwrap();
        assert_eq!(ht, Graph::ring(6));
    }

    #[test]
    fn sizes_and_degrees() {
        for k in 1..=3 {
            let g = generate_lattice(LatticeSpec::new(LatticeKind::HexaTriangular, k)).unwrap();
            assert_eq!(g.n(), 3 * k * (k + 1));
            assert!(g.is_connected());
            assert!((0..g.n()).all(|v| (2..=4).contains(&g.degree(v))));
        }
        let ht = generate_lattice(LatticeSpec::new(LatticeKind::HexaTriangular, 2)).unwrap();
        // Three hexagons, three squares, one triangle.
        assert_eq!(ht.edge_count(), 18 + 6);
        for s in 1..=3 {
            let g = generate_lattice(LatticeSpec::new(LatticeKind::Hexagonal, s)).unwrap();
            assert!(g.is_bipartite() && g.is_connected());
            assert!((0..g.n()).all(|v| g.degree(v) <= 3));
            let k = generate_lattice(LatticeSpec::new(LatticeKind::Kagome, s)).unwrap();
            assert!(k.is_connected());
            assert!((0..k.n()).all(|v| k.degree(v) <= 4));
        }
    }

    #[test]
    fn formulas() {
        assert_eq!(gap_formula(LatticeKind::Hexagonal, 30).unwrap(), 0.0);
        assert!(gap_formula(LatticeKind::Kagome, 12).unwrap().abs() < 1e-12);
        assert!(gap_formula(LatticeKind::HexaTriangular, 6).unwrap().abs() < 1e-12);
        assert_eq!(gap_formula(LatticeKind::Triangular, 16).unwrap(), 2.0);
        assert!(gap_formula(LatticeKind::Triangular, 9).is_err());
        assert!(gap_formula(LatticeKind::Triangular, 17).is_err());
    }

    #[test]
    fn hexagonal_gap_is_zero() {
        for s in 1..=3 {
            let row = gap_row(LatticeSpec::new(LatticeKind::Hexagonal, s), 1 << 24).unwrap();
            assert_eq!(row.gap_exact, 0);
        }
    }

    #[test]
    fn parse_kinds() {
        for k in LatticeKind::ALL {
            assert_eq!(k.as_str().parse::<LatticeKind>().unwrap(), k);
        }
        assert!("square".parse::<LatticeKind>().is_err());
    }
}
