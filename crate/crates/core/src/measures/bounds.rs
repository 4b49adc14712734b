use serde::Serialize;

use crate::graph::{lc_orbit, max_matching, Graph, OrbitSummary};

/// Which of the matching/vertex-cover relations applies to a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    /// `|α| < N/2`: the vertex cover exceeds any matching.
    AlphaLtHalf,
    /// `|α| > N/2`.
    AlphaGtHalf,
    /// `|α| = N/2` and the maximum matching is perfect.
    AlphaEqHalfPerfect,
    /// `|α| = N/2` and the maximum matching is not perfect.
    AlphaEqHalfImperfect,
    /// Bipartite graph: matching and vertex cover have equal size.
    BipartiteKonig,
}

impl Classification {
    /// Whether the class predicts equal lower and upper bounds.
    pub fn predicts_equal(self) -> bool {
        !matches!(
            self,
            Classification::AlphaLtHalf | Classification::AlphaEqHalfImperfect
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::AlphaLtHalf => "ALPHA_LT_HALF",
            Classification::AlphaGtHalf => "ALPHA_GT_HALF",
            Classification::AlphaEqHalfPerfect => "ALPHA_EQ_HALF_PERFECT",
            Classification::AlphaEqHalfImperfect => "ALPHA_EQ_HALF_IMPERFECT",
            Classification::BipartiteKonig => "BIPARTITE_KONIG",
        }
    }
}

/// Classifies by `|α|` against `N/2`; `matching_is_perfect` only matters
/// when `2|α| = N`.
pub fn classify(alpha_size: usize, n: usize, matching_is_perfect: bool) -> Classification {
    match (2 * alpha_size).cmp(&n) {
        std::cmp::Ordering::Less => Classification::AlphaLtHalf,
        std::cmp::Ordering::Greater => Classification::AlphaGtHalf,
        std::cmp::Ordering::Equal if matching_is_perfect => Classification::AlphaEqHalfPerfect,
        std::cmp::Ordering::Equal => Classification::AlphaEqHalfImperfect,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// Orbit minimum of the maximum matching size.
    pub lower: usize,
    /// Orbit minimum of the minimum vertex cover size.
    pub upper: usize,
    /// `|α|` of the representative.
    pub alpha_size: usize,
    pub coincide: bool,
    pub classification: Classification,
    #[serde(skip)]
    pub orbit: OrbitSummary,
    /// Set when the orbit search hit its cap; the bounds are then not
    /// certified.
    pub truncated: bool,
}

impl BoundsReport {
    pub fn representative(&self) -> &Graph {
        &self.orbit.representative
    }
}

/// Lower and upper bounds from the LC orbit of `g`.
///
/// Bipartite inputs are classified as [`Classification::BipartiteKonig`];
/// everything else is classified on the orbit representative.
pub fn bounds(g: &Graph, orbit_cap: usize) -> BoundsReport {
    let orbit = lc_orbit(g, orbit_cap);
    let rep = &orbit.representative;
    let alpha_size = rep.n() - orbit.representative_vertex_cover;
    let classification = if g.is_bipartite() || rep.is_bipartite() {
        Classification::BipartiteKonig
    } else {
        classify(alpha_size, rep.n(), max_matching(rep).is_perfect(rep.n()))
    };
    BoundsReport {
        lower: orbit.min_matching,
        upper: orbit.min_vertex_cover,
        alpha_size,
        coincide: orbit.min_matching == orbit.min_vertex_cover,
        classification,
        truncated: orbit.truncated,
        orbit,
    }
}
