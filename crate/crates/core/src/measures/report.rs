use serde::{Serialize, Serializer};

use super::bounds::{bounds, BoundsReport};
use super::decomposition::{
    minimal_decomposition, separable_state_with, transport_css, transport_state, Decomposition,
    SeparableStateDescription,
};
use crate::error::Result;
use crate::graph::{max_independent_set, Graph};
use crate::stabilizer::{product_basis_state, ProductStabilizerState};

/// A measure value in bits: exact when the bounds coincide, otherwise the
/// interval they define.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureValue {
    Exact(usize),
    Interval(usize, usize),
}

impl MeasureValue {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            MeasureValue::Exact(v) => Some(v),
            MeasureValue::Interval(..) => None,
        }
    }
}

impl Serialize for MeasureValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            MeasureValue::Exact(v) => s.serialize_u64(v as u64),
            MeasureValue::Interval(lo, hi) => [lo, hi].serialize(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Measures {
    pub schmidt: MeasureValue,
    pub ree: MeasureValue,
    pub geometric: MeasureValue,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntanglementReport {
    pub graph: Graph,
    pub bounds: BoundsReport,
    pub measures: Measures,
    /// Decomposition of the orbit representative's state.
    pub decomposition: Decomposition,
    /// Closest separable state for the input labelling (transported back
    /// from the representative). When the bounds differ it only certifies
    /// the upper bound.
    pub css: SeparableStateDescription,
    /// Closest product state for the input labelling.
    pub cps: ProductStabilizerState,
    pub maximally_entangled: bool,
    /// LC vertices from the input to the representative.
    pub lc_path: Vec<usize>,
}

/// Full evaluation: orbit bounds, decomposition of the representative, and
/// separable/product certificates for the input graph.
pub fn evaluate(g: &Graph, orbit_cap: usize) -> Result<EntanglementReport> {
    let b = bounds(g, orbit_cap);
    let rep = b.representative().clone();
    let path = b.orbit.path.clone();
    let back: Vec<usize> = path.iter().rev().copied().collect();

    let decomposition = minimal_decomposition(&rep)?;
    let alpha = max_independent_set(&rep);
    let css = transport_css(&rep, &back, &separable_state_with(&rep, alpha)?)?;
    let cps = transport_state(&rep, &back, &product_basis_state(&rep, alpha, 0))?;

    let value = if b.coincide && !b.truncated {
        MeasureValue::Exact(b.upper)
    } else {
        MeasureValue::Interval(b.lower, b.upper)
    };
    let maximally_entangled = value.exact() == Some(g.n() / 2);
    Ok(EntanglementReport {
        graph: g.clone(),
        measures: Measures {
            schmidt: value,
            ree: value,
            geometric: value,
        },
        bounds: b,
        decomposition,
        css,
        cps,
        maximally_entangled,
        lc_path: path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_ORBIT_CAP;

    #[test]
    fn two_stars_report() {
        let g = Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap();
        let r = evaluate(&g, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r.measures.schmidt, MeasureValue::Exact(2));
        assert_eq!(r.cps.to_string(), "++++00");
        assert!(r.lc_path.is_empty());
        assert!(!r.maximally_entangled);
    }

    #[test]
    fn ring6_is_maximal() {
        let r = evaluate(&Graph::ring(6), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r.measures.ree, MeasureValue::Exact(3));
        assert!(r.maximally_entangled);
    }

    #[test]
    fn triangle_via_orbit() {
        let r = evaluate(&Graph::complete(3), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r.measures.geometric, MeasureValue::Exact(1));
        assert_eq!(r.lc_path.len(), 1);
    }
}
