use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::{max_independent_set, Graph, VertexSet};
use crate::stabilizer::{
    beta_assignment, generators_from_graph, lc_clifford_transport, restricted_subgroup,
    stabilized_product_basis, PauliOperator, ProductStabilizerState, StabilizerGroup,
};

/// Parity of the number of edges inside `beta` whose endpoints both carry a
/// 1 in `k` (a vertex bitmask). This is the sign exponent of the basis state
/// labelled `k` in the expansion of `|G⟩`.
pub fn sign_function(k: u64, g: &Graph, beta: VertexSet) -> u8 {
    let on = k & beta.bits();
    let twice: u32 = VertexSet(on)
        .iter()
        .map(|a| (g.neighbourhood(a).bits() & on).count_ones())
        .sum();
    ((twice / 2) % 2) as u8
}

/// `|G⟩ = D^{-1/2} Σ_k (-1)^{f(k)} |ψ_k⟩` over the product basis of the
/// maximum independent set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decomposition {
    #[serde(skip)]
    pub graph: Graph,
    pub alpha: VertexSet,
    pub terms: Vec<(i8, ProductStabilizerState)>,
}

impl Decomposition {
    /// `D_α`, the number of terms.
    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    /// Common amplitude `1/√D_α`.
    pub fn normalization(&self) -> f64 {
        1.0 / (self.terms.len() as f64).sqrt()
    }

    /// `log2 D_α`.
    pub fn log_rank(&self) -> usize {
        self.terms.len().trailing_zeros() as usize
    }
}

/// Uniform mixture of product states.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeparableStateDescription {
    pub components: Vec<ProductStabilizerState>,
    pub weight: f64,
}

impl SeparableStateDescription {
    pub fn new(components: Vec<ProductStabilizerState>) -> Self {
        let weight = 1.0 / components.len() as f64;
        SeparableStateDescription { components, weight }
    }

    pub fn n(&self) -> usize {
        self.components[0].n()
    }
}

fn check_alpha(g: &Graph, alpha: VertexSet) -> Result<()> {
    if !alpha.is_subset(g.vertices()) || !g.is_independent(alpha) {
        return Err(crate::error::StabilizerError::NotIndependent(alpha.to_string()).into());
    }
    Ok(())
}

/// Decomposition of `|g⟩` over the basis stabilized by an explicit
/// independent set.
pub fn decomposition_with(g: &Graph, alpha: VertexSet) -> Result<Decomposition> {
    check_alpha(g, alpha)?;
    let beta = alpha.complement(g.n());
    let basis = stabilized_product_basis(g, alpha)?;
    let terms = basis
        .into_iter()
        .enumerate()
        .map(|(i, psi)| {
            let k = beta_assignment(beta, i as u64);
            let sign = if sign_function(k, g, beta) == 0 {
                1
            } else {
                -1
            };
            (sign, psi)
        })
        .collect();
    Ok(Decomposition {
        graph: g.clone(),
        alpha,
        terms,
    })
}

/// Minimal product decomposition of `|g⟩` using its own maximum
/// independent set.
pub fn minimal_decomposition(g: &Graph) -> Result<Decomposition> {
    decomposition_with(g, max_independent_set(g))
}

/// Uniform mixture of the product basis stabilized by an explicit
/// independent set.
pub fn separable_state_with(g: &Graph, alpha: VertexSet) -> Result<SeparableStateDescription> {
    check_alpha(g, alpha)?;
    Ok(SeparableStateDescription::new(stabilized_product_basis(
        g, alpha,
    )?))
}

/// Closest separable state of `|g⟩` built from its own maximum independent
/// set. It is optimal when `g` attains the orbit bounds.
pub fn closest_separable_state(g: &Graph) -> Result<SeparableStateDescription> {
    separable_state_with(g, max_independent_set(g))
}

/// The same state written as `(1/2^N) Σ_{σ ∈ S_α} σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerSumForm {
    pub n: usize,
    pub subgroup: StabilizerGroup,
    pub elements: Vec<PauliOperator>,
}

pub fn css_stabilizer_form_with(g: &Graph, alpha: VertexSet) -> Result<StabilizerSumForm> {
    check_alpha(g, alpha)?;
    let subgroup = restricted_subgroup(&generators_from_graph(g), alpha);
    let elements = subgroup.elements()?;
    Ok(StabilizerSumForm {
        n: g.n(),
        subgroup,
        elements,
    })
}

pub fn css_stabilizer_form(g: &Graph) -> Result<StabilizerSumForm> {
    css_stabilizer_form_with(g, max_independent_set(g))
}

/// First state of the product basis; its squared overlap with `|g⟩` is
/// `2^{-|β|}`.
pub fn closest_product_state(g: &Graph) -> ProductStabilizerState {
    let alpha = max_independent_set(g);
    crate::stabilizer::product_basis_state(g, alpha, 0)
}

/// Pushes each component through the local Cliffords of the given
/// local-complementation sequence, starting from `g`.
pub fn transport_css(
    g: &Graph,
    lc_sequence: &[usize],
    css: &SeparableStateDescription,
) -> Result<SeparableStateDescription, GraphError> {
    let mut cur = g.clone();
    let mut components = css.components.clone();
    for &a in lc_sequence {
        for c in components.iter_mut() {
            *c = lc_clifford_transport(&cur, a, c)?;
        }
        cur = cur.local_complement(a)?;
    }
    Ok(SeparableStateDescription {
        components,
        weight: css.weight,
    })
}

/// Transports a single product state the same way.
pub fn transport_state(
    g: &Graph,
    lc_sequence: &[usize],
    psi: &ProductStabilizerState,
) -> Result<ProductStabilizerState, GraphError> {
    let mut cur = g.clone();
    let mut out = psi.clone();
    for &a in lc_sequence {
        out = lc_clifford_transport(&cur, a, &out)?;
        cur = cur.local_complement(a)?;
    }
    Ok(out)
}

/// Graph reached by applying the sequence to `g`.
pub fn apply_lc_sequence(g: &Graph, lc_sequence: &[usize]) -> Result<Graph, GraphError> {
    lc_sequence
        .iter()
        .try_fold(g.clone(), |h, &a| h.local_complement(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bit;

    fn two_stars() -> Graph {
        Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn two_stars_signs() {
        let beta: VertexSet = [4, 5].into_iter().collect();
        assert_eq!(sign_function(bit(4) | bit(5), &two_stars(), beta), 1);
        assert_eq!(sign_function(bit(5), &two_stars(), beta), 0);
        let d = minimal_decomposition(&two_stars()).unwrap();
        let got: Vec<(i8, String)> = d.terms.iter().map(|(s, p)| (*s, p.to_string())).collect();
        assert_eq!(
            got,
            [
                (1, "++++00".to_string()),
                (1, "--++01".to_string()),
                (1, "++--10".to_string()),
                (-1, "----11".to_string())
            ]
        );
        assert_eq!(d.log_rank(), 2);
        assert!((d.normalization() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn small_decompositions() {
        let d = minimal_decomposition(&Graph::path(3)).unwrap();
        assert!(d.terms.iter().all(|t| t.0 == 1));
        assert_eq!(d.terms[0].1.to_string(), "+0+");
        let d = minimal_decomposition(&Graph::path(2)).unwrap();
        let got: Vec<String> = d.terms.iter().map(|t| t.1.to_string()).collect();
        assert_eq!(got, ["+0", "-1"]);
    }

    #[test]
    fn certificates() {
        assert_eq!(closest_product_state(&two_stars()).to_string(), "++++00");
        assert_eq!(closest_product_state(&Graph::path(3)).to_string(), "+0+");
        let css = closest_separable_state(&Graph::path(2)).unwrap();
        assert_eq!(css.weight, 0.5);
        let f = css_stabilizer_form(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(f.elements.len(), 2);
    }

    #[test]
    fn empty_transport_is_identity() {
        let css = closest_separable_state(&two_stars()).unwrap();
        assert_eq!(transport_css(&two_stars(), &[], &css).unwrap(), css);
    }
}
