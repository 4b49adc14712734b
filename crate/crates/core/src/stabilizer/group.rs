use serde::Serialize;

use super::{PauliOperator, ProductStabilizerState, SingleQubitState};
use crate::error::{Error, GraphError, StabilizerError};
use crate::graph::{bit, gf2_rank, Graph, VertexSet};

/// Largest subgroup size for which [`StabilizerGroup::elements`] will expand
/// all members.
pub const MAX_EXPANDED_GENERATORS: usize = 24;

/// A set of independent, pairwise commuting Pauli generators.
///
/// `support[j]` is the index of generator `j` in the group it was taken from
/// (for a graph stabilizer: the vertex whose generator it is).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOperator>,
    support: Vec<usize>,
}

impl StabilizerGroup {
    /// Checks commutation and GF(2) independence.
    pub fn new(
        n: usize,
        generators: Vec<PauliOperator>,
        support: Vec<usize>,
    ) -> Result<Self, StabilizerError> {
        assert_eq!(generators.len(), support.len());
        for p in &generators {
            if p.n() != n {
                return Err(StabilizerError::LengthMismatch(n, p.n()));
            }
        }
        for (i, p) in generators.iter().enumerate() {
            if generators[i + 1..].iter().any(|q| !p.commutes_with(q)) {
                return Err(StabilizerError::NotIndependent(format!(
                    "generator {} does not commute",
                    i + 1
                )));
            }
        }
        if n <= 32 {
            let rows = generators.iter().map(|p| p.x() | (p.z() << n));
            if gf2_rank(rows) != generators.len() {
                return Err(StabilizerError::NotIndependent(
                    "generators are dependent".into(),
                ));
            }
        }
        Ok(StabilizerGroup {
            n,
            generators,
            support,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Indices (in the parent group) of the retained generators.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of group elements, `2^len`.
    pub fn order(&self) -> u128 {
        1u128 << self.generators.len()
    }

    /// All `2^len` elements; element `m` is the product of the generators
    /// whose bits are set in `m`, taken in generator order.
    pub fn elements(&self) -> Result<Vec<PauliOperator>, Error> {
        let k = self.generators.len();
        if k > MAX_EXPANDED_GENERATORS {
            return Err(Error::TooLarge {
                qubits: k,
                limit: MAX_EXPANDED_GENERATORS,
            });
        }
        let mut out = Vec::with_capacity(1 << k);
        out.push(PauliOperator::identity(self.n));
        for g in &self.generators {
            let len = out.len();
            for i in 0..len {
                out.push(out[i].multiply(g)?);
            }
        }
        Ok(out)
    }
}

/// `g_a = X_a ∏_{b ∈ N_a} Z_b` for every vertex `a`.
pub fn generators_from_graph(g: &Graph) -> StabilizerGroup {
    let generators = (0..g.n())
        .map(|a| PauliOperator::new(g.n(), bit(a), g.neighbourhood(a).bits(), 0).expect("in range"))
        .collect();
    StabilizerGroup {
        n: g.n(),
        generators,
        support: (0..g.n()).collect(),
    }
}

/// Keeps the generators whose parent index lies in `keep`.
pub fn restricted_subgroup(s: &StabilizerGroup, keep: VertexSet) -> StabilizerGroup {
    let (generators, support) = s
        .generators
        .iter()
        .zip(&s.support)
        .filter(|(_, &i)| keep.contains(i))
        .map(|(p, &i)| (*p, i))
        .unzip();
    StabilizerGroup {
        n: s.n,
        generators,
        support,
    }
}

/// True when some retained generator has Z support on the X qubit of
/// another, i.e. the retained vertices are not independent and the
/// subgroup stabilizes entangled states.
pub fn entangles_check(s: &StabilizerGroup) -> bool {
    s.generators.iter().any(|gb| {
        s.generators
            .iter()
            .any(|ga| ga != gb && ga.x() != 0 && gb.z() & ga.x() != 0)
    })
}

/// β-bits of the `index`-th basis state: the j-th smallest vertex of β reads
/// bit `|β| - 1 - j` of `index`, so the first β vertex is most significant.
pub fn beta_assignment(beta: VertexSet, index: u64) -> u64 {
    let m = beta.len();
    let mut k = 0u64;
    for (j, b) in beta.iter().enumerate() {
        if (index >> (m - 1 - j)) & 1 == 1 {
            k |= bit(b);
        }
    }
    k
}

/// The product state labelled by the β-assignment `k` (a vertex bitmask).
pub fn product_basis_state(g: &Graph, alpha: VertexSet, k: u64) -> ProductStabilizerState {
    let qubits = (0..g.n())
        .map(|v| {
            if alpha.contains(v) {
                if (g.neighbourhood(v).bits() & k).count_ones() % 2 == 0 {
                    SingleQubitState::XPlus
                } else {
                    SingleQubitState::XMinus
                }
            } else if k & bit(v) != 0 {
                SingleQubitState::ZMinus
            } else {
                SingleQubitState::ZPlus
            }
        })
        .collect();
    ProductStabilizerState::new(qubits)
}

/// The `2^|β|` product states stabilized by the generators of the
/// independent set `alpha`, ordered by β bit-string.
pub fn stabilized_product_basis(
    g: &Graph,
    alpha: VertexSet,
) -> Result<Vec<ProductStabilizerState>, Error> {
    if !g.is_independent(alpha) || !alpha.is_subset(g.vertices()) {
        return Err(StabilizerError::NotIndependent(alpha.to_string()).into());
    }
    let beta = alpha.complement(g.n());
    if beta.len() > MAX_EXPANDED_GENERATORS {
        return Err(Error::TooLarge {
            qubits: beta.len(),
            limit: MAX_EXPANDED_GENERATORS,
        });
    }
    Ok((0..1u64 << beta.len())
        .map(|i| product_basis_state(g, alpha, beta_assignment(beta, i)))
        .collect())
}

/// Image of `psi` under the local Clifford taking `|g⟩` to `|τ_a(g)⟩`:
/// `exp(-iπ/4 X)` on `a` and `exp(iπ/4 Z)` on each neighbour of `a`, up to
/// global phase.
pub fn lc_clifford_transport(
    g: &Graph,
    a: usize,
    psi: &ProductStabilizerState,
) -> Result<ProductStabilizerState, GraphError> {
    if a >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: a + 1,
            n: g.n(),
        });
    }
    let na = g.neighbourhood(a);
    let qubits = psi
        .qubits()
        .iter()
        .enumerate()
        .map(|(q, &s)| {
            if q == a {
                s.sqrt_minus_i_x()
            } else if na.contains(q) {
                s.sqrt_i_z()
            } else {
                s
            }
        })
        .collect();
    Ok(ProductStabilizerState::new(qubits))
}
