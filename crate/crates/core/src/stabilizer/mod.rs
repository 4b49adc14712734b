//! Pauli algebra in symplectic form, graph-state stabilizers and the product
//! bases stabilized by independent-set subgroups.

mod group;
mod pauli;
mod states;

pub use group::{
    beta_assignment, entangles_check, generators_from_graph, lc_clifford_transport,
    product_basis_state, restricted_subgroup, stabilized_product_basis, StabilizerGroup,
    MAX_EXPANDED_GENERATORS,
};
pub use pauli::PauliOperator;
pub use states::{apply_generator, Phase, ProductStabilizerState, SingleQubitState};
