//! Dense linear-algebra and brute-force ground truth for small graphs.
//!
//! Nothing here is used by the analysis code paths; it exists to check them.

mod brute;
mod dense;
mod enumerate;

pub use brute::{
    brute_matching, brute_mis, brute_orbit, brute_vertex_cover, BRUTE_LIMIT, BRUTE_ORBIT_LIMIT,
};
pub use dense::{
    apply_lc_unitary, apply_single_qubit, best_product_overlap, conjugate_lc_unitary,
    decomposition_vector, fidelity_amplitude, graph_basis_state, hermitian_eigen, max_abs_diff,
    mixture_density, overlap2, pauli_dense, pauli_sum_density, product_vector, projector,
    qubits_of, reduced_entropy, relative_entropy_pure, sqrt_i_z, sqrt_minus_i_x, statevector,
    DenseDensity, DenseState, RelativeEntropy, DENSITY_LIMIT, EIGEN_FLOOR, STATE_LIMIT,
};
pub use enumerate::{
    connected_graphs_up_to, connected_labelled_graphs, random_connected_graph, seeded_random_graphs,
};
