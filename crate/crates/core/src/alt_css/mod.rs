//! Two constructions of the closest separable state that do not go through
//! stabilizer generators: projected separable edge pairs, and dephasing of
//! the vertex-cover qubits.

mod noise;
mod peps;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measures::SeparableStateDescription;
use crate::stabilizer::{ProductStabilizerState, SingleQubitState};

pub use noise::{noise_css, noise_dense, noise_dense_quadrature, PhaseNoiseSpec};
pub use peps::{
    assign_edge_states, peps_css, peps_dense_literal, Colour, EdgeAssignment, EdgeState,
    VirtualLayout,
};

/// Largest qubit count for which dense matrices are assembled.
pub const DENSE_LIMIT: usize = 10;

/// A normalised single-qubit vector.
pub type Qubit = [Complex64; 2];

/// A weighted mixture of product states, weights summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductMixture {
    pub components: Vec<(f64, Vec<Qubit>)>,
}

impl ProductMixture {
    /// Normalises weights and merges components that are the same product
    /// state up to phase.
    pub(crate) fn from_terms(terms: Vec<(f64, Vec<Qubit>)>) -> Self {
        let total: f64 = terms.iter().map(|t| t.0).sum();
        let mut components: Vec<(f64, Vec<Qubit>)> = Vec::new();
        for (w, q) in terms {
            if w <= 0.0 {
                continue;
            }
            match components.iter_mut().find(|(_, c)| same_product(c, &q)) {
                Some(c) => c.0 += w / total,
                None => components.push((w / total, q)),
            }
        }
        ProductMixture { components }
    }

    /// The mixture as a uniform mixture of stabilizer product states, if it
    /// is one.
    pub fn as_stabilizer_mixture(&self) -> Option<SeparableStateDescription> {
        let w0 = self.components.first()?.0;
        if self.components.iter().any(|c| (c.0 - w0).abs() > 1e-12) {
            return None;
        }
        let mut states = Vec::with_capacity(self.components.len());
        for (_, q) in &self.components {
            let labels: Option<Vec<_>> = q.iter().map(|v| label_of(*v)).collect();
            states.push(ProductStabilizerState::new(labels?));
        }
        states.sort();
        Some(SeparableStateDescription::new(states))
    }

    pub fn dense(&self) -> Result<DMatrix<Complex64>> {
        let n = self.components.first().map_or(0, |c| c.1.len());
        if n > DENSE_LIMIT {
            return Err(Error::TooLarge {
                qubits: n,
                limit: DENSE_LIMIT,
            });
        }
        let dim = 1usize << n;
        let mut rho = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
        for (w, q) in &self.components {
            let v: Vec<Complex64> = (0..dim)
                .map(|z| q.iter().enumerate().map(|(i, s)| s[(z >> i) & 1]).product())
                .collect();
            for r in 0..dim {
                for c in 0..dim {
                    rho[(r, c)] += v[r] * v[c].conj() * *w;
                }
            }
        }
        Ok(rho)
    }
}

pub(crate) fn normalise(v: Qubit) -> Option<Qubit> {
    let nrm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    if nrm < 1e-12 {
        None
    } else {
        Some([v[0] / nrm, v[1] / nrm])
    }
}

fn same_product(a: &[Qubit], b: &[Qubit]) -> bool {
    a.iter()
        .zip(b)
        .all(|(x, y)| ((x[0].conj() * y[0] + x[1].conj() * y[1]).norm() - 1.0).abs() < 1e-9)
}

/// The stabilizer label of a single-qubit vector, if it is one up to phase.
pub fn label_of(v: Qubit) -> Option<SingleQubitState> {
    SingleQubitState::ALL.into_iter().find(|s| {
        let k = s.ket();
        ((k[0].conj() * v[0] + k[1].conj() * v[1]).norm() - 1.0).abs() < 1e-9
    })
}

/// Uniform mixture of stabilizer product states as a dense matrix.
pub fn stabilizer_mixture_dense(css: &SeparableStateDescription) -> Result<DMatrix<Complex64>> {
    ProductMixture {
        components: css
            .components
            .iter()
            .map(|c| (css.weight, c.qubits().iter().map(|s| s.ket()).collect()))
            .collect(),
    }
    .dense()
}
