//! Random phases on the vertex-cover qubits.
//!
//! `|Φ(φ)⟩ = 2^{-N/2} ⊗_j (|0⟩_j + e^{iφ_j m(j)} |1⟩_j Z_{N'_j})` with
//! `N'_j` the neighbours of `j` above `j` and `m` the indicator of the
//! cover. Averaging over the phases is Z-dephasing of every cover qubit,
//! which a two-point average over `{0, π}` per phase already reproduces
//! exactly. The dephased pieces, one per cover assignment `k`, are the
//! product components.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::{normalise, ProductMixture, Qubit, DENSE_LIMIT};
use crate::error::{Error, Result, StabilizerError};
use crate::graph::{bit, Graph, VertexSet};

/// Largest cover for which components are listed.
pub const NOISE_COMPONENT_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseNoiseSpec {
    pub alpha: VertexSet,
    pub beta: VertexSet,
}

impl PhaseNoiseSpec {
    /// `beta` must be a vertex cover, so that its complement is
    /// independent.
    pub fn new(g: &Graph, beta: VertexSet) -> Result<Self> {
        let alpha = beta.complement(g.n());
        if !beta.is_subset(g.vertices()) || !g.is_independent(alpha) {
            return Err(StabilizerError::NotIndependent(alpha.to_string()).into());
        }
        Ok(PhaseNoiseSpec { alpha, beta })
    }

    /// Amplitude of basis state `z` (vertex bitmask) in `|Φ(φ)⟩`; `phases`
    /// is indexed by vertex and ignored off the cover.
    pub fn amplitude(&self, g: &Graph, z: u64, phases: &[f64]) -> Complex64 {
        let n = g.n();
        let mut amp = Complex64::new((0.5f64).powf(n as f64 / 2.0), 0.0);
        for j in VertexSet(z).iter() {
            if self.beta.contains(j) {
                amp *= Complex64::from_polar(1.0, phases[j]);
            }
            let up = g.neighbourhood(j).bits() & !((bit(j) << 1) - 1);
            if (up & z).count_ones() % 2 == 1 {
                amp = -amp;
            }
        }
        amp
    }

    fn statevector(&self, g: &Graph, phases: &[f64]) -> Vec<Complex64> {
        (0..1u64 << g.n())
            .map(|z| self.amplitude(g, z, phases))
            .collect()
    }
}

fn check_dense(g: &Graph) -> Result<()> {
    if g.n() > DENSE_LIMIT {
        return Err(Error::TooLarge {
            qubits: g.n(),
            limit: DENSE_LIMIT,
        });
    }
    Ok(())
}

fn add_projector(rho: &mut DMatrix<Complex64>, v: &[Complex64], w: f64) {
    for r in 0..v.len() {
        for c in 0..v.len() {
            rho[(r, c)] += v[r] * v[c].conj() * w;
        }
    }
}

/// The phase average over `{0, π}^{|β|}`, built from `|Φ(φ)⟩` directly.
pub fn noise_dense(g: &Graph, beta: VertexSet) -> Result<DMatrix<Complex64>> {
    check_dense(g)?;
    let spec = PhaseNoiseSpec::new(g, beta)?;
    let dim = 1usize << g.n();
    let cover: Vec<usize> = spec.beta.iter().collect();
    let mut rho = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let w = 1.0 / (1u64 << cover.len()) as f64;
    let mut phases = vec![0.0; g.n()];
    for mask in 0u64..(1 << cover.len()) {
        for (i, &j) in cover.iter().enumerate() {
            phases[j] = if mask >> i & 1 == 1 {
                std::f64::consts::PI
            } else {
                0.0
            };
        }
        add_projector(&mut rho, &spec.statevector(g, &phases), w);
    }
    Ok(rho)
}

/// The same average by a uniform `points`-point rule on each phase. The
/// phases are independent, so the rule is applied one cover qubit at a
/// time.
pub fn noise_dense_quadrature(
    g: &Graph,
    beta: VertexSet,
    points: usize,
) -> Result<DMatrix<Complex64>> {
    check_dense(g)?;
    let spec = PhaseNoiseSpec::new(g, beta)?;
    let dim = 1usize << g.n();
    let mut rho = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    add_projector(&mut rho, &spec.statevector(g, &vec![0.0; g.n()]), 1.0);
    for j in spec.beta.iter() {
        let mut next = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
        for p in 0..points {
            let phi = 2.0 * std::f64::consts::PI * (p as f64 + 0.5) / points as f64;
            let ph = Complex64::from_polar(1.0, phi);
            for r in 0..dim {
                let fr = if r >> j & 1 == 1 {
                    ph
                } else {
                    Complex64::new(1.0, 0.0)
                };
                for c in 0..dim {
                    let fc = if c >> j & 1 == 1 {
                        ph.conj()
                    } else {
                        Complex64::new(1.0, 0.0)
                    };
                    next[(r, c)] += rho[(r, c)] * fr * fc;
                }
            }
        }
        rho = next / Complex64::new(points as f64, 0.0);
    }
    Ok(rho)
}

/// The dephased pieces of `|Φ⟩⟨Φ|` as a product mixture.
pub fn noise_css(g: &Graph, beta: VertexSet) -> Result<ProductMixture> {
    let spec = PhaseNoiseSpec::new(g, beta)?;
    let cover: Vec<usize> = spec.beta.iter().collect();
    if cover.len() > NOISE_COMPONENT_LIMIT {
        return Err(Error::TooLarge {
            qubits: cover.len(),
            limit: NOISE_COMPONENT_LIMIT,
        });
    }
    let zero = vec![0.0; g.n()];
    let one = Complex64::new(1.0, 0.0);
    let nil = Complex64::new(0.0, 0.0);
    let mut terms = Vec::with_capacity(1 << cover.len());
    for mask in 0u64..(1 << cover.len()) {
        let k: u64 = cover
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &j)| bit(j))
            .sum();
        let base = spec.amplitude(g, k, &zero);
        let qubits: Vec<Qubit> = (0..g.n())
            .map(|j| {
                if spec.beta.contains(j) {
                    if k & bit(j) != 0 {
                        [nil, one]
                    } else {
                        [one, nil]
                    }
                } else {
                    normalise([base, spec.amplitude(g, k | bit(j), &zero)])
                        .expect("nonzero amplitude")
                }
            })
            .collect();
        terms.push((1.0, qubits));
    }
    Ok(ProductMixture::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_components() {
        let css = noise_css(&Graph::path(2), VertexSet::singleton(1)).unwrap();
        let s = css.as_stabilizer_mixture().unwrap();
        let got: Vec<String> = s.components.iter().map(|c| c.to_string()).collect();
        assert_eq!(got, ["+0", "-1"]);
    }

    #[test]
    fn zero_phase_is_the_graph_state() {
        let g = Graph::ring(4);
        let spec = PhaseNoiseSpec::new(&g, [1, 3].into_iter().collect()).unwrap();
        let psi = crate::oracle::statevector(&g).unwrap();
        for z in 0..16u64 {
            assert!((spec.amplitude(&g, z, &[0.0; 4]) - psi[z as usize]).norm() < 1e-12);
        }
    }
}
