use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::measures::Decomposition;
use crate::stabilizer::{PauliOperator, ProductStabilizerState};

/// Largest qubit count for statevectors.
pub const STATE_LIMIT: usize = 14;
/// Largest qubit count for dense density matrices and Pauli matrices.
pub const DENSITY_LIMIT: usize = 10;
/// Eigenvalues below this are treated as zero.
pub const EIGEN_FLOOR: f64 = 1e-14;

pub type DenseState = DVector<Complex64>;
pub type DenseDensity = DMatrix<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::TooLarge { qubits: n, limit })
    } else {
        Ok(())
    }
}

/// Number of qubits of a vector of length `2^n`.
pub fn qubits_of(len: usize) -> usize {
    debug_assert!(len.is_power_of_two());
    len.trailing_zeros() as usize
}

/// `∏ CZ |+⟩^n`. Basis index bit `q` is qubit `q`.
pub fn statevector(g: &Graph) -> Result<DenseState> {
    graph_basis_state(g, 0)
}

/// `Z^k |G⟩` with `k` a vertex bitmask.
pub fn graph_basis_state(g: &Graph, k: u64) -> Result<DenseState> {
    let n = g.n();
    check(n, STATE_LIMIT)?;
    let edges = g.edges();
    let norm = (0.5f64).powf(n as f64 / 2.0);
    Ok(DVector::from_fn(1 << n, |z, _| {
        let z = z as u64;
        let mut parity = (z & k).count_ones();
        for &(a, b) in &edges {
            parity += ((z >> a) & (z >> b) & 1) as u32;
        }
        Complex64::new(if parity % 2 == 0 { norm } else { -norm }, 0.0)
    }))
}

pub fn product_vector(psi: &ProductStabilizerState) -> Result<DenseState> {
    check(psi.n(), STATE_LIMIT)?;
    Ok(DVector::from_fn(1 << psi.n(), |z, _| {
        psi.amplitude(z as u64)
    }))
}

/// `D^{-1/2} Σ_k (-1)^{f(k)} |ψ_k⟩` written out densely.
pub fn decomposition_vector(d: &Decomposition) -> Result<DenseState> {
    let n = d.terms.first().map_or(0, |t| t.1.n());
    check(n, STATE_LIMIT)?;
    let mut v = DVector::from_element(1 << n, ZERO);
    for (sign, psi) in &d.terms {
        v += product_vector(psi)? * Complex64::new(*sign as f64 * d.normalization(), 0.0);
    }
    Ok(v)
}

/// Dense matrix of a Pauli operator, including its phase.
pub fn pauli_dense(p: &PauliOperator) -> Result<DMatrix<Complex64>> {
    let n = p.n();
    check(n, DENSITY_LIMIT)?;
    let dim = 1usize << n;
    let mut m = DMatrix::from_element(dim, dim, ZERO);
    let phase = crate::stabilizer::Phase(p.phase()).to_complex();
    // Column z maps to row z ^ x; Y = iXZ contributes i per Y and Z a sign.
    let y = (p.x() & p.z()).count_ones();
    let ypow = crate::stabilizer::Phase((y % 4) as u8).to_complex();
    for z in 0..dim as u64 {
        let sign = if (z & p.z()).count_ones() % 2 == 0 {
            ONE
        } else {
            -ONE
        };
        m[((z ^ p.x()) as usize, z as usize)] = phase * ypow * sign;
    }
    Ok(m)
}

/// `|v⟩⟨v|`.
pub fn projector(v: &DenseState) -> DenseDensity {
    v * v.adjoint()
}

/// Uniform mixture of the given product states.
pub fn mixture_density(components: &[ProductStabilizerState]) -> Result<DenseDensity> {
    let n = components.first().map_or(0, |c| c.n());
    check(n, DENSITY_LIMIT)?;
    let dim = 1usize << n;
    let mut rho = DMatrix::from_element(dim, dim, ZERO);
    let w = 1.0 / components.len() as f64;
    for c in components {
        let v = product_vector(c)?;
        rho += projector(&v) * Complex64::new(w, 0.0);
    }
    Ok(rho)
}

/// `(1/2^n) Σ σ` over the given operators.
pub fn pauli_sum_density(elements: &[PauliOperator]) -> Result<DenseDensity> {
    let n = elements.first().map_or(0, |p| p.n());
    check(n, DENSITY_LIMIT)?;
    let dim = 1usize << n;
    let mut m = DMatrix::from_element(dim, dim, ZERO);
    for p in elements {
        m += pauli_dense(p)?;
    }
    Ok(m / Complex64::new(dim as f64, 0.0))
}

/// Largest absolute entrywise difference.
pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix.
pub fn hermitian_eigen(m: &DenseDensity) -> (Vec<f64>, DMatrix<Complex64>) {
    let e = m.clone().symmetric_eigen();
    (e.eigenvalues.iter().copied().collect(), e.eigenvectors)
}

/// Outcome of a relative entropy evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelativeEntropy {
    /// Bits; `f64::INFINITY` if the state leaves the support of `omega`.
    pub value: f64,
    /// Weight of the state outside the support of `omega`.
    pub outside_support: f64,
}

/// `S(|ψ⟩⟨ψ| || ω) = -⟨ψ| log2 ω |ψ⟩`.
pub fn relative_entropy_pure(psi: &DenseState, omega: &DenseDensity) -> RelativeEntropy {
    let (vals, vecs) = hermitian_eigen(omega);
    let mut value = 0.0;
    let mut outside = 0.0;
    for (j, &lam) in vals.iter().enumerate() {
        let w = vecs.column(j).dotc(psi).norm_sqr();
        if lam < EIGEN_FLOOR {
            outside += w;
        } else {
            value -= w * lam.log2();
        }
    }
    if outside > 1e-10 {
        value = f64::INFINITY;
    }
    RelativeEntropy {
        value,
        outside_support: outside,
    }
}

/// `|⟨φ|ψ⟩|²`.
pub fn overlap2(psi: &DenseState, phi: &ProductStabilizerState) -> Result<f64> {
    Ok(product_vector(phi)?.dotc(psi).norm_sqr())
}

/// Entanglement entropy in bits across the cut `(a, V \ a)`.
pub fn reduced_entropy(psi: &DenseState, a: VertexSet) -> Result<f64> {
    let n = qubits_of(psi.len());
    let rest = a.complement(n);
    if a.is_empty() || rest.is_empty() {
        return Err(crate::error::GraphError::TrivialCut.into());
    }
    let a_bits: Vec<usize> = a.iter().collect();
    let r_bits: Vec<usize> = rest.iter().collect();
    let spread = |bits: &[usize], idx: usize| -> usize {
        bits.iter()
            .enumerate()
            .map(|(j, &q)| ((idx >> j) & 1) << q)
            .sum()
    };
    // Reshape into a |a| x |rest| matrix and take singular values.
    let m = DMatrix::from_fn(1 << a_bits.len(), 1 << r_bits.len(), |i, j| {
        psi[spread(&a_bits, i) | spread(&r_bits, j)]
    });
    let sv = m.singular_values();
    Ok(sv
        .iter()
        .map(|s| s * s)
        .filter(|&p| p > EIGEN_FLOOR)
        .map(|p| -p * p.log2())
        .sum())
}

/// Applies a 2x2 matrix to qubit `q`.
pub fn apply_single_qubit(psi: &mut DenseState, q: usize, u: [[Complex64; 2]; 2]) {
    let step = 1usize << q;
    for base in 0..psi.len() {
        if base & step != 0 {
            continue;
        }
        let (a, b) = (psi[base], psi[base | step]);
        psi[base] = u[0][0] * a + u[0][1] * b;
        psi[base | step] = u[1][0] * a + u[1][1] * b;
    }
}

/// `exp(-iπ/4 X)`.
pub fn sqrt_minus_i_x() -> [[Complex64; 2]; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [
        [Complex64::new(h, 0.0), Complex64::new(0.0, -h)],
        [Complex64::new(0.0, -h), Complex64::new(h, 0.0)],
    ]
}

/// `exp(iπ/4 Z)`.
pub fn sqrt_i_z() -> [[Complex64; 2]; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [[Complex64::new(h, h), ZERO], [ZERO, Complex64::new(h, -h)]]
}

/// Applies the local Clifford `exp(-iπ/4 X_a) ∏_{b∈N_a} exp(iπ/4 Z_b)`.
pub fn apply_lc_unitary(g: &Graph, a: usize, psi: &mut DenseState) {
    apply_single_qubit(psi, a, sqrt_minus_i_x());
    for b in g.neighbourhood(a).iter() {
        apply_single_qubit(psi, b, sqrt_i_z());
    }
}

/// Conjugates a density matrix by the same local Clifford.
pub fn conjugate_lc_unitary(g: &Graph, a: usize, rho: &DenseDensity) -> DenseDensity {
    let n = g.n();
    let dim = 1usize << n;
    let mut u = DMatrix::from_element(dim, dim, ZERO);
    for col in 0..dim {
        let mut e = DVector::from_element(dim, ZERO);
        e[col] = ONE;
        apply_lc_unitary(g, a, &mut e);
        u.set_column(col, &e);
    }
    &u * rho * u.adjoint()
}

/// `|⟨a|b⟩|` for normalised vectors; 1 means equal up to global phase.
pub fn fidelity_amplitude(a: &DenseState, b: &DenseState) -> f64 {
    a.dotc(b).norm()
}

/// Best overlap² with a product state found by alternating single-site
/// maximisation from random starts. A heuristic lower bound on the true
/// maximum.
pub fn best_product_overlap(
    psi: &DenseState,
    restarts: usize,
    iterations: usize,
    seed: u64,
) -> f64 {
    let n = qubits_of(psi.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0.0f64;
    for _ in 0..restarts.max(1) {
        let mut sites: Vec<[Complex64; 2]> = (0..n)
            .map(|_| {
                let v = [
                    Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                    Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                ];
                normalise(v)
            })
            .collect();
        let mut value = 0.0;
        for _ in 0..iterations {
            let before = value;
            for q in 0..n {
                let v = contract_except(psi, &sites, q);
                value = v[0].norm_sqr() + v[1].norm_sqr();
                if value > 0.0 {
                    sites[q] = normalise(v);
                }
            }
            if (value - before).abs() < 1e-15 {
                break;
            }
        }
        best = best.max(value);
    }
    best
}

fn normalise(v: [Complex64; 2]) -> [Complex64; 2] {
    let nrm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / nrm, v[1] / nrm]
}

/// `⟨⊗_{p≠q} φ_p | ψ⟩` as a vector on qubit `q`.
fn contract_except(psi: &DenseState, sites: &[[Complex64; 2]], q: usize) -> [Complex64; 2] {
    let mut out = [ZERO; 2];
    for (z, amp) in psi.iter().enumerate() {
        let mut c = *amp;
        for (p, s) in sites.iter().enumerate() {
            if p != q {
                c *= s[(z >> p) & 1].conj();
            }
        }
        out[(z >> q) & 1] += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::generators_from_graph;

    #[test]
    fn p2_statevector() {
        let v = statevector(&Graph::path(2)).unwrap();
        let got: Vec<f64> = v.iter().map(|c| c.re).collect();
        assert_eq!(got, [0.5, 0.5, 0.5, -0.5]);
        let v = statevector(&Graph::empty(1).unwrap()).unwrap();
        assert!((v[0].re - v[1].re).abs() < 1e-15);
    }

    #[test]
    fn generators_fix_statevector() {
        let g = Graph::ring(5);
        let v = statevector(&g).unwrap();
        for p in generators_from_graph(&g).generators() {
            let w = pauli_dense(p).unwrap() * &v;
            assert!((w - &v).norm() < 1e-12);
        }
    }

    #[test]
    fn relative_entropy_edge_cases() {
        let v = statevector(&Graph::path(2)).unwrap();
        assert!(relative_entropy_pure(&v, &projector(&v)).value.abs() < 1e-9);
        let mixed = DMatrix::identity(4, 4) / Complex64::new(4.0, 0.0);
        assert!((relative_entropy_pure(&v, &mixed).value - 2.0).abs() < 1e-12);
        let other = product_vector(&"00".parse().unwrap()).unwrap();
        assert!(relative_entropy_pure(&v, &projector(&other))
            .value
            .is_infinite());
    }

    #[test]
    fn reduced_entropy_of_bell_pair() {
        let v = statevector(&Graph::path(2)).unwrap();
        assert!((reduced_entropy(&v, VertexSet::singleton(0)).unwrap() - 1.0).abs() < 1e-9);
        let p = product_vector(&"+0i".parse().unwrap()).unwrap();
        assert!(reduced_entropy(&p, VertexSet::singleton(1)).unwrap().abs() < 1e-9);
    }

    #[test]
    fn product_overlap_search() {
        let v = statevector(&Graph::path(2)).unwrap();
        assert!((best_product_overlap(&v, 20, 100, 1) - 0.5).abs() < 1e-9);
        let p = product_vector(&"+0j".parse().unwrap()).unwrap();
        assert!((best_product_overlap(&p, 5, 100, 1) - 1.0).abs() < 1e-9);
    }
}
