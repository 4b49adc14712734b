//! Separable two-qubit states on edges, projected back to one qubit per
//! vertex.
//!
//! Each vertex `a` is split into `deg(a)` virtual qubits, one per incident
//! edge. Every edge carries one of
//!
//! - `ω^A = ½(|+0⟩⟨+0| + |−1⟩⟨−1|)` (first virtual orange, second blue),
//! - `ω^B = ½(|0+⟩⟨0+| + |1−⟩⟨1−|)` (first blue, second orange),
//!
//! with the pair ordered by vertex number. Sites in the independent set get
//! `P^B = |+⟩⟨+̃| + |−⟩⟨−̃|`, sites with a blue virtual qubit get
//! `P^A = |0⟩⟨0…0| + |1⟩⟨1…1|`. On a degree-1 site both maps are the
//! identity, so such sites are effectively unprojected.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::{normalise, ProductMixture, Qubit, DENSE_LIMIT};
use crate::error::{Error, Result, StabilizerError};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeState {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    /// X basis.
    Orange,
    /// Z basis.
    Blue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeAssignment {
    /// Endpoints with `a < b`; the first virtual qubit sits at `a`.
    pub a: usize,
    pub b: usize,
    pub state: EdgeState,
    /// Virtual qubit ids at `a` and `b`.
    pub virtuals: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VirtualLayout {
    pub n: usize,
    pub alpha: VertexSet,
    pub edges: Vec<EdgeAssignment>,
    /// Virtual ids per site, in edge order.
    pub sites: Vec<Vec<usize>>,
    pub colours: Vec<Colour>,
}

impl VirtualLayout {
    pub fn virtual_count(&self) -> usize {
        self.colours.len()
    }

    /// Whether site `a` gets `P^A` (it holds a blue virtual qubit).
    pub fn uses_p_a(&self, a: usize) -> bool {
        self.sites[a]
            .iter()
            .any(|&v| self.colours[v] == Colour::Blue)
    }
}

/// Picks `ω^A` or `ω^B` per edge so that independent-set sites only hold
/// orange qubits. Edges with both ends outside the set use `ω^A`, putting
/// orange on the smaller endpoint.
pub fn assign_edge_states(g: &Graph, alpha: VertexSet) -> Result<VirtualLayout> {
    if !alpha.is_subset(g.vertices()) || !g.is_independent(alpha) {
        return Err(StabilizerError::NotIndependent(alpha.to_string()).into());
    }
    let mut sites = vec![Vec::new(); g.n()];
    let mut colours = Vec::new();
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        let state = if alpha.contains(b) {
            EdgeState::B
        } else {
            EdgeState::A
        };
        let (ca, cb) = match state {
            EdgeState::A => (Colour::Orange, Colour::Blue),
            EdgeState::B => (Colour::Blue, Colour::Orange),
        };
        let va = colours.len();
        colours.push(ca);
        let vb = colours.len();
        colours.push(cb);
        sites[a].push(va);
        sites[b].push(vb);
        edges.push(EdgeAssignment {
            a,
            b,
            state,
            virtuals: (va, vb),
        });
    }
    Ok(VirtualLayout {
        n: g.n(),
        alpha,
        edges,
        sites,
        colours,
    })
}

fn ket(colour: Colour, t: u8) -> Qubit {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let c = |x: f64| Complex64::new(x, 0.0);
    match (colour, t) {
        (Colour::Blue, 0) => [c(1.0), c(0.0)],
        (Colour::Blue, _) => [c(0.0), c(1.0)],
        (Colour::Orange, 0) => [c(h), c(h)],
        (Colour::Orange, _) => [c(h), c(-h)],
    }
}

/// Applies the site map to a product of virtual kets.
fn project_site(use_p_a: bool, kets: &[Qubit]) -> Qubit {
    if use_p_a {
        let c0 = kets.iter().map(|k| k[0]).product();
        let c1 = kets.iter().map(|k| k[1]).product();
        [c0, c1]
    } else {
        // X-basis amplitudes of each virtual qubit.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let xs: Vec<(Complex64, Complex64)> = kets
            .iter()
            .map(|k| ((k[0] + k[1]) * h, (k[0] - k[1]) * h))
            .collect();
        let sum: Complex64 = xs.iter().map(|(p, m)| p + m).product();
        let diff: Complex64 = xs.iter().map(|(p, m)| p - m).product();
        let even = (sum + diff) * 0.5;
        let odd = (sum - diff) * 0.5;
        // |+⟩ even + |−⟩ odd in the computational basis.
        [(even + odd) * h, (even - odd) * h]
    }
}

/// The projected mixture, by enumerating edge terms depth-first and pruning
/// as soon as a completed site projects to zero. The result is trace
/// normalised.
pub fn peps_css(g: &Graph, alpha: VertexSet) -> Result<(VirtualLayout, ProductMixture)> {
    let layout = assign_edge_states(g, alpha)?;
    for b in alpha.complement(g.n()).iter() {
        if g.degree(b) > 0 && !layout.uses_p_a(b) {
            return Err(Error::Invalid(format!(
                "site {} is outside the independent set but has no blue virtual qubit",
                b + 1
            )));
        }
    }
    let n = g.n();
    let m = layout.edges.len();
    // Index of the last edge touching each site; isolated sites never
    // complete, so handle them up front.
    let mut last = vec![None; n];
    for (i, e) in layout.edges.iter().enumerate() {
        last[e.a] = Some(i);
        last[e.b] = Some(i);
    }
    let mut terms = Vec::new();
    let mut t = vec![0u8; m];
    let mut sites: Vec<Option<Qubit>> = vec![None; n];
    for (a, s) in sites.iter_mut().enumerate() {
        if last[a].is_none() {
            // A lone vertex: no edge states, maximally mixed is not defined
            // here; the graph state is |+⟩ and so is the separable state.
            let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            *s = Some([h, h]);
        }
    }
    descend(&layout, &last, 0, &mut t, &mut sites, 1.0, &mut terms);
    Ok((layout, ProductMixture::from_terms(terms)))
}

fn descend(
    layout: &VirtualLayout,
    last: &[Option<usize>],
    e: usize,
    t: &mut Vec<u8>,
    sites: &mut Vec<Option<Qubit>>,
    weight: f64,
    terms: &mut Vec<(f64, Vec<Qubit>)>,
) {
    if e == layout.edges.len() {
        terms.push((
            weight,
            sites
                .iter()
                .map(|s| s.expect("all sites complete"))
                .collect(),
        ));
        return;
    }
    let edge = layout.edges[e];
    for value in 0..2u8 {
        t[e] = value;
        let mut w = weight;
        let mut ok = true;
        let mut done = Vec::new();
        for site in [edge.a, edge.b] {
            if last[site] != Some(e) {
                continue;
            }
            let kets: Vec<Qubit> = layout.sites[site]
                .iter()
                .map(|&v| {
                    let owner = v / 2;
                    ket(layout.colours[v], t[owner])
                })
                .collect();
            let u = project_site(layout.uses_p_a(site), &kets);
            match normalise(u) {
                Some(q) => {
                    w *= u[0].norm_sqr() + u[1].norm_sqr();
                    sites[site] = Some(q);
                    done.push(site);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            descend(layout, last, e + 1, t, sites, w, terms);
        }
        for site in done {
            sites[site] = None;
        }
    }
}

/// Literal dense evaluation `P ω' P†` over all virtual qubits, trace
/// normalised. Only for layouts with at most ten virtual qubits.
pub fn peps_dense_literal(g: &Graph, alpha: VertexSet) -> Result<DMatrix<Complex64>> {
    let layout = assign_edge_states(g, alpha)?;
    let nv = layout.virtual_count();
    if nv > DENSE_LIMIT || g.n() > DENSE_LIMIT {
        return Err(Error::TooLarge {
            qubits: nv,
            limit: DENSE_LIMIT,
        });
    }
    let zero = Complex64::new(0.0, 0.0);
    let vdim = 1usize << nv;
    // P maps virtual basis states to physical ones, site by site.
    let pdim = 1usize << g.n();
    let mut p = DMatrix::from_element(pdim, vdim, zero);
    for z in 0..vdim {
        let mut col = vec![Complex64::new(1.0, 0.0); 1];
        for a in 0..g.n() {
            let kets: Vec<Qubit> = layout.sites[a]
                .iter()
                .map(|&v| {
                    let bitv = (z >> v) & 1;
                    if bitv == 0 {
                        [Complex64::new(1.0, 0.0), zero]
                    } else {
                        [zero, Complex64::new(1.0, 0.0)]
                    }
                })
                .collect();
            let u = if kets.is_empty() {
                let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                [h, h]
            } else {
                project_site(layout.uses_p_a(a), &kets)
            };
            let mut next = vec![zero; col.len() * 2];
            for (i, c) in col.iter().enumerate() {
                next[i] = c * u[0];
                next[i + col.len()] = c * u[1];
            }
            col = next;
        }
        for (r, c) in col.into_iter().enumerate() {
            p[(r, z)] = c;
        }
    }
    // ω' = Σ_t |v_t⟩⟨v_t| over edge terms (bit v = virtual v); apply P to
    // each term.
    let mut rho = DMatrix::from_element(pdim, pdim, zero);
    for tmask in 0u64..(1 << layout.edges.len()) {
        let v = nalgebra::DVector::from_iterator(
            vdim,
            (0..vdim).map(|z| {
                (0..nv)
                    .map(|q| ket(layout.colours[q], ((tmask >> (q / 2)) & 1) as u8)[(z >> q) & 1])
                    .product::<Complex64>()
            }),
        );
        let w = &p * v;
        rho += &w * w.adjoint();
    }
    let tr = rho.trace();
    Ok(rho / tr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_layout() {
        let l = assign_edge_states(&Graph::path(4), [0, 2].into_iter().collect()).unwrap();
        let states: Vec<EdgeState> = l.edges.iter().map(|e| e.state).collect();
        assert_eq!(states, [EdgeState::A, EdgeState::B, EdgeState::A]);
        assert!(l.uses_p_a(1));
        assert!(!l.uses_p_a(2));
    }

    #[test]
    fn triangle_layout() {
        let l = assign_edge_states(&Graph::complete(3), VertexSet::singleton(0)).unwrap();
        // Edge (2,3) has both ends outside the set: ω^A, orange on vertex 2.
        assert_eq!(l.edges[2].state, EdgeState::A);
        assert_eq!(l.colours[l.edges[2].virtuals.0], Colour::Orange);
    }

    #[test]
    fn p2_is_omega_a() {
        let (_, mix) = peps_css(&Graph::path(2), VertexSet::singleton(0)).unwrap();
        let css = mix.as_stabilizer_mixture().unwrap();
        let got: Vec<String> = css.components.iter().map(|c| c.to_string()).collect();
        assert_eq!(got, ["+0", "-1"]);
    }

    #[test]
    fn p_b_on_two_qubits() {
        // ⟨+̃| picks up |++⟩ and |−−⟩, ⟨−̃| picks up |+−⟩ and |−+⟩.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = [Complex64::new(h, 0.0), Complex64::new(h, 0.0)];
        let minus = [Complex64::new(h, 0.0), Complex64::new(-h, 0.0)];
        let out = project_site(false, &[minus, minus]);
        assert!((out[0] - plus[0]).norm() < 1e-12 && (out[1] - plus[1]).norm() < 1e-12);
        let out = project_site(false, &[plus, minus]);
        assert!((out[0] - minus[0]).norm() < 1e-12 && (out[1] - minus[1]).norm() < 1e-12);
    }

    #[test]
    fn rejects_dependent_set() {
        assert!(assign_edge_states(&Graph::path(3), [0, 1].into_iter().collect()).is_err());
    }
}
