use graphent::alt_css::{
    noise_css, noise_dense, noise_dense_quadrature, peps_css, peps_dense_literal,
    stabilizer_mixture_dense,
};
use graphent::graph::max_independent_set;
use graphent::measures::{closest_separable_state, css_stabilizer_form};
use graphent::oracle::{
    connected_graphs_up_to, hermitian_eigen, max_abs_diff, pauli_sum_density, seeded_random_graphs,
};
use graphent::Graph;
use nalgebra::DMatrix;
use num_complex::Complex64;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}

fn ket(v: &[f64]) -> DMatrix<Complex64> {
    DMatrix::from_iterator(v.len(), 1, v.iter().map(|&x| c(x)))
}

fn check_graph(g: &Graph) {
    let alpha = max_independent_set(g);
    let beta = alpha.complement(g.n());
    let reference = stabilizer_mixture_dense(&closest_separable_state(g).unwrap()).unwrap();

    let (_, peps) = peps_css(g, alpha).unwrap();
    let peps_rho = peps.dense().unwrap();
    assert!(
        max_abs_diff(&peps_rho, &reference) < 1e-12,
        "peps differs on {g:?}"
    );
    assert!(peps.as_stabilizer_mixture().is_some());

    let noise = noise_css(g, beta).unwrap().dense().unwrap();
    assert!(
        max_abs_diff(&noise, &reference) < 1e-12,
        "noise components differ on {g:?}"
    );
    let averaged = noise_dense(g, beta).unwrap();
    assert!(
        max_abs_diff(&averaged, &reference) < 1e-12,
        "noise average differs on {g:?}"
    );
}

#[test]
fn three_constructions_agree_up_to_five() {
    for g in connected_graphs_up_to(5) {
        check_graph(&g);
        let sum = pauli_sum_density(&css_stabilizer_form(&g).unwrap().elements).unwrap();
        let reference = stabilizer_mixture_dense(&closest_separable_state(&g).unwrap()).unwrap();
        assert!(max_abs_diff(&sum, &reference) < 1e-12);
    }
}

#[test]
fn three_constructions_agree_on_random_graphs() {
    for n in [6, 7, 8] {
        for g in seeded_random_graphs(n, 8, 11 + n as u64) {
            check_graph(&g);
        }
    }
}

#[test]
fn literal_projection_matches() {
    for g in connected_graphs_up_to(5) {
        if g.edge_count() > 5 {
            continue;
        }
        let alpha = max_independent_set(&g);
        let literal = peps_dense_literal(&g, alpha).unwrap();
        let reference = stabilizer_mixture_dense(&closest_separable_state(&g).unwrap()).unwrap();
        assert!(
            max_abs_diff(&literal, &reference) < 1e-12,
            "literal differs on {g:?}"
        );
        let (eig, _) = hermitian_eigen(&literal);
        assert!(eig.iter().all(|&e| e >= -1e-12));
        assert!((literal.trace().re - 1.0).abs() < 1e-12);
        assert!(max_abs_diff(&literal, &literal.adjoint()) < 1e-14);
    }
}

#[test]
fn four_qubit_path_by_hand() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let zero = ket(&[1.0, 0.0]);
    let one = ket(&[0.0, 1.0]);
    let plus = ket(&[h, h]);
    let minus = ket(&[h, -h]);
    let proj = |v: &DMatrix<Complex64>| v * v.adjoint();

    let omega_a = proj(&kron(&plus, &zero)) + proj(&kron(&minus, &one));
    let omega_b = proj(&kron(&zero, &plus)) + proj(&kron(&one, &minus));
    let omega6 = kron(&kron(&omega_a, &omega_b), &omega_a);

    let p2 = zero.clone() * kron(&zero, &zero).adjoint() + one.clone() * kron(&one, &one).adjoint();
    let p3 = plus.clone() * kron(&plus, &plus).adjoint()
        + plus.clone() * kron(&minus, &minus).adjoint()
        + minus.clone() * kron(&plus, &minus).adjoint()
        + minus.clone() * kron(&minus, &plus).adjoint();
    let id = DMatrix::<Complex64>::identity(2, 2);
    // Virtual order 1' (site 1), 2' 3' (site 2), 4' 5' (site 3), 6' (site 4).
    let p = kron(&kron(&kron(&id, &p2), &p3), &id);
    let mut omega4 = &p * omega6 * p.adjoint();
    let tr = omega4.trace();
    omega4 /= tr;

    // The hand-built operator uses qubit 1 as the most significant bit;
    // the library uses qubit 1 as the least significant one.
    let rev = |r: usize| (0..4).fold(0, |acc, i| acc | ((r >> i & 1) << (3 - i)));
    let flipped = DMatrix::from_fn(16, 16, |r, cc| omega4[(rev(r), rev(cc))]);

    let g = Graph::path(4);
    let alpha = [0, 2].into_iter().collect();
    let literal = peps_dense_literal(&g, alpha).unwrap();
    assert!(max_abs_diff(&literal, &flipped) < 1e-12);
    let reference = stabilizer_mixture_dense(&closest_separable_state(&g).unwrap()).unwrap();
    assert!(max_abs_diff(&flipped, &reference) < 1e-12);
}

#[test]
fn quadrature_matches_two_point_average() {
    for g in connected_graphs_up_to(4)
        .into_iter()
        .chain(seeded_random_graphs(5, 10, 3))
    {
        let beta = max_independent_set(&g).complement(g.n());
        let two = noise_dense(&g, beta).unwrap();
        let fine = noise_dense_quadrature(&g, beta, 64).unwrap();
        assert!(max_abs_diff(&two, &fine) < 1e-9);
    }
}

#[test]
fn worked_mixtures() {
    let names = |g: &Graph, beta| -> Vec<String> {
        let mut v: Vec<String> = noise_css(g, beta)
            .unwrap()
            .as_stabilizer_mixture()
            .unwrap()
            .components
            .iter()
            .map(|c| c.to_string())
            .collect();
        v.sort();
        v
    };
    assert_eq!(
        names(&Graph::path(3), [1].into_iter().collect()),
        ["+0+", "-1-"]
    );
    let two_stars = Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap();
    assert_eq!(
        names(&two_stars, [4, 5].into_iter().collect()),
        ["++++00", "++--10", "--++01", "----11"]
    );
}
