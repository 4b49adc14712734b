use graphent::graph::{
    lc_orbit_members, max_independent_set, maximum_matchings, DEFAULT_ORBIT_CAP,
};
use graphent::measures::{
    bounds, closest_separable_state, css_stabilizer_form, evaluate, extract_bell_pairs,
    minimal_decomposition, verify_extraction, Classification, MeasureValue,
};
use graphent::oracle::{
    connected_graphs_up_to, decomposition_vector, max_abs_diff, mixture_density, overlap2,
    pauli_sum_density, relative_entropy_pure, seeded_random_graphs, statevector, DenseState,
};
use graphent::{Graph, VertexSet};

fn reconstruct(g: &Graph) -> DenseState {
    decomposition_vector(&minimal_decomposition(g).unwrap()).unwrap()
}

fn max_cut_rank(g: &Graph) -> usize {
    (1..(1u64 << g.n()) - 1)
        .map(|m| g.cut_rank(VertexSet(m)).unwrap())
        .max()
        .unwrap_or(0)
}

#[test]
fn decomposition_reconstructs_the_state() {
    let graphs = connected_graphs_up_to(5)
        .into_iter()
        .chain((7..=10).flat_map(|n| seeded_random_graphs(n, 6, n as u64)));
    for g in graphs {
        let psi = statevector(&g).unwrap();
        let v = reconstruct(&g);
        let worst = psi
            .iter()
            .zip(v.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(worst < 1e-12, "{g:?}");
    }
}

#[test]
fn certificates_on_orbit_representatives() {
    for g in connected_graphs_up_to(5)
        .into_iter()
        .chain(seeded_random_graphs(7, 10, 2))
    {
        let r = evaluate(&g, DEFAULT_ORBIT_CAP).unwrap();
        let psi = statevector(&g).unwrap();
        let omega = mixture_density(&r.css.components).unwrap();
        let ree = relative_entropy_pure(&psi, &omega);
        assert!((ree.value - r.bounds.upper as f64).abs() < 1e-9, "{g:?}");
        let ov = overlap2(&psi, &r.cps).unwrap();
        assert!(
            (ov - 0.5f64.powi(r.bounds.upper as i32)).abs() < 1e-12,
            "{g:?}"
        );
    }
}

#[test]
fn projector_sum_equals_mixture() {
    for g in connected_graphs_up_to(5)
        .into_iter()
        .chain(seeded_random_graphs(8, 5, 4))
    {
        let a = mixture_density(&closest_separable_state(&g).unwrap().components).unwrap();
        let b = pauli_sum_density(&css_stabilizer_form(&g).unwrap().elements).unwrap();
        assert!(max_abs_diff(&a, &b) < 1e-12);
    }
}

#[test]
fn values_are_lc_invariant() {
    for g in connected_graphs_up_to(5)
        .into_iter()
        .chain(seeded_random_graphs(7, 5, 6))
    {
        let want = evaluate(&g, DEFAULT_ORBIT_CAP).unwrap().measures;
        let (members, _) = lc_orbit_members(&g, DEFAULT_ORBIT_CAP);
        for m in members.iter().take(50) {
            assert_eq!(
                evaluate(&m.graph, DEFAULT_ORBIT_CAP).unwrap().measures,
                want
            );
        }
    }
}

#[test]
fn lower_bound_is_max_cut_rank() {
    for g in connected_graphs_up_to(5)
        .into_iter()
        .chain(seeded_random_graphs(7, 20, 8))
    {
        assert_eq!(
            bounds(&g, DEFAULT_ORBIT_CAP).lower,
            max_cut_rank(&g),
            "{g:?}"
        );
    }
}

#[test]
fn classification_predictions_are_sound() {
    for g in connected_graphs_up_to(5)
        .into_iter()
        .chain(seeded_random_graphs(7, 50, 10))
    {
        let b = bounds(&g, DEFAULT_ORBIT_CAP);
        if b.classification.predicts_equal() {
            assert!(b.coincide, "{g:?} {:?}", b.classification);
        }
    }
    assert_eq!(
        bounds(&Graph::ring(6), DEFAULT_ORBIT_CAP).classification,
        Classification::BipartiteKonig
    );
}

#[test]
fn bell_pairs_on_small_graphs() {
    for g in connected_graphs_up_to(6)
        .into_iter()
        .filter(|g| g.n() == 6)
        .step_by(97)
    {
        let m = maximum_matchings(&g, 1).remove(0);
        match extract_bell_pairs(&g) {
            Ok((m, r)) => {
                assert!(verify_extraction(&g, &m, &r));
                assert_eq!(r.final_graph.edge_count(), m.len());
            }
            Err(_) => assert!(max_cut_rank(&g) < m.len(), "{g:?}"),
        }
    }
}

#[test]
fn greenberger_horne_zeilinger_family() {
    for n in 3..=8 {
        let r = evaluate(&Graph::star(n), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r.measures.schmidt, MeasureValue::Exact(1));
    }
    for n in 3..=6 {
        let r = evaluate(&Graph::complete(n), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(r.measures.geometric, MeasureValue::Exact(1));
        assert_eq!(max_independent_set(&Graph::complete(n)).len(), 1);
    }
}
