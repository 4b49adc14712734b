use std::collections::HashSet;

use graphent::graph::{
    lc_orbit_members, matching_number, max_independent_set, max_matching, maximum_matchings,
    min_vertex_cover, parse_graph, to_graph6, GraphFormat,
};
use graphent::oracle::{
    brute_matching, brute_mis, brute_orbit, brute_vertex_cover, connected_graphs_up_to,
    reduced_entropy, seeded_random_graphs, statevector,
};
use graphent::{Graph, VertexSet};
use proptest::prelude::*;

#[test]
fn solvers_match_brute_force_up_to_six() {
    for g in connected_graphs_up_to(6) {
        let alpha = max_independent_set(&g);
        let beta = min_vertex_cover(&g);
        assert!(g.is_independent(alpha) && g.is_vertex_cover(beta));
        assert_eq!(alpha.len() + beta.len(), g.n());
        assert_eq!(
            alpha.iter().collect::<Vec<_>>(),
            brute_mis(&g).unwrap(),
            "{g:?}"
        );
        assert_eq!(beta.len(), brute_vertex_cover(&g).unwrap());

        let m = max_matching(&g);
        assert!(m.is_matching_of(&g));
        assert_eq!(m.edges(), brute_matching(&g).unwrap().as_slice(), "{g:?}");
        assert!(m.len() <= beta.len());
        if g.is_bipartite() {
            assert_eq!(m.len(), beta.len());
        }
    }
}

#[test]
fn matching_enumeration_is_complete() {
    // Count all maximum matchings by brute force over edge subsets.
    for g in connected_graphs_up_to(5)
        .into_iter()
        .chain(seeded_random_graphs(6, 30, 5))
    {
        let edges = g.edges();
        let need = matching_number(&g);
        let mut count = 0;
        for mask in 0u32..(1 << edges.len()) {
            if mask.count_ones() as usize != need {
                continue;
            }
            let mut used = 0u64;
            let ok = (0..edges.len()).filter(|i| mask >> i & 1 == 1).all(|i| {
                let (a, b) = edges[i];
                let fresh = used & (1 << a | 1 << b) == 0;
                used |= 1 << a | 1 << b;
                fresh
            });
            count += ok as usize;
        }
        let all = maximum_matchings(&g, usize::MAX);
        assert_eq!(all.len(), count);
        assert!(all.windows(2).all(|w| w[0].edges() < w[1].edges()));
    }
}

#[test]
fn orbits_match_brute_force() {
    for g in connected_graphs_up_to(5)
        .into_iter()
        .chain(seeded_random_graphs(6, 20, 9))
    {
        let (members, truncated) = lc_orbit_members(&g, 100_000);
        assert!(!truncated);
        let ours: HashSet<Graph> = members.iter().map(|m| m.graph.clone()).collect();
        let brute: HashSet<Graph> = brute_orbit(&g).unwrap().into_iter().collect();
        assert_eq!(ours, brute);
        for h in &ours {
            for a in 0..h.n() {
                assert!(ours.contains(&h.local_complement(a).unwrap()));
            }
        }
    }
}

#[test]
fn cut_rank_is_entanglement_entropy() {
    for g in connected_graphs_up_to(5) {
        let psi = statevector(&g).unwrap();
        for mask in 1..(1u64 << g.n()) - 1 {
            let a = VertexSet(mask);
            let r = g.cut_rank(a).unwrap();
            assert_eq!(r, g.cut_rank(a.complement(g.n())).unwrap());
            assert!(r >= 1 && r <= a.len().min(g.n() - a.len()));
            assert!((reduced_entropy(&psi, a).unwrap() - r as f64).abs() < 1e-9);
        }
    }
}

#[test]
fn worked_examples() {
    let two_stars = Graph::from_edges(6, &[(0, 5), (1, 5), (2, 4), (3, 4), (4, 5)]).unwrap();
    assert_eq!(brute_mis(&two_stars).unwrap().len(), 4);
    assert_eq!(brute_matching(&two_stars).unwrap().len(), 2);
    let k5 = Graph::complete(5);
    assert_eq!(brute_mis(&k5).unwrap().len(), 1);
    assert_eq!(brute_matching(&k5).unwrap().len(), 2);
    assert_eq!(brute_orbit(&Graph::path(3)).unwrap().len(), 4);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn local_complement_is_an_involution(g in arb_graph(14), a in 0usize..14) {
        let a = a % g.n();
        prop_assert_eq!(g.local_complement(a).unwrap().local_complement(a).unwrap(), g);
    }

    #[test]
    fn duality_on_random_graphs(g in arb_graph(16)) {
        let alpha = max_independent_set(&g);
        let beta = min_vertex_cover(&g);
        prop_assert_eq!(alpha.len() + beta.len(), g.n());
        let m = max_matching(&g);
        prop_assert!(m.len() <= beta.len());
        if g.is_bipartite() {
            prop_assert_eq!(m.len(), beta.len());
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph(&text, GraphFormat::Graph6).unwrap(), g);
    }
}
