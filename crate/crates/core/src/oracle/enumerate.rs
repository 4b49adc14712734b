use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Every connected labelled graph on `n` vertices, in order of the edge
/// subset mask over `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn connected_labelled_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=7).contains(&n),
        "exhaustive enumeration supports 1..=7 vertices"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("valid");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// All connected labelled graphs with `1..=max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_labelled_graphs).collect()
}

/// A connected G(n, p) sample: edges are drawn independently and the draw is
/// repeated until the graph is connected.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    loop {
        let mut g = Graph::empty(n).expect("valid size");
        for a in 0..n {
            for b in a + 1..n {
                if rng.random::<f64>() < p {
                    g.toggle_edge(a, b);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

/// `count` connected random graphs on `n` vertices. Edge probabilities are
/// spread over `[0.25, 0.75]` so sparse and dense graphs both appear.
pub fn seeded_random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let p = 0.25 + 0.5 * (i % 11) as f64 / 10.0;
            random_connected_graph(n, p, &mut rng)
        })
        .collect()
}
