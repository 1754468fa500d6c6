#![allow(dead_code)]

use fnm_core::{GraphBuilder, LabeledGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const VLABELS: [&str; 3] = ["A", "B", "C"];
pub const ELABELS: [&str; 3] = ["x", "y", "z"];

/// Random labeled multigraph with at most `max_vertices` vertices,
/// `max_edges` edges, three vertex labels and three edge labels.
pub fn random_graph(seed: u64, max_vertices: usize, max_edges: usize) -> LabeledGraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let n_vl = rng.gen_range(1..=VLABELS.len());
    let n_el = rng.gen_range(1..=ELABELS.len());
    let label_p = rng.gen_range(0.1..0.6);
    let mut b = GraphBuilder::new();
    let vs: Vec<_> = (0..n)
        .map(|i| b.vertex(&format!("v{i}")).unwrap())
        .collect();
    for &v in &vs {
        for l in &VLABELS[..n_vl] {
            if rng.gen_bool(label_p) {
                b.add_vertex_label(v, l).unwrap();
            }
        }
    }
    for _ in 0..m {
        let s = rng.gen_range(0..n);
        let mut d = rng.gen_range(0..n - 1);
        if d >= s {
            d += 1;
        }
        let l = ELABELS[rng.gen_range(0..n_el)];
        b.add_edge(vs[s], vs[d], l).unwrap();
    }
    b.build()
}

/// 10k vertices, 40k edges, ten vertex labels (a fifth of the vertices get
/// a second one) and ten edge labels.
pub fn large_graph(seed: u64) -> LabeledGraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = 10_000;
    let mut b = GraphBuilder::new();
    let vs: Vec<_> = (0..n)
        .map(|i| b.vertex(&format!("v{i}")).unwrap())
        .collect();
    for &v in &vs {
        b.add_vertex_label(v, &format!("L{}", rng.gen_range(0..10)))
            .unwrap();
        if rng.gen_bool(0.2) {
            b.add_vertex_label(v, &format!("L{}", rng.gen_range(0..10)))
                .unwrap();
        }
    }
    let mut seen = std::collections::HashSet::new();
    while seen.len() < 40_000 {
        let s = rng.gen_range(0..n);
        let d = rng.gen_range(0..n);
        let l = rng.gen_range(0..10);
        if s != d && seen.insert((s, d, l)) {
            b.add_edge(vs[s], vs[d], &format!("e{l}")).unwrap();
        }
    }
    b.build()
}
