//! Exhaustive small-graph generation and seeded random graphs.

use alloc::vec::Vec;
use hashbrown::HashSet;
use rand::Rng;

use super::iso::{canonical_form, canonical_graph};
use super::Graph;

/// One canonical representative of every isomorphism class of graphs on
/// exactly `n` vertices, for each `n` in `0..=max_n`. Built by adding a vertex
/// with every possible neighborhood to the classes one size down.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 10, "exhaustive enumeration is limited to 10 vertices");
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(max_n + 1);
    levels.push(alloc::vec![Graph::new(0)]);
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 1] {
            for nbhd in 0u64..1 << (n - 1) {
                let mut h = g.clone();
                let v = h.add_vertex().expect("n <= 10");
                for u in super::Bits(nbhd) {
                    h.add_edge(u, v);
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(canonical_graph(&h));
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniform graph with exactly `min(m, C(n,2))` edges.
pub fn random_gnm<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut g = Graph::new(n);
    let m = m.min(super::pair_count(n));
    let mut added = 0;
    while added < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v);
            added += 1;
        }
    }
    g
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

/// Copies `h` onto distinct random vertices of `g` and returns the placement.
pub fn plant<R: Rng + ?Sized>(rng: &mut R, g: &mut Graph, h: &Graph) -> Vec<usize> {
    assert!(h.n() <= g.n());
    let perm = random_permutation(rng, g.n());
    let place: Vec<usize> = perm[..h.n()].to_vec();
    for (a, b) in h.edges() {
        g.add_edge(place[a], place[b]);
    }
    place
}
