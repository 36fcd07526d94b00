use alloc::vec::Vec;

use super::{Bits, Graph};

/// Minimum vertex cover by branch and bound: branch on a maximum-degree vertex
/// `v` (either `v` joins the cover or all of `N(v)` does), bound by a greedy
/// matching. Returns the size and the sorted cover.
pub fn min_vertex_cover(g: &Graph) -> (usize, Vec<usize>) {
    let mut rows: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    // greedy cover as the first incumbent
    let mut best = 0u64;
    let mut r = rows.clone();
    while let Some(v) = max_degree_vertex(&r) {
        best |= 1 << v;
        remove(&mut r, 1 << v);
    }
    branch(&mut rows, 0, &mut best);
    (best.count_ones() as usize, Bits(best).collect())
}

fn max_degree_vertex(rows: &[u64]) -> Option<usize> {
    (0..rows.len()).filter(|&v| rows[v] != 0).max_by_key(|&v| (rows[v].count_ones(), core::cmp::Reverse(v)))
}

fn remove(rows: &mut [u64], set: u64) {
    for v in Bits(set) {
        for w in Bits(rows[v]) {
            rows[w] &= !(1 << v);
        }
        rows[v] = 0;
    }
}

/// Size of a maximal matching, a lower bound on any cover.
fn matching_bound(rows: &[u64]) -> u32 {
    let mut matched = 0u64;
    let mut size = 0;
    for v in 0..rows.len() {
        if matched >> v & 1 == 1 {
            continue;
        }
        let free = rows[v] & !matched;
        if free != 0 {
            let w = free.trailing_zeros();
            matched |= 1 << v | 1 << w;
            size += 1;
        }
    }
    size
}

fn branch(rows: &mut Vec<u64>, cover: u64, best: &mut u64) {
    let Some(v) = max_degree_vertex(rows) else {
        if cover.count_ones() < best.count_ones() || (cover.count_ones() == best.count_ones() && cover < *best) {
            *best = cover;
        }
        return;
    };
    if cover.count_ones() + matching_bound(rows) > best.count_ones() {
        return;
    }
    let saved = rows.clone();
    remove(rows, 1 << v);
    branch(rows, cover | 1 << v, best);
    rows.copy_from_slice(&saved);
    let nb = rows[v];
    remove(rows, nb);
    branch(rows, cover | nb, best);
    rows.copy_from_slice(&saved);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exhaustive(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(min_vertex_cover(&Graph::star(6)).0, 1);
        assert_eq!(min_vertex_cover(&Graph::path(5)).0, 3);
        assert_eq!(min_vertex_cover(&Graph::cycle(4)).0, 2);
        assert_eq!(min_vertex_cover(&Graph::new(3)).0, 0);
        let p = Graph::petersen();
        assert_eq!(min_vertex_cover(&p).0, exhaustive(&p));
    }
}
