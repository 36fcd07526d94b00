use alloc::vec::Vec;

use super::{Bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContainmentKind {
    Subgraph,
    Induced,
    Minor,
    TopologicalMinor,
}

/// Certificate that `H` is contained in `G`.
///
/// * subgraph / induced: `vertex_map[h]` is the image of `h`.
/// * minor: `branch_sets[h]` is a connected vertex set of `G`; `vertex_map[h]`
///   is its smallest vertex.
/// * topological minor: `vertex_map` places the branch vertices and `paths[j]`
///   realizes the `j`-th edge of `H.edges()` as a vertex sequence of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentWitness {
    pub kind: ContainmentKind,
    pub vertex_map: Vec<usize>,
    pub branch_sets: Vec<Vec<usize>>,
    pub paths: Vec<Vec<usize>>,
}

impl ContainmentWitness {
    pub(crate) fn mapping(kind: ContainmentKind, vertex_map: Vec<usize>) -> Self {
        ContainmentWitness { kind, vertex_map, branch_sets: Vec::new(), paths: Vec::new() }
    }

    /// Replays the certificate against `g` and checks that it reproduces `h`.
    pub fn verify(&self, h: &Graph, g: &Graph) -> bool {
        if self.vertex_map.len() != h.n() || self.vertex_map.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let injective = {
            let mut seen = 0u64;
            self.vertex_map.iter().all(|&v| {
                let fresh = seen >> v & 1 == 0;
                seen |= 1 << v;
                fresh
            })
        };
        if !injective {
            return false;
        }
        match self.kind {
            ContainmentKind::Subgraph => h.edges().iter().all(|&(a, b)| g.has_edge(self.vertex_map[a], self.vertex_map[b])),
            ContainmentKind::Induced => (0..h.n()).all(|a| {
                (a + 1..h.n()).all(|b| h.has_edge(a, b) == g.has_edge(self.vertex_map[a], self.vertex_map[b]))
            }),
            ContainmentKind::Minor => self.verify_minor(h, g),
            ContainmentKind::TopologicalMinor => self.verify_topological(h, g),
        }
    }

    fn verify_minor(&self, h: &Graph, g: &Graph) -> bool {
        if self.branch_sets.len() != h.n() {
            return false;
        }
        let mut used = 0u64;
        let mut masks = Vec::with_capacity(h.n());
        for (i, set) in self.branch_sets.iter().enumerate() {
            let mut mask = 0u64;
            for &v in set {
                if v >= g.n() || (used | mask) >> v & 1 == 1 {
                    return false;
                }
                mask |= 1 << v;
            }
            if mask == 0 || set.iter().min() != Some(&self.vertex_map[i]) {
                return false;
            }
            if g.reach(self.vertex_map[i], mask) != mask {
                return false;
            }
            used |= mask;
            masks.push(mask);
        }
        h.edges().iter().all(|&(a, b)| Bits(masks[a]).any(|v| g.neighbors(v) & masks[b] != 0))
    }

    fn verify_topological(&self, h: &Graph, g: &Graph) -> bool {
        let edges = h.edges();
        if self.paths.len() != edges.len() {
            return false;
        }
        let mut used = 0u64;
        for &v in &self.vertex_map {
            used |= 1 << v;
        }
        for (&(a, b), path) in edges.iter().zip(&self.paths) {
            if path.len() < 2 || path[0] != self.vertex_map[a] || *path.last().unwrap() != self.vertex_map[b] {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if v >= g.n() || used >> v & 1 == 1 {
                    return false;
                }
                used |= 1 << v;
            }
        }
        true
    }
}
