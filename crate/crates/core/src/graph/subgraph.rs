//! Subgraph and induced-subgraph search by backtracking over bitsets.

use alloc::vec;
use alloc::vec::Vec;

use super::{Bits, ContainmentKind, ContainmentWitness, Graph};
use crate::error::GraphError;
use crate::limits::Limits;

/// Returns the lexicographically smallest vertex map embedding `h` into `g`
/// (as an induced subgraph when `induced` is set), or `None`.
///
/// The cap in `limits.containment` applies to the pattern `h`; the host may
/// have up to 64 vertices.
pub fn is_subgraph(h: &Graph, g: &Graph, induced: bool, limits: &Limits) -> Result<Option<ContainmentWitness>, GraphError> {
    limits.check_containment(h.n())?;
    let kind = if induced { ContainmentKind::Induced } else { ContainmentKind::Subgraph };
    Ok(first_embedding(h, g, induced).map(|map| ContainmentWitness::mapping(kind, map)))
}

/// Counts every injective map of `h` into `g` preserving edges (and non-edges
/// when `induced`). Used by tests and small-case cross-checks.
pub fn count_embeddings(h: &Graph, g: &Graph, induced: bool) -> u64 {
    let mut count = 0u64;
    let mut s = Search::new(h, g, induced);
    s.walk(0, &mut |_| {
        count += 1;
        false
    });
    count
}

pub(crate) fn first_embedding(h: &Graph, g: &Graph, induced: bool) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.m() > g.m() {
        return None;
    }
    let mut found = None;
    let mut s = Search::new(h, g, induced);
    s.walk(0, &mut |map| {
        found = Some(map.to_vec());
        true
    });
    found
}

struct Search<'a> {
    h: &'a Graph,
    g: &'a Graph,
    induced: bool,
    map: Vec<usize>,
    used: u64,
    /// G-vertices allowed for each H-vertex by degree alone.
    allowed: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(h: &'a Graph, g: &'a Graph, induced: bool) -> Self {
        let allowed = (0..h.n())
            .map(|a| {
                let d = h.degree(a);
                (0..g.n()).filter(|&v| g.degree(v) >= d).fold(0u64, |m, v| m | 1 << v)
            })
            .collect();
        Search { h, g, induced, map: vec![usize::MAX; h.n()], used: 0, allowed }
    }

    fn candidates(&self, a: usize) -> u64 {
        let mut c = self.allowed[a] & !self.used;
        for b in 0..self.h.n() {
            let img = self.map[b];
            if img == usize::MAX {
                continue;
            }
            if self.h.has_edge(a, b) {
                c &= self.g.neighbors(img);
            } else if self.induced {
                c &= !self.g.neighbors(img);
            }
        }
        c
    }

    /// Depth-first over H-vertices in index order; `visit` returns true to stop.
    fn walk(&mut self, a: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if a == self.h.n() {
            return visit(&self.map);
        }
        for v in Bits(self.candidates(a)) {
            self.map[a] = v;
            self.used |= 1 << v;
            // forward check: every later vertex keeps a candidate
            let ok = (a + 1..self.h.n()).all(|b| self.candidates(b) != 0);
            if ok && self.walk(a + 1, visit) {
                return true;
            }
            self.used &= !(1 << v);
            self.map[a] = usize::MAX;
        }
        false
    }
}
