//! Topological minors: branch-vertex maps plus internally disjoint paths.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashSet;

use super::iso::canonical_form;
use super::{Bits, ContainmentKind, ContainmentWitness, Graph, MAX_VERTICES};
use crate::error::GraphError;
use crate::limits::Limits;

/// Finds a subdivision of `h` inside `g`. Branch maps are tried in
/// lexicographic order; the first one that admits a routing is returned.
pub fn is_topological_minor(h: &Graph, g: &Graph, limits: &Limits) -> Result<Option<ContainmentWitness>, GraphError> {
    limits.check_containment(g.n())?;
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(None);
    }
    let mut s = Router { h, g, edges: h.edges(), map: vec![usize::MAX; h.n()], paths: Vec::new() };
    if !s.place(0, 0) {
        return Ok(None);
    }
    Ok(Some(ContainmentWitness {
        kind: ContainmentKind::TopologicalMinor,
        vertex_map: s.map,
        branch_sets: Vec::new(),
        paths: s.paths,
    }))
}

struct Router<'a> {
    h: &'a Graph,
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    map: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl Router<'_> {
    fn place(&mut self, a: usize, used: u64) -> bool {
        if a == self.h.n() {
            return self.route(0, used);
        }
        let d = self.h.degree(a);
        for v in Bits(self.g.vertex_mask() & !used) {
            if self.g.degree(v) < d {
                continue;
            }
            self.map[a] = v;
            if self.place(a + 1, used | 1 << v) {
                return true;
            }
        }
        self.map[a] = usize::MAX;
        false
    }

    fn route(&mut self, j: usize, used: u64) -> bool {
        if j == self.edges.len() {
            return true;
        }
        let (a, b) = self.edges[j];
        let (s, t) = (self.map[a], self.map[b]);
        if self.g.has_edge(s, t) {
            // the direct edge uses no interior vertex, so it dominates any other route
            self.paths.push(vec![s, t]);
            if self.route(j + 1, used) {
                return true;
            }
            self.paths.pop();
            return false;
        }
        let free = self.g.vertex_mask() & !used;
        let mut path = vec![s];
        self.extend(&mut path, t, free, j)
    }

    fn extend(&mut self, path: &mut Vec<usize>, t: usize, free: u64, j: usize) -> bool {
        let cur = *path.last().unwrap();
        let nbrs = self.g.neighbors(cur);
        if path.len() > 1 && nbrs >> t & 1 == 1 {
            path.push(t);
            self.paths.push(path.clone());
            let interior = path[1..path.len() - 1].iter().fold(0u64, |m, &v| m | 1 << v);
            let used = self.g.vertex_mask() & !free | interior;
            let done = self.route(j + 1, used);
            if done {
                return true;
            }
            self.paths.pop();
            path.pop();
        }
        for w in Bits(nbrs & free) {
            let rest = free & !(1u64 << w);
            // t must stay reachable from w through unused vertices
            if self.g.reach(w, rest | 1 << w | 1 << t) >> t & 1 == 0 {
                continue;
            }
            path.push(w);
            if self.extend(path, t, rest, j) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// One representative per isomorphism class of subdivisions of `h` with at most
/// `max_extra` added vertices, grouped by number of added vertices (`h` first).
pub fn enumerate_subdivisions(h: &Graph, max_extra: usize) -> Result<Vec<Graph>, GraphError> {
    if h.n() + max_extra > MAX_VERTICES {
        return Err(GraphError::TooLarge { n: h.n() + max_extra, cap: MAX_VERTICES });
    }
    let mut out = vec![h.clone()];
    let mut level = vec![h.clone()];
    for _ in 0..max_extra {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for (u, v) in g.edges() {
                let s = g.subdivide_edge(u, v)?;
                if seen.insert(canonical_form(&s)) {
                    next.push(s);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}
