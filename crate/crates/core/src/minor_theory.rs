//! Internal and external edges, the β invariant, and the structural facts
//! about it used by the lower-bound constructions.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashSet;

use crate::error::GraphError;
use crate::graph::iso::{canonical_form, canonical_graph};
use crate::graph::subgraph::is_subgraph;
use crate::graph::topological::is_topological_minor;
use crate::graph::{Bits, Graph};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Internal,
    External,
}

/// Label of every edge plus the maximal dangling paths that witness the
/// external ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    /// Edges `(u, v)` with `u < v` in lexicographic order, with their kind.
    pub labels: Vec<((usize, usize), EdgeKind)>,
    /// Each path starts at a degree-one vertex and continues through
    /// degree-two vertices; it ends at the first vertex of another degree.
    pub dangling_paths: Vec<Vec<usize>>,
}

impl EdgeClassification {
    pub fn internal_edges(&self) -> Vec<(usize, usize)> {
        self.edges_of(EdgeKind::Internal)
    }

    pub fn external_edges(&self) -> Vec<(usize, usize)> {
        self.edges_of(EdgeKind::External)
    }

    fn edges_of(&self, kind: EdgeKind) -> Vec<(usize, usize)> {
        self.labels.iter().filter(|(_, k)| *k == kind).map(|(e, _)| *e).collect()
    }

    pub fn kind(&self, u: usize, v: usize) -> Option<EdgeKind> {
        let e = if u < v { (u, v) } else { (v, u) };
        self.labels.iter().find(|(f, _)| *f == e).map(|(_, k)| *k)
    }
}

/// Bridges of `g` as `(u, v)` with `u < v`.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    // iterative lowpoint DFS
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, unexplored neighbors)
        let mut stack: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, g.neighbors(root))];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 != 0 {
                let w = top.2.trailing_zeros() as usize;
                top.2 &= top.2 - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, g.neighbors(w)));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Maximal dangling paths: from every degree-one vertex, walk through
/// degree-two vertices and stop at the first vertex of any other degree.
pub fn dangling_paths(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for start in 0..g.n() {
        if g.degree(start) != 1 {
            continue;
        }
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = Bits(g.neighbors(cur)).find(|&w| w != prev);
            let Some(next) = next else { break };
            path.push(next);
            if g.degree(next) != 2 {
                break;
            }
            prev = cur;
            cur = next;
        }
        out.push(path);
    }
    out
}

/// Labels every edge. An edge is internal iff it lies on a cycle (it is not a
/// bridge) or is a bridge with a vertex of degree at least 3 on both sides.
/// The result is checked against the dangling-path characterization; a
/// disagreement panics, since it means one of the two is wrong.
pub fn classify_edges(g: &Graph) -> EdgeClassification {
    let bridge_set: HashSet<(usize, usize)> = bridges(g).into_iter().collect();
    let heavy = (0..g.n()).filter(|&v| g.degree(v) >= 3).fold(0u64, |m, v| m | 1 << v);
    let mut labels = Vec::with_capacity(g.m());
    for (u, v) in g.edges() {
        let kind = if !bridge_set.contains(&(u, v)) {
            EdgeKind::Internal
        } else {
            let mut cut = g.clone();
            cut.remove_edge(u, v);
            let side_u = cut.reach(u, cut.vertex_mask());
            let side_v = cut.reach(v, cut.vertex_mask());
            if side_u & heavy != 0 && side_v & heavy != 0 {
                EdgeKind::Internal
            } else {
                EdgeKind::External
            }
        };
        labels.push(((u, v), kind));
    }
    let dangling = dangling_paths(g);
    let mut on_dangling: HashSet<(usize, usize)> = HashSet::new();
    for p in &dangling {
        for w in p.windows(2) {
            on_dangling.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    for (e, kind) in &labels {
        assert_eq!(
            *kind == EdgeKind::External,
            on_dangling.contains(e),
            "edge classifications disagree on {e:?} in {g:?}"
        );
    }
    EdgeClassification { labels, dangling_paths: dangling }
}

/// Number of internal edges.
pub fn beta(g: &Graph) -> usize {
    classify_edges(g).labels.iter().filter(|(_, k)| *k == EdgeKind::Internal).count()
}

/// Deletes `{u, v}` and hangs a fresh path with `p` edges from `u` and one with
/// `q` edges from `v`. New vertices are numbered from `n`, the `u`-path first.
pub fn replace_edge_with_paths(g: &Graph, u: usize, v: usize, p: usize, q: usize) -> Result<Graph, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::InvalidEdge { u, v });
    }
    if p == 0 || q == 0 {
        return Err(GraphError::Unsupported("replacement paths need at least one edge"));
    }
    let mut h = g.clone();
    h.remove_edge(u, v);
    for (start, len) in [(u, p), (v, q)] {
        let mut prev = start;
        for _ in 0..len {
            let w = h.add_vertex()?;
            h.add_edge(prev, w);
            prev = w;
        }
    }
    Ok(h)
}

/// Per component: a tree with at most one vertex of degree >= 3.
pub fn is_star_subdivision_family(g: &Graph) -> bool {
    g.components().into_iter().all(|c| {
        let edges: usize = Bits(c).map(|v| g.degree(v)).sum::<usize>() / 2;
        let heavy = Bits(c).filter(|&v| g.degree(v) >= 3).count();
        edges + 1 == c.count_ones() as usize && heavy <= 1
    })
}

/// Per component: a path or a subdivided claw (a tree with maximum degree 3
/// and at most one vertex of degree 3).
pub fn is_path_or_claw_family(g: &Graph) -> bool {
    g.components().into_iter().all(|c| {
        let edges: usize = Bits(c).map(|v| g.degree(v)).sum::<usize>() / 2;
        let max = Bits(c).map(|v| g.degree(v)).max().unwrap_or(0);
        let heavy = Bits(c).filter(|&v| g.degree(v) >= 3).count();
        edges + 1 == c.count_ones() as usize && max <= 3 && heavy <= 1
    })
}

/// Vertex cover number of the k-path.
pub fn vc_path(k: usize) -> usize {
    k.div_ceil(2)
}

/// Vertex cover number of the claw with legs of `d1`, `d2`, `d3` edges.
pub fn vc_claw(d1: usize, d2: usize, d3: usize) -> usize {
    let d = [d1, d2, d3];
    if d.iter().all(|x| x % 2 == 0) {
        (d1 + d2 + d3) / 2
    } else {
        1 + d.iter().map(|&x| (x - 1).div_ceil(2)).sum::<usize>()
    }
}

/// Subdivides every edge of `h` exactly `s` times.
pub fn subdivide_all(h: &Graph, s: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::try_new(h.n())?;
    for (u, v) in h.edges() {
        let mut prev = u;
        for _ in 0..s {
            let w = g.add_vertex()?;
            g.add_edge(prev, w);
            prev = w;
        }
        g.add_edge(prev, v);
    }
    Ok(g)
}

/// A subdivision of `h` that does not contain `h` as a subgraph: the smallest
/// `s <= max_s` for which subdividing every edge `s` times works. `None` when
/// no such `s` exists in range (always the case when `β(h) = 0`).
pub fn subdivision_without_copy(h: &Graph, max_s: usize, limits: &Limits) -> Result<Option<(usize, Graph)>, GraphError> {
    for s in 1..=max_s {
        let g = subdivide_all(h, s)?;
        if is_subgraph(h, &g, false, limits)?.is_none() {
            return Ok(Some((s, g)));
        }
    }
    Ok(None)
}

/// Forbidden topological minors `S` and forbidden subgraphs `B`, stored
/// canonically and deduplicated.
#[derive(Debug, Clone, Default)]
pub struct ForbiddenFamily {
    pub topological: Vec<Graph>,
    pub subgraphs: Vec<Graph>,
}

impl ForbiddenFamily {
    pub fn new(topological: &[Graph], subgraphs: &[Graph]) -> Self {
        fn dedup(gs: &[Graph]) -> Vec<Graph> {
            let mut seen = HashSet::new();
            gs.iter().filter(|g| seen.insert(canonical_form(g))).map(canonical_graph).collect()
        }
        ForbiddenFamily { topological: dedup(topological), subgraphs: dedup(subgraphs) }
    }

    /// Does `g` avoid every member (as topological minor or subgraph)?
    pub fn avoided_by(&self, g: &Graph, limits: &Limits) -> Result<bool, GraphError> {
        for s in &self.topological {
            if is_topological_minor(s, g, limits)?.is_some() {
                return Ok(false);
            }
        }
        for b in &self.subgraphs {
            if is_subgraph(b, g, false, limits)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MainlbVerdict {
    /// Every replacement with path lengths up to the bound avoids the family.
    SuitableUpTo(usize),
    /// The first `(p, q)` in lexicographic order whose replacement contains a
    /// forbidden graph.
    Unsuitable { p: usize, q: usize },
}

/// Tests all replacements of `{u, v}` by paths of lengths `1..=lmax`. This is
/// a bounded experiment, not a proof of suitability for all lengths.
pub fn check_mainlb_edge(
    family: &ForbiddenFamily,
    g: &Graph,
    u: usize,
    v: usize,
    lmax: usize,
    limits: &Limits,
) -> Result<MainlbVerdict, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::InvalidEdge { u, v });
    }
    if lmax == 0 {
        return Err(GraphError::Unsupported("lmax must be at least 1"));
    }
    limits.check_containment(g.n() + 2 * lmax)?;
    for p in 1..=lmax {
        for q in 1..=lmax {
            let r = replace_edge_with_paths(g, u, v, p, q)?;
            if !family.avoided_by(&r, limits)? {
                return Ok(MainlbVerdict::Unsuitable { p, q });
            }
        }
    }
    Ok(MainlbVerdict::SuitableUpTo(lmax))
}

/// Deletes every degree-one vertex that is not an endpoint of an isolated
/// edge. Returns the smaller graph and, for each kept vertex, its index in `h`.
pub fn strip_dangling_leaves(h: &Graph) -> (Graph, Vec<usize>) {
    let keep = (0..h.n())
        .filter(|&v| {
            if h.degree(v) != 1 {
                return true;
            }
            let w = h.neighbors(v).trailing_zeros() as usize;
            h.degree(w) == 1
        })
        .fold(0u64, |m, v| m | 1 << v);
    (h.induced(keep), Bits(keep).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_edge_is_external() {
        let g = Graph::path(1);
        assert_eq!(classify_edges(&g).external_edges(), vec![(0, 1)]);
        assert_eq!(beta(&Graph::new(0)), 0);
    }

    #[test]
    fn bridges_of_two_triangles() {
        let mut g = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)] {
            g.add_edge(u, v);
        }
        assert_eq!(bridges(&g), vec![(2, 3)]);
        assert_eq!(beta(&g), 7);
    }
}
