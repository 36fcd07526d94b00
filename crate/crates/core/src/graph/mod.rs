//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! adjacency row per vertex.

mod builders;
pub mod cover;
pub mod enumerate;
pub mod iso;
pub mod minor;
pub mod subgraph;
pub mod topological;
mod witness;

use alloc::vec::Vec;
use core::fmt;

pub use witness::{ContainmentKind, ContainmentWitness};

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph with vertices `0..n`.
///
/// Row `v` has bit `u` set iff `{u, v}` is an edge. Rows at or beyond `n` are
/// always zero, so the derived `Eq` and `Hash` compare labeled graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_VERTICES],
}

/// Position of the unordered pair `{u, v}` in the `C(n,2)` bit string of a
/// graph. Pairs are ordered column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
/// which is also the graph6 order, so the index does not depend on `n`.
pub fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(a != b);
    b * (b - 1) / 2 + a
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(i: usize) -> (usize, usize) {
    // largest b with b(b-1)/2 <= i
    let mut b = ((libm::sqrt((8 * i + 1) as f64) + 1.0) / 2.0) as usize;
    while b * (b - 1) / 2 > i {
        b -= 1;
    }
    while (b + 1) * b / 2 <= i {
        b += 1;
    }
    (i - b * (b - 1) / 2, b)
}

/// Number of vertex pairs, `C(n,2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > MAX_VERTICES`. Use [`Graph::try_new`] for untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex count above MAX_VERTICES")
    }

    pub fn try_new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, rows: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Mask with the low `n` bits set.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        Bits(self.rows[v]).collect()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge { u, v });
        }
        Ok(())
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    /// # Panics
    /// On out-of-range vertices or a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("bad edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    /// Flip the pair `{u, v}` (add it if absent, remove it if present).
    #[inline]
    pub fn toggle_pair(&mut self, u: usize, v: usize) {
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in Bits(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Adds a fresh isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize, GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::TooLarge { n: self.n + 1, cap: MAX_VERTICES });
        }
        self.n += 1;
        Ok(self.n - 1)
    }

    /// Removes vertex `v`; vertices above it shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep = self.vertex_mask() & !(1u64 << v);
        Ok(self.induced(keep))
    }

    /// Subgraph induced by the vertex set `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = Bits(mask).collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            let mut row = 0u64;
            for w in Bits(self.rows[u]) {
                row |= 1 << perm[w];
            }
            g.rows[perm[u]] = row;
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::try_new(n)?;
        g.rows[..self.n].copy_from_slice(&self.rows[..self.n]);
        for v in 0..other.n {
            g.rows[self.n + v] = other.rows[v] << self.n;
        }
        Ok(g)
    }

    /// Replaces the edge `{u, v}` by a path `u - w - v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        let w = g.add_vertex()?;
        g.remove_edge(u, v);
        g.add_edge(u, w);
        g.add_edge(w, v);
        Ok(g)
    }

    /// Merges the endpoints of `{u, v}` into the smaller index; the larger index
    /// is removed and later vertices shift down.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_edge(u, v)?;
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        let merged = (g.rows[keep] | g.rows[gone]) & !(1 << keep) & !(1 << gone);
        for w in Bits(g.rows[gone]) {
            g.rows[w] &= !(1 << gone);
        }
        g.rows[gone] = 0;
        for w in Bits(merged) {
            g.rows[w] |= 1 << keep;
        }
        g.rows[keep] = merged;
        g.delete_vertex(gone)
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.reach(s, self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside the vertex set `within`.
    pub fn reach(&self, s: usize, within: u64) -> u64 {
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// The adjacency bit string as a mask indexed by [`pair_index`]. Only
    /// defined for `n <= 11`, where `C(n,2) <= 64`.
    pub fn to_mask(&self) -> Option<u64> {
        if self.n > 11 {
            return None;
        }
        let mut mask = 0u64;
        for (u, v) in self.edges() {
            mask |= 1 << pair_index(u, v);
        }
        Some(mask)
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Graph, GraphError> {
        if n > 11 {
            return Err(GraphError::TooLarge { n, cap: 11 });
        }
        let mut g = Graph::new(n);
        for i in Bits(mask) {
            let (u, v) = pair_from_index(i);
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
