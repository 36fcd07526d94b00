use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{AdversaryError, RelationFamily, RelationKind};
use crate::graph::iso::{canonical_form, find_isomorphism, CanonicalForm};
use crate::graph::{Bits, Graph};

/// Every graph obtained from `g` by one 2-edge swap: for disjoint edges `ab`,
/// `cd` with no edge among `a, b, c, d` besides them, replace them by `ac, bd`
/// or by `ad, bc`.
pub fn swap_outcomes(g: &Graph) -> Vec<Graph> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let quad = (1u64 << c) | (1u64 << d);
            if g.neighbors(a) & quad != 0 || g.neighbors(b) & quad != 0 {
                continue;
            }
            let mut base = g.clone();
            base.remove_edge(a, b);
            base.remove_edge(c, d);
            for (p, q, r, s) in [(a, c, b, d), (a, d, b, c)] {
                let mut h = base.clone();
                h.add_edge(p, q);
                h.add_edge(r, s);
                out.push(h);
            }
        }
    }
    out
}

fn path_order(g: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = Bits(g.neighbors(cur)).find(|&w| w != prev) {
        if next == start {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Empty graph against one planted `K_d`.
#[derive(Debug, Clone)]
pub struct SubgraphLb {
    n: usize,
    d: usize,
    xs: Vec<Graph>,
    ys: Vec<Graph>,
}

pub fn family_subgraphlb(n: usize, d: usize) -> Result<SubgraphLb, AdversaryError> {
    if d < 2 {
        return Err(AdversaryError::UnsupportedSize { n, reason: "clique size must be at least 2" });
    }
    if n < d {
        return Err(AdversaryError::UnsupportedSize { n, reason: "n must be at least d" });
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(AdversaryError::UnsupportedSize { n, reason: "at most 64 vertices" });
    }
    let mut y = Graph::new(n);
    for u in 0..d {
        for v in u + 1..d {
            y.add_edge(u, v);
        }
    }
    Ok(SubgraphLb { n, d, xs: vec![Graph::new(n)], ys: vec![y] })
}

fn combinations(n: usize, d: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for v in start..=n - left {
            rec(v + 1, n, left - 1, cur | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, 0, &mut out);
    out
}

impl SubgraphLb {
    fn clique_on(&self, set: u64) -> Graph {
        let mut g = Graph::new(self.n);
        for u in Bits(set) {
            for v in Bits(set).filter(|&v| v > u) {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn clique_vertices(&self, g: &Graph) -> Option<u64> {
        let touched = (0..g.n()).filter(|&v| g.degree(v) > 0).fold(0u64, |m, v| m | 1 << v);
        let ok = touched.count_ones() as usize == self.d
            && g.m() == self.d * (self.d - 1) / 2
            && Bits(touched).all(|v| g.neighbors(v) == touched & !(1 << v));
        ok.then_some(touched)
    }
}

impl RelationFamily for SubgraphLb {
    fn name(&self) -> String {
        format!("subgraphlb(d={})", self.d)
    }
    fn n(&self) -> usize {
        self.n
    }
    fn x_representatives(&self) -> &[Graph] {
        &self.xs
    }
    fn y_representatives(&self) -> &[Graph] {
        &self.ys
    }
    fn relation(&self) -> RelationKind {
        RelationKind::Total
    }
    fn is_x(&self, g: &Graph) -> bool {
        g.n() == self.n && g.m() == 0
    }
    fn is_y(&self, g: &Graph) -> bool {
        g.n() == self.n && self.clique_vertices(g).is_some()
    }
    fn related_y(&self, x: &Graph) -> Vec<Graph> {
        if !self.is_x(x) {
            return Vec::new();
        }
        combinations(self.n, self.d).into_iter().map(|s| self.clique_on(s)).collect()
    }
    fn related_x(&self, y: &Graph) -> Vec<Graph> {
        if !self.is_y(y) {
            return Vec::new();
        }
        vec![Graph::new(self.n)]
    }
    fn locate_x(&self, g: &Graph) -> Option<(usize, Vec<usize>)> {
        self.is_x(g).then(|| (0, (0..self.n).collect()))
    }
    fn locate_y(&self, g: &Graph) -> Option<(usize, Vec<usize>)> {
        let set = self.clique_vertices(g)?;
        let mut perm: Vec<usize> = Bits(set).collect();
        perm.extend(Bits(g.vertex_mask() & !set));
        Some((0, perm))
    }
}

/// Hamiltonian paths against a cycle plus a disjoint path, both with more
/// than `n/3` vertices.
#[derive(Debug, Clone)]
pub struct Forest {
    n: usize,
    /// Admissible cycle lengths, ascending; `ys[i]` has cycle `cycles[i]`.
    cycles: Vec<usize>,
    xs: Vec<Graph>,
    ys: Vec<Graph>,
}

/// More than a third of `n`.
fn over_third(size: usize, n: usize) -> bool {
    3 * size > n
}

pub fn family_forest(n: usize) -> Result<Forest, AdversaryError> {
    if n < 9 {
        return Err(AdversaryError::UnsupportedSize { n, reason: "the forest family needs n >= 9" });
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(AdversaryError::UnsupportedSize { n, reason: "at most 64 vertices" });
    }
    let cycles: Vec<usize> = (3..n).filter(|&c| over_third(c, n) && over_third(n - c, n)).collect();
    let ys = cycles
        .iter()
        .map(|&c| {
            let mut g = Graph::new(n);
            for v in 0..c {
                g.add_edge(v, (v + 1) % c);
            }
            for v in c..n - 1 {
                g.add_edge(v, v + 1);
            }
            g
        })
        .collect();
    Ok(Forest { n, cycles, xs: vec![Graph::path(n - 1)], ys })
}

impl Forest {
    /// Cycle length and the cycle and path in canonical walking order, if `g`
    /// is a cycle plus a disjoint path (no size constraint).
    fn split(&self, g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
        if g.n() != self.n || g.m() != self.n - 1 || g.max_degree() > 2 {
            return None;
        }
        let comps = g.components();
        if comps.len() != 2 {
            return None;
        }
        let edges_in = |c: u64| Bits(c).map(|v| g.degree(v)).sum::<usize>() / 2;
        let (cyc, path) = if edges_in(comps[0]) == comps[0].count_ones() as usize {
            (comps[0], comps[1])
        } else {
            (comps[1], comps[0])
        };
        if edges_in(cyc) != cyc.count_ones() as usize || edges_in(path) + 1 != path.count_ones() as usize {
            return None;
        }
        let cs = cyc.trailing_zeros() as usize;
        let mut cycle = vec![cs];
        let first = Bits(g.neighbors(cs)).next()?;
        let (mut prev, mut cur) = (cs, first);
        while cur != cs {
            cycle.push(cur);
            let next = Bits(g.neighbors(cur)).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        let ends: Vec<usize> = Bits(path).filter(|&v| g.degree(v) <= 1).collect();
        let path_order = path_order(g, ends[0]);
        Some((cycle, path_order))
    }
}

impl RelationFamily for Forest {
    fn name(&self) -> String {
        String::from("forest")
    }
    fn n(&self) -> usize {
        self.n
    }
    fn x_representatives(&self) -> &[Graph] {
        &self.xs
    }
    fn y_representatives(&self) -> &[Graph] {
        &self.ys
    }
    fn relation(&self) -> RelationKind {
        RelationKind::EdgeSwap
    }
    fn is_x(&self, g: &Graph) -> bool {
        g.n() == self.n && g.m() == self.n - 1 && g.max_degree() <= 2 && g.is_connected()
    }
    fn is_y(&self, g: &Graph) -> bool {
        self.split(g).is_some_and(|(c, p)| over_third(c.len(), self.n) && over_third(p.len(), self.n))
    }
    fn related_y(&self, x: &Graph) -> Vec<Graph> {
        swap_outcomes(x).into_iter().filter(|y| self.is_y(y)).collect()
    }
    fn related_x(&self, y: &Graph) -> Vec<Graph> {
        swap_outcomes(y).into_iter().filter(|x| self.is_x(x)).collect()
    }
    fn locate_x(&self, g: &Graph) -> Option<(usize, Vec<usize>)> {
        if !self.is_x(g) {
            return None;
        }
        let start = (0..self.n).find(|&v| g.degree(v) == 1)?;
        Some((0, path_order(g, start)))
    }
    fn locate_y(&self, g: &Graph) -> Option<(usize, Vec<usize>)> {
        let (cycle, path) = self.split(g)?;
        let idx = self.cycles.iter().position(|&c| c == cycle.len())?;
        if !over_third(path.len(), self.n) {
            return None;
        }
        let mut perm = cycle;
        perm.extend(path);
        Some((idx, perm))
    }
}

/// The general construction: `G` minus an edge `uv` with long paths hung at
/// `u` and `v`, against `G` with `uv` subdivided plus a disjoint long path.
///
/// X-representatives: `a` new path vertices at `u` and `b` at `v`, with
/// `a + 1 > n/3` and `b + 1 > n/3` (each hanging path counted with its
/// attachment vertex). Y-representatives: `uv` subdivided `s` times and a
/// disjoint path on `p` vertices, with `k + s > n/3` and `p > n/3`. With
/// `G = C_3` both sets coincide with the forest family.
#[derive(Debug, Clone)]
pub struct MainLb {
    n: usize,
    g: Graph,
    edge: (usize, usize),
    xs: Vec<Graph>,
    ys: Vec<Graph>,
    x_forms: Vec<CanonicalForm>,
    y_forms: Vec<CanonicalForm>,
}

pub fn family_mainlb(g: &Graph, u: usize, v: usize, n: usize) -> Result<MainLb, AdversaryError> {
    if !g.has_edge(u, v) {
        return Err(crate::error::GraphError::InvalidEdge { u, v }.into());
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(AdversaryError::UnsupportedSize { n, reason: "at most 64 vertices" });
    }
    let k = g.n();
    let mut xs: Vec<Graph> = Vec::new();
    let mut x_forms = Vec::new();
    if n > k + 1 {
        for a in 1..n - k {
            let b = n - k - a;
            if b == 0 || !over_third(a + 1, n) || !over_third(b + 1, n) {
                continue;
            }
            let x = crate::minor_theory::replace_edge_with_paths(g, u, v, a, b)?;
            let f = canonical_form(&x);
            if !x_forms.contains(&f) {
                x_forms.push(f);
                xs.push(x);
            }
        }
    }
    let mut ys: Vec<Graph> = Vec::new();
    let mut y_forms = Vec::new();
    for s in 0..n.saturating_sub(k) {
        let p = n - k - s;
        if p < 2 || !over_third(k + s, n) || !over_third(p, n) {
            continue;
        }
        let mut y = g.clone();
        let (mut a, b) = (u, v);
        y.remove_edge(a, b);
        for _ in 0..s {
            let w = y.add_vertex()?;
            y.add_edge(a, w);
            a = w;
        }
        y.add_edge(a, b);
        let tail = Graph::path(p - 1);
        let y = y.disjoint_union(&tail)?;
        let f = canonical_form(&y);
        if !y_forms.contains(&f) {
            y_forms.push(f);
            ys.push(y);
        }
    }
    if xs.is_empty() || ys.is_empty() {
        return Err(AdversaryError::UnsupportedSize { n, reason: "n too small for both parts to exceed n/3" });
    }
    Ok(MainLb { n, g: g.clone(), edge: (u, v), xs, ys, x_forms, y_forms })
}

impl MainLb {
    fn locate(reps: &[Graph], forms: &[CanonicalForm], g: &Graph) -> Option<(usize, Vec<usize>)> {
        if reps.first().is_none_or(|r| r.m() != g.m() || r.n() != g.n()) {
            return None;
        }
        let f = canonical_form(g);
        let idx = forms.iter().position(|x| *x == f)?;
        find_isomorphism(&reps[idx], g).map(|perm| (idx, perm))
    }

    fn member(reps: &[Graph], forms: &[CanonicalForm], g: &Graph) -> bool {
        reps.first().is_some_and(|r| r.m() == g.m() && r.n() == g.n()) && forms.contains(&canonical_form(g))
    }

    pub fn base_graph(&self) -> &Graph {
        &self.g
    }

    pub fn edge(&self) -> (usize, usize) {
        self.edge
    }
}

impl RelationFamily for MainLb {
    fn name(&self) -> String {
        format!("mainlb(edge={:?})", self.edge)
    }
    fn n(&self) -> usize {
        self.n
    }
    fn x_representatives(&self) -> &[Graph] {
        &self.xs
    }
    fn y_representatives(&self) -> &[Graph] {
        &self.ys
    }
    fn relation(&self) -> RelationKind {
        RelationKind::EdgeSwap
    }
    fn is_x(&self, g: &Graph) -> bool {
        Self::member(&self.xs, &self.x_forms, g)
    }
    fn is_y(&self, g: &Graph) -> bool {
        Self::member(&self.ys, &self.y_forms, g)
    }
    fn related_y(&self, x: &Graph) -> Vec<Graph> {
        swap_outcomes(x).into_iter().filter(|y| self.is_y(y)).collect()
    }
    fn related_x(&self, y: &Graph) -> Vec<Graph> {
        swap_outcomes(y).into_iter().filter(|x| self.is_x(x)).collect()
    }
    fn locate_x(&self, g: &Graph) -> Option<(usize, Vec<usize>)> {
        Self::locate(&self.xs, &self.x_forms, g)
    }
    fn locate_y(&self, g: &Graph) -> Option<(usize, Vec<usize>)> {
        Self::locate(&self.ys, &self.y_forms, g)
    }
}
