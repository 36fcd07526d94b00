//! Canonical labeling by partition refinement and individualization, with
//! twin and automorphism pruning of the search tree.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{pair_count, pair_index, Bits, Graph};

/// Byte string identifying a graph up to isomorphism: the vertex count followed
/// by the canonically relabeled adjacency bits packed in [`pair_index`] order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hexadecimal rendering.
    pub fn to_hex(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::with_capacity(2 * self.0.len());
        for b in &self.0 {
            let _ = write!(s, "{b:02x}");
        }
        s
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// A canonical ordering of the vertices: `order[p]` is the vertex placed at
/// position `p`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub order: Vec<usize>,
    pub form: CanonicalForm,
}

impl Labeling {
    /// The graph relabeled so that `order[p]` becomes vertex `p`.
    pub fn apply(&self, g: &Graph) -> Graph {
        let mut perm = vec![0; g.n()];
        for (p, &v) in self.order.iter().enumerate() {
            perm[v] = p;
        }
        g.permuted(&perm)
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let mut search = Search { g, best: None, first: None, autos: Vec::new() };
    let start = if g.n() == 0 { Vec::new() } else { initial_cells(g) };
    search.run(start, &mut Vec::new());
    let (cert, order) = search.best.unwrap_or_default();
    Labeling { order, form: pack(g.n(), &cert) }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

/// `g` relabeled into its canonical representative.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).apply(g)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && a.degree_sequence() == b.degree_sequence() && canonical_form(a) == canonical_form(b)
}

/// An isomorphism `phi` from `a` onto `b` (`a.has_edge(u,v) == b.has_edge(phi[u], phi[v])`).
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() || a.degree_sequence() != b.degree_sequence() {
        return None;
    }
    let la = canonical_labeling(a);
    let lb = canonical_labeling(b);
    if la.form != lb.form {
        return None;
    }
    let mut phi = vec![0; a.n()];
    for (p, &v) in la.order.iter().enumerate() {
        phi[v] = lb.order[p];
    }
    Some(phi)
}

fn initial_cells(g: &Graph) -> Vec<u64> {
    let mut by_degree: Vec<(usize, u64)> = Vec::new();
    for v in 0..g.n() {
        let d = g.degree(v);
        match by_degree.iter_mut().find(|(deg, _)| *deg == d) {
            Some((_, mask)) => *mask |= 1 << v,
            None => by_degree.push((d, 1 << v)),
        }
    }
    by_degree.sort_unstable_by_key(|&(d, _)| d);
    by_degree.into_iter().map(|(_, m)| m).collect()
}

/// Splits cells until every vertex of a cell sees the same number of
/// neighbors in every cell. Split order depends only on the counts, so the
/// result commutes with relabeling.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    'outer: loop {
        for i in 0..cells.len() {
            let c = cells[i];
            if c.count_ones() < 2 {
                continue;
            }
            let mut sigs: Vec<(Vec<u8>, usize)> = Bits(c)
                .map(|v| (cells.iter().map(|&d| (g.neighbors(v) & d).count_ones() as u8).collect(), v))
                .collect();
            sigs.sort_unstable();
            if sigs[0].0 == sigs[sigs.len() - 1].0 {
                continue;
            }
            let mut groups: Vec<u64> = Vec::new();
            let mut prev: Option<&Vec<u8>> = None;
            for (sig, v) in &sigs {
                if prev != Some(sig) {
                    groups.push(0);
                    prev = Some(sig);
                }
                *groups.last_mut().unwrap() |= 1 << v;
            }
            cells.splice(i..=i, groups);
            continue 'outer;
        }
        return;
    }
}

fn certificate(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; g.n()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| Bits(g.neighbors(v)).fold(0u64, |row, w| row | 1 << pos[w]))
        .collect()
}

fn pack(n: usize, rows: &[u64]) -> CanonicalForm {
    let bits = pair_count(n);
    let mut out = vec![0u8; 1 + bits.div_ceil(8)];
    out[0] = n as u8;
    for (v, row) in rows.iter().enumerate() {
        for u in Bits(row & ((1u64 << v) - 1)) {
            let i = pair_index(u, v);
            out[1 + i / 8] |= 0x80 >> (i % 8);
        }
    }
    CanonicalForm(out)
}

type Leaf = (Vec<u64>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    first: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u64>, fixed: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            self.leaf(order);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cells[target]) {
            if explored.iter().any(|&u| self.twins(u, v)) || self.same_orbit(&explored, v, fixed) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1u64 << v);
            next.push(cells[target] & !(1u64 << v));
            next.extend_from_slice(&cells[target + 1..]);
            fixed.push(v);
            self.run(next, fixed);
            fixed.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        if let Some((c, o)) = &self.first {
            if *c == cert {
                self.autos.push(automorphism(o, &order));
            }
        } else {
            self.first = Some((cert.clone(), order.clone()));
        }
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((c, o)) => match cert.cmp(c) {
                Ordering::Greater => self.best = Some((cert, order)),
                Ordering::Equal => {
                    let a = automorphism(o, &order);
                    self.autos.push(a);
                }
                Ordering::Less => {}
            },
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !((1u64 << u) | (1u64 << v));
        self.g.neighbors(u) & mask == self.g.neighbors(v) & mask
    }

    /// Is `v` in the orbit of an explored vertex under the automorphisms found
    /// so far that fix every individualized vertex?
    fn same_orbit(&self, explored: &[usize], v: usize, fixed: &[usize]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if fixed.iter().all(|&f| a[f] == f) {
                any = true;
                for x in 0..n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (p, &v) in from.iter().enumerate() {
        a[v] = to[p];
    }
    a
}
