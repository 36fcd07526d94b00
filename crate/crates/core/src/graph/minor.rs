//! Minor containment, two ways: a branch-set model search and the closure of
//! the host under single edge deletions, edge contractions and isolated-vertex
//! deletions.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use super::iso::{canonical_form, CanonicalForm};
use super::{Bits, ContainmentKind, ContainmentWitness, Graph};
use crate::error::GraphError;
use crate::limits::Limits;

/// Searches for disjoint connected branch sets `B_h` of `g`, one per vertex of
/// `h`, with an edge of `g` between `B_a` and `B_b` for every edge `ab` of `h`.
pub fn is_minor(h: &Graph, g: &Graph, limits: &Limits) -> Result<Option<ContainmentWitness>, GraphError> {
    limits.check_containment(g.n())?;
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(None);
    }
    let mut subsets = connected_subsets(g, g.vertex_mask());
    subsets.sort_unstable_by_key(|&s| (s.count_ones(), s));
    let order = bfs_order(h);
    let mut search = BranchSearch { h, g, order: &order, subsets: &subsets, sets: vec![0; h.n()] };
    if !search.assign(0, 0) {
        return Ok(None);
    }
    let branch_sets: Vec<Vec<usize>> = search.sets.iter().map(|&m| Bits(m).collect()).collect();
    let vertex_map = search.sets.iter().map(|m| m.trailing_zeros() as usize).collect();
    Ok(Some(ContainmentWitness { kind: ContainmentKind::Minor, vertex_map, branch_sets, paths: Vec::new() }))
}

/// H-vertices in breadth-first order, component by component, so that every
/// vertex after a component's root has an earlier neighbor.
fn bfs_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut seen = 0u64;
    for s in 0..h.n() {
        if seen >> s & 1 == 1 {
            continue;
        }
        seen |= 1 << s;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for w in Bits(h.neighbors(v) & !seen) {
                seen |= 1 << w;
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

/// Every nonempty connected vertex set inside `avail`, each exactly once
/// (enumeration by exclusive extension from the smallest vertex).
pub fn connected_subsets(g: &Graph, avail: u64) -> Vec<u64> {
    fn extend(g: &Graph, sub: u64, ext: u64, closed: u64, above: u64, out: &mut Vec<u64>) {
        out.push(sub);
        let mut ext = ext;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = g.neighbors(w) & above & !closed;
            extend(g, sub | 1 << w, ext | exclusive, closed | g.neighbors(w) | 1 << w, above, out);
        }
    }
    let mut out = Vec::new();
    for s in Bits(avail) {
        let above = if s == 63 { 0 } else { avail & !((2u64 << s) - 1) };
        extend(g, 1 << s, g.neighbors(s) & above, g.neighbors(s) | 1 << s, above, &mut out);
    }
    out
}

struct BranchSearch<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: &'a [usize],
    subsets: &'a [u64],
    sets: Vec<u64>,
}

impl BranchSearch<'_> {
    fn neighborhood(&self, set: u64) -> u64 {
        Bits(set).fold(0, |acc, v| acc | self.g.neighbors(v)) & !set
    }

    fn assign(&mut self, i: usize, used: u64) -> bool {
        if i == self.order.len() {
            return true;
        }
        let a = self.order[i];
        let free = self.g.vertex_mask() & !used;
        let remaining = (self.order.len() - i - 1) as u32;
        let need: Vec<usize> = Bits(self.h.neighbors(a)).filter(|&b| self.sets[b] != 0).collect();
        for &s in self.subsets {
            if s & used != 0 {
                continue;
            }
            if (free & !s).count_ones() < remaining {
                // subsets are sorted by size, so every later one is too big
                break;
            }
            // an isolated H-vertex only ever needs one G-vertex
            if self.h.degree(a) == 0 && s.count_ones() > 1 {
                break;
            }
            let ns = self.neighborhood(s);
            if need.iter().any(|&b| ns & self.sets[b] == 0) {
                continue;
            }
            self.sets[a] = s;
            let rest = free & !s;
            let feasible = self.order[..=i].iter().all(|&b| {
                let open = Bits(self.h.neighbors(b)).any(|c| self.sets[c] == 0);
                !open || self.neighborhood(self.sets[b]) & rest != 0
            });
            if feasible && self.assign(i + 1, used | s) {
                return true;
            }
            self.sets[a] = 0;
        }
        false
    }
}

/// Memoized deletion/contraction closure. Each isomorphism class of host graph
/// is expanded once; its set of minors is kept as a bitset over class ids.
pub struct MinorClosure {
    limits: Limits,
    ids: HashMap<CanonicalForm, usize>,
    closures: Vec<Option<Vec<u64>>>,
}

impl MinorClosure {
    pub fn new(limits: Limits) -> Self {
        MinorClosure { limits, ids: HashMap::new(), closures: Vec::new() }
    }

    /// Is `h` a minor of `g`?
    pub fn contains(&mut self, h: &Graph, g: &Graph) -> Result<bool, GraphError> {
        self.limits.check_closure(g.n())?;
        let gid = self.expand(g);
        let Some(&hid) = self.ids.get(&canonical_form(h)) else {
            return Ok(false);
        };
        let set = self.closures[gid].as_ref().expect("expanded");
        Ok(set.get(hid / 64).is_some_and(|w| w >> (hid % 64) & 1 == 1))
    }

    /// Number of isomorphism classes among the minors of `g` (including `g`).
    pub fn minor_count(&mut self, g: &Graph) -> Result<usize, GraphError> {
        self.limits.check_closure(g.n())?;
        let gid = self.expand(g);
        Ok(self.closures[gid].as_ref().expect("expanded").iter().map(|w| w.count_ones() as usize).sum())
    }

    fn id(&mut self, form: CanonicalForm) -> (usize, bool) {
        if let Some(&id) = self.ids.get(&form) {
            return (id, false);
        }
        let id = self.closures.len();
        self.ids.insert(form, id);
        self.closures.push(None);
        (id, true)
    }

    fn expand(&mut self, g: &Graph) -> usize {
        let (id, _) = self.id(canonical_form(g));
        if self.closures[id].is_some() {
            return id;
        }
        let mut set: Vec<u64> = Vec::new();
        let mut children: Vec<Graph> = Vec::new();
        for (u, v) in g.edges() {
            let mut d = g.clone();
            d.remove_edge(u, v);
            children.push(d);
            children.push(g.contract_edge(u, v).expect("edge of g"));
        }
        for v in 0..g.n() {
            if g.degree(v) == 0 {
                children.push(g.delete_vertex(v).expect("vertex of g"));
            }
        }
        for child in &children {
            let cid = self.expand(child);
            let cset = self.closures[cid].as_ref().expect("expanded");
            if set.len() < cset.len() {
                set.resize(cset.len(), 0);
            }
            for (w, c) in set.iter_mut().zip(cset) {
                *w |= c;
            }
        }
        if set.len() <= id / 64 {
            set.resize(id / 64 + 1, 0);
        }
        set[id / 64] |= 1 << (id % 64);
        self.closures[id] = Some(set);
        id
    }
}

/// Strategy (b) as a one-shot call.
pub fn is_minor_by_closure(h: &Graph, g: &Graph, limits: &Limits) -> Result<bool, GraphError> {
    MinorClosure::new(*limits).contains(h, g)
}
