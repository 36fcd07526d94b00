use alloc::vec;
use alloc::vec::Vec;

use super::state::dangling_leaves;
use super::{ColorAssignment, DetectorError, OracleGraph, TupleState};
use crate::graph::cover::min_vertex_cover;
use crate::graph::{Bits, ContainmentKind, ContainmentWitness, Graph};
use crate::walk::paths_bucket_count;

/// Every minimum vertex cover of `h`, as ascending masks.
pub fn min_vertex_covers(h: &Graph) -> Vec<u64> {
    let k = min_vertex_cover(h).0;
    let mut out = Vec::new();
    fn rec(h: &Graph, start: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            if h.edges().iter().all(|&(a, b)| cur >> a & 1 == 1 || cur >> b & 1 == 1) {
                out.push(cur);
            }
            return;
        }
        for v in start..h.n() {
            rec(h, v + 1, left - 1, cur | 1 << v, out);
        }
    }
    rec(h, 0, k, 0, &mut out);
    out.sort_unstable();
    out
}

/// Recognition data for a pattern whose stored roles form a vertex cover of
/// the core (the pattern minus its dangling leaves, or all of it).
#[derive(Debug, Clone)]
pub(crate) struct CoverPattern {
    h: Graph,
    /// Mask of non-leaf vertices.
    core: u64,
    /// Each leaf with its label and attachment vertex.
    leaves: Vec<(usize, u8, usize)>,
    /// Candidate role sets; all have the same size.
    role_sets: Vec<Vec<usize>>,
    colored: bool,
}

impl CoverPattern {
    pub(crate) fn basic(h: &Graph) -> Self {
        let role_sets = min_vertex_covers(h).into_iter().map(|m| Bits(m).collect()).collect();
        CoverPattern { h: h.clone(), core: h.vertex_mask(), leaves: Vec::new(), role_sets, colored: false }
    }

    pub(crate) fn dangling(h: &Graph) -> Self {
        let leaf_list = dangling_leaves(h);
        let leaf_mask = leaf_list.iter().fold(0u64, |m, &v| m | 1 << v);
        let core = h.vertex_mask() & !leaf_mask;
        let leaves: Vec<(usize, u8, usize)> = leaf_list
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u8 + 1, h.neighbors(v).trailing_zeros() as usize))
            .collect();
        let kept: Vec<usize> = Bits(core).collect();
        let sub = h.induced(core);
        let anchors = Bits(core)
            .filter(|&v| h.neighbors(v) & core == 0 && h.neighbors(v) & leaf_mask != 0)
            .fold(0u64, |m, v| m | 1 << v);
        let role_sets = min_vertex_covers(&sub)
            .into_iter()
            .map(|m| {
                let lifted = Bits(m).fold(0u64, |acc, i| acc | 1 << kept[i]) | anchors;
                Bits(lifted).collect()
            })
            .collect();
        CoverPattern { h: h.clone(), core, leaves, role_sets, colored: true }
    }

    pub(crate) fn roles(&self) -> usize {
        self.role_sets.first().map_or(0, Vec::len)
    }

    pub(crate) fn ell(&self) -> usize {
        self.leaves.len()
    }

    /// First embedding found: role sets in order, assignments of roles to
    /// stored vertices in lexicographic order, remaining vertices ascending.
    pub(crate) fn find(&self, state: &TupleState, colors: Option<&ColorAssignment>) -> Result<Option<Vec<usize>>, DetectorError> {
        if self.colored {
            match colors {
                Some(c) if c.ell() == self.ell() && c.labels().len() == state.n => {}
                _ => return Err(DetectorError::InvalidLabels),
            }
        }
        let masks: Vec<u64> = state.stored.iter().map(|s| s.neighbor_mask()).collect();
        for roles in &self.role_sets {
            let mut map = vec![usize::MAX; self.h.n()];
            let mut slot = vec![usize::MAX; self.h.n()];
            if let Some(found) = self.assign_roles(state, &masks, colors, roles, 0, 0, &mut map, &mut slot)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    fn core_ok(&self, colors: Option<&ColorAssignment>, v: usize) -> bool {
        colors.is_none_or(|c| c.label(v) == c.core_label())
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_roles(
        &self,
        state: &TupleState,
        masks: &[u64],
        colors: Option<&ColorAssignment>,
        roles: &[usize],
        depth: usize,
        used: u64,
        map: &mut [usize],
        slot: &mut [usize],
    ) -> Result<Option<Vec<usize>>, DetectorError> {
        if depth == roles.len() {
            return self.extend(state, masks, colors, roles, used, map, slot);
        }
        let r = roles[depth];
        for (i, sv) in state.stored.iter().enumerate() {
            let v = sv.vertex;
            if used >> v & 1 == 1 || !self.core_ok(colors, v) {
                continue;
            }
            // edges to roles placed so far
            let ok = roles[..depth].iter().all(|&p| !self.h.has_edge(p, r) || masks[i] >> map[p] & 1 == 1);
            if !ok {
                continue;
            }
            map[r] = v;
            slot[r] = i;
            if let Some(found) = self.assign_roles(state, masks, colors, roles, depth + 1, used | 1 << v, map, slot)? {
                return Ok(Some(found));
            }
            map[r] = usize::MAX;
            slot[r] = usize::MAX;
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        state: &TupleState,
        masks: &[u64],
        colors: Option<&ColorAssignment>,
        roles: &[usize],
        used: u64,
        map: &mut [usize],
        slot: &[usize],
    ) -> Result<Option<Vec<usize>>, DetectorError> {
        let role_mask = roles.iter().fold(0u64, |m, &r| m | 1 << r);
        let rest = self.core & !role_mask;
        let attached: Vec<usize> = Bits(rest).filter(|&w| self.h.neighbors(w) & self.core != 0).collect();
        let isolated: Vec<usize> = Bits(rest).filter(|&w| self.h.neighbors(w) & self.core == 0).collect();
        let eligible = (0..state.n).filter(|&v| self.core_ok(colors, v)).fold(0u64, |m, v| m | 1 << v);
        self.place_attached(state, masks, colors, &attached, 0, used, eligible, &isolated, map, slot)
    }

    #[allow(clippy::too_many_arguments)]
    fn place_attached(
        &self,
        state: &TupleState,
        masks: &[u64],
        colors: Option<&ColorAssignment>,
        attached: &[usize],
        depth: usize,
        used: u64,
        eligible: u64,
        isolated: &[usize],
        map: &mut [usize],
        slot: &[usize],
    ) -> Result<Option<Vec<usize>>, DetectorError> {
        if depth == attached.len() {
            // isolated core vertices: smallest unused eligible vertices
            let mut free = Bits(eligible & !used);
            for &w in isolated {
                let Some(v) = free.next() else { return Ok(None) };
                map[w] = v;
            }
            return self.place_leaves(state, colors, map, slot);
        }
        let w = attached[depth];
        let cand = Bits(self.h.neighbors(w) & self.core).fold(eligible & !used, |acc, p| acc & masks[slot[p]]);
        for v in Bits(cand) {
            map[w] = v;
            if let Some(found) =
                self.place_attached(state, masks, colors, attached, depth + 1, used | 1 << v, eligible, isolated, map, slot)?
            {
                return Ok(Some(found));
            }
        }
        map[w] = usize::MAX;
        Ok(None)
    }

    fn place_leaves(
        &self,
        state: &TupleState,
        colors: Option<&ColorAssignment>,
        map: &mut [usize],
        slot: &[usize],
    ) -> Result<Option<Vec<usize>>, DetectorError> {
        let Some(colors) = colors else { return Ok(Some(map.to_vec())) };
        for &(leaf, label, parent) in &self.leaves {
            let image = if slot[parent] != usize::MAX {
                let sv = &state.stored[slot[parent]];
                sv.neighbors.iter().copied().find(|&x| colors.label(x) == label)
            } else {
                // the parent hangs off a stored role
                let anchor = Bits(self.h.neighbors(parent) & self.core)
                    .find(|&p| slot[p] != usize::MAX)
                    .expect("role sets cover the core");
                state.stored[slot[anchor]].second_with_label(map[parent], label)?
            };
            let Some(x) = image else { return Ok(None) };
            map[leaf] = x;
        }
        Ok(Some(map.to_vec()))
    }
}

/// Does the tuple contain the image of a minimum vertex cover of `h`, with the
/// stored neighbor lists certifying a full copy? Uses no probes.
pub fn marked_predicate(state: &TupleState, h: &Graph) -> Option<ContainmentWitness> {
    CoverPattern::basic(h)
        .find(state, None)
        .expect("uncolored search has no failure modes")
        .map(|m| ContainmentWitness::mapping(ContainmentKind::Subgraph, m))
}

/// Recognizes `h` from a cover of its core plus label flags for the dangling
/// leaves. Core vertices must carry label `ell + 1`, leaf `i` label `i`.
pub fn marked_predicate_dangling(
    state: &TupleState,
    h: &Graph,
    colors: &ColorAssignment,
) -> Result<Option<ContainmentWitness>, DetectorError> {
    Ok(CoverPattern::dangling(h).find(state, Some(colors))?.map(|m| ContainmentWitness::mapping(ContainmentKind::Subgraph, m)))
}

/// Vertices `a ∈ N(u)`, `b ∈ N(v)` with `a ~ b` (probed), all four distinct.
/// Probes at most `|N(u)| |N(v)|` pairs.
pub fn check_3path(u: usize, v: usize, state: &TupleState, g: &OracleGraph) -> Option<(usize, usize)> {
    let nu = &state.stored.iter().find(|s| s.vertex == u)?.neighbors;
    let nv = &state.stored.iter().find(|s| s.vertex == v)?.neighbors;
    for &a in nu {
        for &b in nv {
            if a != b && a != v && b != u && g.probe(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// A vertex `w` adjacent to two stored neighbors `a`, `b` of `v`, closing
/// the 4-cycle `v a w b`. Probes at most `n deg(v)` pairs.
pub fn check_adjacent_to_two(v: usize, state: &TupleState, g: &OracleGraph) -> Option<(usize, usize, usize)> {
    let nv = &state.stored.iter().find(|s| s.vertex == v)?.neighbors;
    for w in 0..state.n {
        if w == v {
            continue;
        }
        let mut first = None;
        for &a in nv {
            if a != w && g.probe(w, a) {
                match first {
                    None => first = Some(a),
                    Some(f) => return Some((f, w, a)),
                }
            }
        }
    }
    None
}

/// Stored path positions: 2, 5, 8, then every second vertex.
pub(crate) fn path_positions(k: usize) -> Option<Vec<usize>> {
    let l = paths_bucket_count(k)?;
    let mut pos = vec![2, 5, 8];
    while pos.len() < l {
        let last = *pos.last().unwrap_or(&0);
        pos.push(last + 2);
    }
    pos.truncate(l);
    Some(pos)
}

/// Path recognition with fewer stored vertices than a cover: stored vertices
/// sit at positions 2, 5, 8, 10, 12, ...; the two vertices between 2 and 5
/// (and 5 and 8) are found by an edge search between the neighborhoods, the
/// others from neighbor lists, the end leaves (labels 1 and 2) from flags.
/// Returns the host vertex of each path position `0..=k`.
pub(crate) fn find_path(
    k: usize,
    state: &TupleState,
    colors: &ColorAssignment,
    adjacent: &mut dyn FnMut(usize, usize) -> bool,
) -> Result<Option<Vec<usize>>, DetectorError> {
    let pos = path_positions(k).ok_or(DetectorError::ModeMismatch("path length has no checking plan"))?;
    if colors.ell() != 2 {
        return Err(DetectorError::InvalidLabels);
    }
    if state.stored.len() != pos.len() {
        return Ok(None);
    }
    let core = colors.core_label();
    let mut order: Vec<usize> = (0..pos.len()).collect();
    // all assignments of stored vertices to positions, lexicographic
    loop {
        let mut path = vec![usize::MAX; k + 1];
        let mut used = 0u64;
        let mut ok = true;
        for (i, &p) in pos.iter().enumerate() {
            let v = state.stored[order[i]].vertex;
            if colors.label(v) != core || used >> v & 1 == 1 {
                ok = false;
                break;
            }
            path[p] = v;
            used |= 1 << v;
        }
        if ok {
            let st: Vec<&super::StoredVertex> = order.iter().map(|&i| &state.stored[i]).collect();
            if let Some(found) = fill_path(k, &pos, &st, colors, adjacent, 0, &mut path, used)? {
                return Ok(Some(found));
            }
        }
        if !next_permutation(&mut order) {
            return Ok(None);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Fills the gaps one at a time: step 0 is the start (positions 0, 1), step
/// `i` for `1 <= i < pos.len()` the gap before `pos[i]`, the last the end.
#[allow(clippy::too_many_arguments)]
fn fill_path(
    k: usize,
    pos: &[usize],
    st: &[&super::StoredVertex],
    colors: &ColorAssignment,
    adjacent: &mut dyn FnMut(usize, usize) -> bool,
    step: usize,
    path: &mut Vec<usize>,
    used: u64,
) -> Result<Option<Vec<usize>>, DetectorError> {
    let core = colors.core_label();
    let free = |v: usize, used: u64| used >> v & 1 == 0 && colors.label(v) == core;
    if step == 0 {
        // position 1 next to the first stored vertex, leaf 0 behind it
        for &a in &st[0].neighbors {
            if !free(a, used) {
                continue;
            }
            let Some(leaf) = st[0].second_with_label(a, 1)? else { continue };
            path[1] = a;
            path[0] = leaf;
            if let Some(found) = fill_path(k, pos, st, colors, adjacent, 1, path, used | 1 << a)? {
                return Ok(Some(found));
            }
        }
        return Ok(None);
    }
    if step == pos.len() {
        let last = st[pos.len() - 1];
        return Ok(match k - pos[pos.len() - 1] {
            1 => last.neighbors.iter().copied().find(|&x| colors.label(x) == 2).map(|x| {
                path[k] = x;
                path.clone()
            }),
            _ => {
                let mut out = None;
                for &b in &last.neighbors {
                    if free(b, used) {
                        if let Some(leaf) = last.second_with_label(b, 2)? {
                            path[k - 1] = b;
                            path[k] = leaf;
                            out = Some(path.clone());
                            break;
                        }
                    }
                }
                out
            }
        });
    }
    let (left, right) = (st[step - 1], st[step]);
    let p = pos[step - 1];
    if pos[step] - p == 3 {
        for &a in &left.neighbors {
            if !free(a, used) {
                continue;
            }
            for &b in &right.neighbors {
                if b == a || !free(b, used) || !adjacent(a, b) {
                    continue;
                }
                path[p + 1] = a;
                path[p + 2] = b;
                if let Some(found) = fill_path(k, pos, st, colors, adjacent, step + 1, path, used | 1 << a | 1 << b)? {
                    return Ok(Some(found));
                }
            }
        }
    } else {
        let common = left.neighbor_mask() & right.neighbor_mask();
        for a in Bits(common) {
            if !free(a, used) {
                continue;
            }
            path[p + 1] = a;
            if let Some(found) = fill_path(k, pos, st, colors, adjacent, step + 1, path, used | 1 << a)? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

/// [`find_path`] probing the oracle for the gap edges.
pub fn marked_predicate_paths(
    k: usize,
    state: &TupleState,
    colors: &ColorAssignment,
    g: &OracleGraph,
) -> Result<Option<Vec<usize>>, DetectorError> {
    find_path(k, state, colors, &mut |a, b| g.probe(a, b))
}
