use alloc::vec;
use alloc::vec::Vec;
use rand::Rng;

use super::{DetectorError, OracleGraph};
use crate::graph::Graph;

/// A label in `1..=ell+1` for every vertex of the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorAssignment {
    labels: Vec<u8>,
    ell: usize,
}

impl ColorAssignment {
    /// Independent uniform labels.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, ell: usize) -> Self {
        let top = ell as u8 + 1;
        ColorAssignment { labels: (0..n).map(|_| rng.gen_range(1..=top)).collect(), ell }
    }

    pub fn from_labels(labels: Vec<u8>, ell: usize) -> Result<Self, DetectorError> {
        if ell > 60 || labels.iter().any(|&l| l == 0 || l as usize > ell + 1) {
            return Err(DetectorError::InvalidLabels);
        }
        Ok(ColorAssignment { labels, ell })
    }

    pub fn label(&self, v: usize) -> u8 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// The label reserved for vertices of the pattern that are not dangling leaves.
    pub fn core_label(&self) -> u8 {
        self.ell as u8 + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoredVertex {
    pub vertex: usize,
    /// Complete, sorted neighbor list.
    pub neighbors: Vec<usize>,
    /// `second[i][j]`: the smallest vertex other than `vertex` with label `j`
    /// adjacent to `neighbors[i]` (index 0 unused).
    pub second: Option<Vec<Vec<Option<usize>>>>,
}

impl StoredVertex {
    pub fn neighbor_mask(&self) -> u64 {
        self.neighbors.iter().fold(0, |m, &w| m | 1 << w)
    }

    /// Second neighbor with label `j` reached through `via`, if `via` is a
    /// neighbor and flags are present.
    pub fn second_with_label(&self, via: usize, j: u8) -> Result<Option<usize>, DetectorError> {
        let flags = self.second.as_ref().ok_or(DetectorError::MissingFlags)?;
        Ok(self.neighbors.binary_search(&via).ok().and_then(|i| flags[i].get(j as usize).copied().flatten()))
    }
}

/// The stored part of a walk state: vertices with their neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleState {
    /// Vertex count of the host.
    pub n: usize,
    pub stored: Vec<StoredVertex>,
}

impl TupleState {
    /// Probes the neighbor list of every vertex in `vertices`.
    pub fn probe(g: &OracleGraph, vertices: &[usize]) -> Self {
        let stored = vertices.iter().map(|&v| StoredVertex { vertex: v, neighbors: g.probe_row(v), second: None }).collect();
        TupleState { n: g.n(), stored }
    }

    /// Also probes the neighbors' rows to fill in the label flags.
    pub fn probe_with_flags(g: &OracleGraph, vertices: &[usize], colors: &ColorAssignment) -> Self {
        let mut rows: Vec<Option<Vec<usize>>> = vec![None; g.n()];
        let mut row = |v: usize| -> Vec<usize> { rows[v].get_or_insert_with(|| g.probe_row(v)).clone() };
        let mut stored = Vec::with_capacity(vertices.len());
        for &v in vertices {
            let neighbors = row(v);
            let second = neighbors.iter().map(|&y| label_firsts(&row(y), v, colors)).collect();
            stored.push(StoredVertex { vertex: v, neighbors, second: Some(second) });
        }
        TupleState { n: g.n(), stored }
    }

    /// Builds a state from already known neighbor lists.
    pub(crate) fn from_rows(n: usize, rows: &[Vec<usize>], vertices: &[usize], colors: Option<&ColorAssignment>) -> Self {
        let stored = vertices
            .iter()
            .map(|&v| StoredVertex {
                vertex: v,
                neighbors: rows[v].clone(),
                second: colors.map(|c| rows[v].iter().map(|&y| label_firsts(&rows[y], v, c)).collect()),
            })
            .collect();
        TupleState { n, stored }
    }
}

fn label_firsts(row: &[usize], exclude: usize, colors: &ColorAssignment) -> Vec<Option<usize>> {
    let mut out = vec![None; colors.ell() + 2];
    for &w in row {
        if w != exclude {
            let slot = &mut out[colors.label(w) as usize];
            if slot.is_none() {
                *slot = Some(w);
            }
        }
    }
    out
}

/// Degree-one vertices of `h` that are not an endpoint of an isolated edge.
pub fn dangling_leaves(h: &Graph) -> Vec<usize> {
    (0..h.n())
        .filter(|&v| h.degree(v) == 1 && h.degree(h.neighbors(v).trailing_zeros() as usize) != 1)
        .collect()
}

/// Smallest `r` with `1 - (1 - (ell+1)^{-|V(H)|})^r >= confidence`.
pub fn color_rounds(h: &Graph, confidence: f64) -> Result<u64, DetectorError> {
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(DetectorError::InvalidConfidence);
    }
    let ell = dangling_leaves(h).len();
    if ell == 0 {
        return Ok(1);
    }
    let p = libm::pow(ell as f64 + 1.0, -(h.n() as f64));
    let miss = |r: u64| libm::exp(r as f64 * libm::log1p(-p));
    let mut r = libm::ceil(libm::log(1.0 - confidence) / libm::log1p(-p)).max(1.0) as u64;
    while r > 1 && 1.0 - miss(r - 1) >= confidence {
        r -= 1;
    }
    while 1.0 - miss(r) < confidence {
        r += 1;
    }
    Ok(r)
}
