use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, AtomicU8, Ordering};

use crate::graph::{pair_count, pair_index, Graph};

const UNPROBED: u8 = 0;
const ABSENT: u8 = 1;
const PRESENT: u8 = 2;

/// Adjacency oracle over a hidden graph. Every answer goes through
/// [`OracleGraph::probe`], which counts the call and records the answer.
#[derive(Debug)]
pub struct OracleGraph {
    hidden: Graph,
    probes: AtomicU64,
    log: Vec<AtomicU8>,
}

impl OracleGraph {
    pub fn new(hidden: Graph) -> Self {
        let log = (0..pair_count(hidden.n())).map(|_| AtomicU8::new(UNPROBED)).collect();
        OracleGraph { hidden, probes: AtomicU64::new(0), log }
    }

    pub fn n(&self) -> usize {
        self.hidden.n()
    }

    /// Is `{u, v}` an edge? Costs one probe, also for `u == v`.
    pub fn probe(&self, u: usize, v: usize) -> bool {
        self.probes.fetch_add(1, Ordering::Relaxed);
        if u == v {
            return false;
        }
        let answer = self.hidden.has_edge(u, v);
        self.log[pair_index(u, v)].store(if answer { PRESENT } else { ABSENT }, Ordering::Relaxed);
        answer
    }

    pub fn probe_count(&self) -> u64 {
        self.probes.load(Ordering::Relaxed)
    }

    /// The answer of an earlier probe of `{u, v}`, if any.
    pub fn recorded(&self, u: usize, v: usize) -> Option<bool> {
        if u == v {
            return None;
        }
        match self.log[pair_index(u, v)].load(Ordering::Relaxed) {
            PRESENT => Some(true),
            ABSENT => Some(false),
            _ => None,
        }
    }

    /// The graph of all edges confirmed by probes so far.
    pub fn recorded_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for v in 1..self.n() {
            for u in 0..v {
                if self.recorded(u, v) == Some(true) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Probes every pair once and returns all neighbor lists.
    pub fn probe_all(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut rows = alloc::vec![Vec::new(); n];
        for v in 1..n {
            for u in 0..v {
                if self.probe(u, v) {
                    rows[u].push(v);
                    rows[v].push(u);
                }
            }
        }
        for r in &mut rows {
            r.sort_unstable();
        }
        rows
    }

    /// Probes `v` against every other vertex.
    pub fn probe_row(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| u != v && self.probe(u, v)).collect()
    }
}

/// Vertices whose degree lies in `[lo, hi] = [q/2, 2q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBucketMembers {
    pub q: usize,
    pub lo: usize,
    pub hi: usize,
    pub vertices: Vec<usize>,
}

/// `(q, q/2, 2q)` for `q = 2, 4, 8, ...` until `q/2` exceeds `max_degree`.
pub fn bucket_intervals(max_degree: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut q = 2usize;
    while q / 2 <= max_degree.max(1) {
        out.push((q, q / 2, 2 * q));
        q *= 2;
    }
    out
}

/// Intervals of the scheme that contain `d`.
pub fn covering_intervals(d: usize) -> Vec<(usize, usize)> {
    bucket_intervals(d).into_iter().filter(|&(_, lo, hi)| lo <= d && d <= hi).map(|(_, lo, hi)| (lo, hi)).collect()
}

pub(crate) fn buckets_from_degrees(degrees: &[usize]) -> Vec<DegreeBucketMembers> {
    let max = degrees.iter().copied().max().unwrap_or(0);
    bucket_intervals(max)
        .into_iter()
        .map(|(q, lo, hi)| DegreeBucketMembers {
            q,
            lo,
            hi,
            vertices: (0..degrees.len()).filter(|&v| (lo..=hi).contains(&degrees[v])).collect(),
        })
        .collect()
}

/// Degrees by probing every pair, then the overlapping geometric buckets.
/// Isolated vertices are in no bucket.
pub fn degree_buckets(g: &OracleGraph) -> Vec<DegreeBucketMembers> {
    let rows = g.probe_all();
    let degrees: Vec<usize> = rows.iter().map(Vec::len).collect();
    buckets_from_degrees(&degrees)
}
