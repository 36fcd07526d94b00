//! Classical reference detector: probe accounting, degree buckets, color
//! coding and the marked-state predicates of the walk plans, run as an
//! exhaustive tuple search.

mod oracle;
mod predicates;
mod state;

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use oracle::{bucket_intervals, covering_intervals, degree_buckets, DegreeBucketMembers, OracleGraph};
pub use predicates::{
    check_3path, check_adjacent_to_two, marked_predicate, marked_predicate_dangling, marked_predicate_paths,
    min_vertex_covers,
};
pub use state::{color_rounds, dangling_leaves, ColorAssignment, StoredVertex, TupleState};

use crate::error::GraphError;
use crate::graph::iso::find_isomorphism;
use crate::graph::{Bits, ContainmentKind, ContainmentWitness, Graph};
use predicates::{find_path, path_positions, CoverPattern};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetectorError {
    #[error("pattern does not fit the mode: {0}")]
    ModeMismatch(&'static str),
    #[error("stored state has no label flags")]
    MissingFlags,
    #[error("confidence must lie strictly between 0 and 1")]
    InvalidConfidence,
    #[error("labels out of range for the pattern")]
    InvalidLabels,
    #[error("gate constant must be positive")]
    InvalidGate,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Store a minimum vertex cover of H.
    Basic,
    /// Store a cover of H minus its dangling leaves, color the leaves.
    Dangling,
    /// Paths with 7 or more edges: fewer stored vertices, gap edges probed.
    Paths,
    /// C4 through a stored vertex with two common-neighbor hits.
    FourCycle,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectConfig {
    pub seed: u64,
    pub confidence: f64,
    /// Gate constant. The gate accepts above `2cn` edges (`c n^{3/2}` in
    /// four-cycle mode). `None` picks a value that is sound for the pattern:
    /// `(|V(H)| - 2) / 2` for forests, 1 for C4, no gate otherwise.
    pub c: Option<f64>,
}

impl Default for DetectConfig {
    fn default() -> Self {
        DetectConfig { seed: 0, confidence: 0.9, c: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detection {
    pub found: bool,
    /// Present when found by search; the gate accepts without one.
    pub witness: Option<ContainmentWitness>,
    pub probes: u64,
    /// Color rounds run (1 for uncolored modes, 0 when decided before search).
    pub rounds: u64,
    pub gated: bool,
}

fn is_forest(h: &Graph) -> bool {
    h.m() + h.components().len() == h.n()
}

fn is_path(h: &Graph) -> bool {
    h.m() >= 1 && h.is_connected() && h.m() + 1 == h.n() && h.max_degree() <= 2
}

/// Edge count above which the gate accepts, `None` when there is no gate.
fn gate_threshold(h: &Graph, mode: Mode, n: usize, c: Option<f64>) -> Option<f64> {
    let nf = n as f64;
    if mode == Mode::FourCycle {
        return Some(c.unwrap_or(1.0) * nf * libm::sqrt(nf));
    }
    let c = match c {
        Some(c) => c,
        None if is_forest(h) => (h.n() as f64 - 2.0).max(1.0) / 2.0,
        None => return None,
    };
    Some(2.0 * c * nf)
}

/// Decides whether `h` is a subgraph of the hidden graph. Degrees come from
/// probing every pair once; the tuple search reuses those rows, the path and
/// four-cycle checks probe again for the edges they look up.
pub fn detect_subgraph(g: &OracleGraph, h: &Graph, mode: Mode, cfg: &DetectConfig) -> Result<Detection, DetectorError> {
    if !(cfg.confidence > 0.0 && cfg.confidence < 1.0) {
        return Err(DetectorError::InvalidConfidence);
    }
    if cfg.c.is_some_and(|c| !(c > 0.0)) {
        return Err(DetectorError::InvalidGate);
    }
    match mode {
        Mode::Paths if !is_path(h) => return Err(DetectorError::ModeMismatch("paths mode needs a path")),
        Mode::FourCycle if !(h.n() == 4 && h.m() == 4 && h.max_degree() == 2 && h.is_connected()) => {
            return Err(DetectorError::ModeMismatch("four-cycle mode needs C4"))
        }
        _ => {}
    }
    let start = g.probe_count();
    let n = g.n();
    if h.m() == 0 {
        let found = n >= h.n();
        return Ok(Detection {
            found,
            witness: found.then(|| ContainmentWitness::mapping(ContainmentKind::Subgraph, (0..h.n()).collect())),
            probes: 0,
            rounds: 0,
            gated: false,
        });
    }
    let rows = g.probe_all();
    let m = rows.iter().map(Vec::len).sum::<usize>() / 2;
    if gate_threshold(h, mode, n, cfg.c).is_some_and(|t| m as f64 > t) {
        return Ok(Detection { found: true, witness: None, probes: g.probe_count() - start, rounds: 0, gated: true });
    }
    let degrees: Vec<usize> = rows.iter().map(Vec::len).collect();
    let buckets: Vec<DegreeBucketMembers> =
        oracle::buckets_from_degrees(&degrees).into_iter().filter(|b| !b.vertices.is_empty()).collect();
    let (map, rounds) = match mode {
        Mode::Basic => {
            let pattern = CoverPattern::basic(h);
            let found = tuple_search(&buckets, pattern.roles(), |_| true, |tuple| {
                let state = TupleState::from_rows(n, &rows, tuple, None);
                pattern.find(&state, None)
            })?;
            (found, 1)
        }
        Mode::Dangling => run_dangling(h, n, &rows, &buckets, cfg)?,
        Mode::Paths => match path_positions(h.m()) {
            None => run_dangling(h, n, &rows, &buckets, cfg)?,
            Some(pos) => {
                let k = h.m();
                let line = Graph::path(k);
                let phi = find_isomorphism(&line, h).expect("validated as a path");
                let rounds = color_rounds(h, cfg.confidence)?;
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                let mut memo: HashMap<(usize, usize), bool> = HashMap::new();
                let mut found = None;
                let mut used = 0;
                for _ in 0..rounds {
                    used += 1;
                    let colors = ColorAssignment::random(&mut rng, n, 2);
                    let firsts = label_tables(&rows, &colors);
                    let core = colors.core_label();
                    let hit = tuple_search(&buckets, pos.len(), |v| colors.label(v) == core, |tuple| {
                        let state = state_with_tables(n, &rows, tuple, &firsts);
                        find_path(k, &state, &colors, &mut |a, b| {
                            *memo.entry((a.min(b), a.max(b))).or_insert_with(|| g.probe(a, b))
                        })
                    })?;
                    if let Some(line_map) = hit {
                        let mut map = vec![0; h.n()];
                        for (a, &x) in line_map.iter().enumerate() {
                            map[phi[a]] = x;
                        }
                        found = Some(map);
                        break;
                    }
                }
                (found, used)
            }
        },
        Mode::FourCycle => {
            let cycle = Graph::cycle(4);
            let phi = find_isomorphism(&cycle, h).expect("validated as C4");
            let hit = tuple_search(&buckets, 1, |_| true, |tuple| {
                let state = TupleState::from_rows(n, &rows, tuple, None);
                Ok(check_adjacent_to_two(tuple[0], &state, g).map(|(a, w, b)| [tuple[0], a, w, b]))
            })?;
            let map = hit.map(|cyc| {
                let mut map = vec![0; 4];
                for (i, &x) in cyc.iter().enumerate() {
                    map[phi[i]] = x;
                }
                map
            });
            (map, 1)
        }
    };
    Ok(Detection {
        found: map.is_some(),
        witness: map.map(|m| ContainmentWitness::mapping(ContainmentKind::Subgraph, m)),
        probes: g.probe_count() - start,
        rounds,
        gated: false,
    })
}

type Found = Option<Vec<usize>>;

fn run_dangling(
    h: &Graph,
    n: usize,
    rows: &[Vec<usize>],
    buckets: &[DegreeBucketMembers],
    cfg: &DetectConfig,
) -> Result<(Found, u64), DetectorError> {
    let pattern = CoverPattern::dangling(h);
    let ell = pattern.ell();
    let rounds = color_rounds(h, cfg.confidence)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for round in 1..=rounds {
        let colors = ColorAssignment::random(&mut rng, n, ell);
        let firsts = label_tables(rows, &colors);
        let core = colors.core_label();
        let hit = tuple_search(buckets, pattern.roles(), |v| colors.label(v) == core, |tuple| {
            let state = state_with_tables(n, rows, tuple, &firsts);
            pattern.find(&state, Some(&colors))
        })?;
        if hit.is_some() {
            return Ok((hit, round));
        }
    }
    Ok((None, rounds))
}

/// For every vertex, its smallest neighbor of each label. Stored vertices
/// carry the core label, so leaving them out of the search changes nothing
/// for leaf labels.
fn label_tables(rows: &[Vec<usize>], colors: &ColorAssignment) -> Vec<Vec<Option<usize>>> {
    rows.iter()
        .map(|row| {
            let mut out = vec![None; colors.ell() + 2];
            for &w in row {
                let slot = &mut out[colors.label(w) as usize];
                if slot.is_none() {
                    *slot = Some(w);
                }
            }
            out
        })
        .collect()
}

fn state_with_tables(n: usize, rows: &[Vec<usize>], tuple: &[usize], firsts: &[Vec<Option<usize>>]) -> TupleState {
    let stored = tuple
        .iter()
        .map(|&v| StoredVertex {
            vertex: v,
            neighbors: rows[v].clone(),
            second: Some(rows[v].iter().map(|&y| firsts[y].clone()).collect()),
        })
        .collect();
    TupleState { n, stored }
}

/// Runs `visit` on every set of `r` distinct eligible vertices, drawn one per
/// bucket for each bucket vector in lexicographic order. Sets already seen
/// under an earlier vector are skipped. Stops at the first hit.
fn tuple_search<T>(
    buckets: &[DegreeBucketMembers],
    r: usize,
    eligible: impl Fn(usize) -> bool,
    mut visit: impl FnMut(&[usize]) -> Result<Option<T>, DetectorError>,
) -> Result<Option<T>, DetectorError> {
    if r == 0 || buckets.is_empty() {
        return Ok(None);
    }
    let members: Vec<Vec<usize>> =
        buckets.iter().map(|b| b.vertices.iter().copied().filter(|&v| eligible(v)).collect()).collect();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut qvec = vec![0usize; r];
    let mut tuple = Vec::with_capacity(r);
    loop {
        if let Some(hit) = pick(&members, &qvec, 0, 0, &mut tuple, &mut seen, &mut visit)? {
            return Ok(Some(hit));
        }
        // next bucket vector
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            qvec[i] += 1;
            if qvec[i] < members.len() {
                break;
            }
            qvec[i] = 0;
        }
    }
}

fn pick<T>(
    members: &[Vec<usize>],
    qvec: &[usize],
    depth: usize,
    used: u64,
    tuple: &mut Vec<usize>,
    seen: &mut HashSet<u64>,
    visit: &mut impl FnMut(&[usize]) -> Result<Option<T>, DetectorError>,
) -> Result<Option<T>, DetectorError> {
    if depth == qvec.len() {
        if !seen.insert(used) {
            return Ok(None);
        }
        let sorted: Vec<usize> = Bits(used).collect();
        return visit(&sorted);
    }
    for &v in &members[qvec[depth]] {
        if used >> v & 1 == 1 {
            continue;
        }
        tuple.push(v);
        let hit = pick(members, qvec, depth + 1, used | 1 << v, tuple, seen, visit)?;
        tuple.pop();
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}
