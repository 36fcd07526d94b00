use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashSet;

use super::{AdversaryError, AdversaryQuantities, RelationFamily};
use crate::graph::{pair_count, pair_from_index, pair_index, Graph};

/// A related pair seen up to relabeling: representative `x_rep` differs at
/// bit `x_bit` from a related `y` that is `y_rep` relabeled, the same pair
/// being `y_bit` in `y_rep`'s own labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessedTriple {
    pub x_rep: usize,
    pub y_rep: usize,
    pub x_bit: usize,
    pub y_bit: usize,
}

#[derive(Debug, Clone)]
pub struct SymmetricReport {
    pub quantities: AdversaryQuantities,
    /// Related-partner count of each X-representative.
    pub x_degrees: Vec<u64>,
    pub y_degrees: Vec<u64>,
    /// `x_tables[r][i] = l_{x,i}` for the `r`-th X-representative.
    pub x_tables: Vec<Vec<u64>>,
    pub y_tables: Vec<Vec<u64>>,
    /// Every distinct witnessed triple, sorted.
    pub witnesses: Vec<WitnessedTriple>,
}

fn diff_bits(a: &Graph, b: &Graph) -> Vec<usize> {
    let mut out = Vec::new();
    for v in 1..a.n() {
        let d = (a.neighbors(v) ^ b.neighbors(v)) & ((1u64 << v) - 1);
        out.extend(crate::graph::Bits(d).map(|u| pair_index(u, v)));
    }
    out
}

fn tables(reps: &[Graph], partners: impl Fn(&Graph) -> Vec<Graph>, bits: usize) -> (Vec<u64>, Vec<Vec<u64>>) {
    let mut degrees = Vec::with_capacity(reps.len());
    let mut tabs = Vec::with_capacity(reps.len());
    for r in reps {
        let mut t = vec![0u64; bits];
        let ps = partners(r);
        for p in &ps {
            for i in diff_bits(r, p) {
                t[i] += 1;
            }
        }
        degrees.push(ps.len() as u64);
        tabs.push(t);
    }
    (degrees, tabs)
}

/// Counts everything on representatives only. Correct when the relation is
/// covariant under relabeling: every related pair is the image of a pair
/// `(x_rep, y)` under some permutation.
pub fn quantities_symmetric(family: &dyn RelationFamily) -> Result<SymmetricReport, AdversaryError> {
    let n = family.n();
    let xr = family.x_representatives();
    let yr = family.y_representatives();
    if xr.is_empty() || yr.is_empty() {
        return Err(AdversaryError::UnsupportedSize { n, reason: "no representatives at this size" });
    }
    let bits = pair_count(n);
    let (x_degrees, x_tables) = tables(xr, |x| family.related_y(x), bits);
    let (y_degrees, y_tables) = tables(yr, |y| family.related_x(y), bits);
    let m = x_degrees.iter().copied().min().unwrap_or(0);
    let m_prime = y_degrees.iter().copied().min().unwrap_or(0);

    let mut seen: HashSet<WitnessedTriple> = HashSet::new();
    for (xi, x) in xr.iter().enumerate() {
        for y in family.related_y(x) {
            let (yi, perm) = family.locate_y(&y).ok_or(AdversaryError::Degenerate("related graph not in Y"))?;
            let mut inv = vec![0usize; n];
            for (v, &w) in perm.iter().enumerate() {
                inv[w] = v;
            }
            for i in diff_bits(x, &y) {
                let (a, b) = pair_from_index(i);
                let j = pair_index(inv[a].min(inv[b]), inv[a].max(inv[b]));
                seen.insert(WitnessedTriple { x_rep: xi, y_rep: yi, x_bit: i, y_bit: j });
            }
        }
    }
    let mut witnesses: Vec<WitnessedTriple> = seen.into_iter().collect();
    witnesses.sort_unstable();
    let quantities = AdversaryQuantities::from_counts(
        m,
        m_prime,
        witnesses.iter().map(|w| (x_tables[w.x_rep][w.x_bit], y_tables[w.y_rep][w.y_bit])),
    )?;
    Ok(SymmetricReport { quantities, x_degrees, y_degrees, x_tables, y_tables, witnesses })
}
