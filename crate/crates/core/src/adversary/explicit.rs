use alloc::vec;
use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};

use super::{AdversaryError, AdversaryQuantities, RelationFamily, RelationKind};
use crate::graph::{pair_count, pair_index, Bits, Graph};

/// Largest `n` for labeled enumeration (pair masks must fit in 64 bits).
pub const EXPLICIT_MAX_N: usize = 11;

/// Upper limit on `|X| * |Y|` for the generic pair scan.
const PAIR_BUDGET: u128 = 200_000_000;

/// Direct evaluation of the definitions over fully enumerated labeled sets.
/// Inputs are bit strings of length `bits`; `related` decides membership in R.
pub fn quantities_explicit(
    bits: usize,
    xs: &[u64],
    ys: &[u64],
    related: impl Fn(u64, u64) -> bool,
) -> Result<AdversaryQuantities, AdversaryError> {
    if bits > 64 {
        return Err(AdversaryError::UnsupportedSize { n: bits, reason: "bit strings longer than 64" });
    }
    if xs.is_empty() || ys.is_empty() {
        return Err(AdversaryError::Degenerate("X or Y is empty"));
    }
    if xs.len() as u128 * ys.len() as u128 > PAIR_BUDGET {
        return Err(AdversaryError::UnsupportedSize { n: bits, reason: "too many pairs to scan" });
    }
    let mut lx = vec![0u64; xs.len() * bits];
    let mut ly = vec![0u64; ys.len() * bits];
    let mut mx = vec![0u64; xs.len()];
    let mut my = vec![0u64; ys.len()];
    for (a, &x) in xs.iter().enumerate() {
        for (b, &y) in ys.iter().enumerate() {
            if !related(x, y) {
                continue;
            }
            mx[a] += 1;
            my[b] += 1;
            for i in Bits(x ^ y) {
                lx[a * bits + i] += 1;
                ly[b * bits + i] += 1;
            }
        }
    }
    let m = mx.iter().copied().min().unwrap_or(0);
    let m_prime = my.iter().copied().min().unwrap_or(0);
    let mut pairs = Vec::new();
    for (a, &x) in xs.iter().enumerate() {
        for (b, &y) in ys.iter().enumerate() {
            if related(x, y) {
                pairs.extend(Bits(x ^ y).map(|i| (lx[a * bits + i], ly[b * bits + i])));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
    }
    AdversaryQuantities::from_counts(m, m_prime, pairs)
}

/// Masks of every 2-edge swap of the graph on `n` vertices given by `mask`.
pub fn swap_outcome_masks(n: usize, mask: u64) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = {
        let g = Graph::from_mask(n, mask).expect("n within mask range");
        g.edges()
    };
    let bit = |u: usize, v: usize| 1u64 << pair_index(u.min(v), u.max(v));
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let cross = bit(a, c) | bit(a, d) | bit(b, c) | bit(b, d);
            if mask & cross != 0 {
                continue;
            }
            let base = mask & !bit(a, b) & !bit(c, d);
            out.push(base | bit(a, c) | bit(b, d));
            out.push(base | bit(a, d) | bit(b, c));
        }
    }
    out
}

/// Every labeled copy of each representative, as masks, without duplicates.
fn labeled_copies(reps: &[Graph], n: usize) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    for r in reps {
        let edges = r.edges();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut push = |perm: &[usize]| {
            let mask = edges.iter().fold(0u64, |m, &(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                m | 1 << pair_index(a.min(b), a.max(b))
            });
            if seen.insert(mask) {
                out.push(mask);
            }
        };
        // Heap's algorithm
        push(&perm);
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                push(&perm);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }
    out
}

/// Labeled enumeration of a family for `n <= EXPLICIT_MAX_N`. X and Y are
/// generated from the representatives by all `n!` relabelings; membership in
/// R is decided from masks alone (totality, or one 2-edge swap landing in the
/// other set), without the family's own pair generators.
pub fn quantities_explicit_family(family: &dyn RelationFamily) -> Result<AdversaryQuantities, AdversaryError> {
    let n = family.n();
    if n > EXPLICIT_MAX_N {
        return Err(AdversaryError::UnsupportedSize { n, reason: "labeled enumeration is limited to 11 vertices" });
    }
    let bits = pair_count(n);
    let xs = labeled_copies(family.x_representatives(), n);
    let ys = labeled_copies(family.y_representatives(), n);
    match family.relation() {
        RelationKind::Total => quantities_explicit(bits, &xs, &ys, |_, _| true),
        RelationKind::EdgeSwap => swap_engine(n, bits, xs, ys),
    }
}

fn swap_engine(n: usize, bits: usize, xs: Vec<u64>, ys: Vec<u64>) -> Result<AdversaryQuantities, AdversaryError> {
    if xs.is_empty() || ys.is_empty() {
        return Err(AdversaryError::Degenerate("X or Y is empty"));
    }
    let x_set: HashSet<u64> = xs.iter().copied().collect();
    let y_index: HashMap<u64, u32> = ys.iter().enumerate().map(|(i, &y)| (y, i as u32)).collect();

    // Y pass: m' and every l'_{y,i}, stored compactly.
    let mut ly = vec![0u8; ys.len() * bits];
    let mut m_prime = u64::MAX;
    for (b, &y) in ys.iter().enumerate() {
        let mut deg = 0u64;
        let row = &mut ly[b * bits..(b + 1) * bits];
        for x in swap_outcome_masks(n, y) {
            if !x_set.contains(&x) {
                continue;
            }
            deg += 1;
            for i in Bits(x ^ y) {
                row[i] = row[i].checked_add(1).ok_or(AdversaryError::CountOverflow)?;
            }
        }
        m_prime = m_prime.min(deg);
    }
    drop(x_set);

    // X pass: m, l_{x,i}, and the (l_{x,i}, l'_{y,i}) pairs.
    let mut m = u64::MAX;
    let mut pairs: HashSet<(u64, u64)> = HashSet::new();
    let mut lx = vec![0u64; bits];
    let mut partners: Vec<(u64, u32)> = Vec::new();
    for &x in &xs {
        partners.clear();
        lx.iter_mut().for_each(|c| *c = 0);
        for y in swap_outcome_masks(n, x) {
            if let Some(&b) = y_index.get(&y) {
                partners.push((y, b));
                for i in Bits(x ^ y) {
                    lx[i] += 1;
                }
            }
        }
        m = m.min(partners.len() as u64);
        for &(y, b) in &partners {
            for i in Bits(x ^ y) {
                pairs.insert((lx[i], ly[b as usize * bits + i] as u64));
            }
        }
    }
    AdversaryQuantities::from_counts(m, m_prime, pairs)
}
