use alloc::vec;
use alloc::vec::Vec;

use super::{product_gap, Checking, CostBreakdown, DegreeBucket, WalkError, WalkPlan};
use crate::graph::cover::min_vertex_cover;
use crate::graph::Graph;
use crate::minor_theory::strip_dangling_leaves;

fn check_n(n: f64) -> Result<(), WalkError> {
    if !(n >= 2.0 && n.is_finite()) {
        return Err(WalkError::InvalidParameter("n must be at least 2"));
    }
    Ok(())
}

fn check_c(c: f64) -> Result<(), WalkError> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(WalkError::InvalidParameter("sparsity constant must be positive"));
    }
    Ok(())
}

/// Buckets with `α_i/α_j = k_i/k_j = √(t_i/t_j)`, `α_1 = 1`,
/// `k_1 = √t_1 n^{1/2 - 1/(vc+1)}`, all rounded up (and `k_i >= 2`).
fn choose_buckets(vc: usize, n: f64, t: Option<&[f64]>, mbar: f64) -> Result<Vec<DegreeBucket>, WalkError> {
    let mut ts: Vec<f64> = match t {
        None => vec![n; vc],
        Some(t) if t.len() == vc => t.to_vec(),
        Some(_) => return Err(WalkError::InvalidParameter("need one t value per stored vertex")),
    };
    if ts.iter().any(|&x| !(x >= 1.0 && x <= n)) {
        return Err(WalkError::InvalidParameter("each t must lie in [1, n]"));
    }
    ts.sort_unstable_by(f64::total_cmp);
    let t1 = ts[0];
    let k1 = libm::sqrt(t1) * libm::pow(n, 0.5 - 1.0 / (vc as f64 + 1.0));
    Ok(ts
        .iter()
        .map(|&t| {
            let ratio = libm::sqrt(t / t1);
            DegreeBucket {
                q: (mbar / t).max(1.0),
                t,
                k: libm::ceil(k1 * ratio).max(2.0),
                alpha: libm::ceil(ratio).max(1.0),
            }
        })
        .collect())
}

fn epsilon(buckets: &[DegreeBucket]) -> f64 {
    buckets.iter().map(|b| (b.k / b.t).min(1.0)).product()
}

#[derive(Clone, Copy)]
enum Accounting {
    /// Neighbor lists only.
    Basic,
    /// Neighbor lists plus second-neighbor label flags.
    Dangling,
    /// The flags, with the edge budget folded into both terms.
    Pseudosparse,
}

fn setup_update(buckets: &[DegreeBucket], n: f64, mbar: f64, acc: Accounting) -> (f64, f64) {
    let mut s = 0.0;
    let mut u = 0.0;
    for b in buckets {
        let per = match acc {
            Accounting::Basic => n / libm::sqrt(b.t),
            Accounting::Dangling => n / libm::sqrt(b.t) + libm::sqrt(n * b.q),
            Accounting::Pseudosparse => libm::sqrt(n * mbar) / libm::sqrt(b.t),
        };
        s += b.k * per;
        u += b.alpha * per;
    }
    (s, u)
}

fn zero_check_plan(vc: usize, n: f64, t: Option<&[f64]>, mbar: f64, acc: Accounting) -> Result<CostBreakdown, WalkError> {
    let buckets = choose_buckets(vc, n, t, mbar)?;
    let (s, u) = setup_update(&buckets, n, mbar, acc);
    let delta = product_gap(&buckets)?;
    let eps = epsilon(&buckets);
    let plan = WalkPlan { buckets, vc_target: vc, checking: Checking::None, sparsity_bound: mbar };
    CostBreakdown::new(plan, s, u, 0.0, delta, eps, 0.0)
}

/// Stores a minimum vertex cover of `h` with full neighbor lists; zero
/// checking cost. `t` defaults to `n` for every bucket; the edge budget is `c n`.
pub fn plan_vcbasic(h: &Graph, n: f64, t: Option<&[f64]>, c: f64) -> Result<CostBreakdown, WalkError> {
    check_n(n)?;
    check_c(c)?;
    let vc = min_vertex_cover(h).0;
    if vc == 0 {
        return Err(WalkError::TrivialPlan);
    }
    zero_check_plan(vc, n, t, c * n, Accounting::Basic)
}

/// Vertex cover of `h` with its dangling leaves removed. When nothing of
/// positive cover number is left (stars), one bucket is still walked.
fn dangling_target(h: &Graph) -> Result<usize, WalkError> {
    if h.m() == 0 {
        return Err(WalkError::TrivialPlan);
    }
    let (core, _) = strip_dangling_leaves(h);
    Ok(min_vertex_cover(&core).0.max(1))
}

/// Like [`plan_vcbasic`] for the graph with dangling leaves removed, paying
/// `Σ k_i √(n q_i)` and `Σ α_i √(n q_i)` extra for the label flags.
pub fn plan_vcdangling(h: &Graph, n: f64, t: Option<&[f64]>, c: f64) -> Result<CostBreakdown, WalkError> {
    check_n(n)?;
    check_c(c)?;
    let vc = dangling_target(h)?;
    zero_check_plan(vc, n, t, c * n, Accounting::Dangling)
}

/// Edge budget `mbar >= n` instead of `c n`: setup `√(n m̄) Σ k_i/√t_i` and
/// update `√(n m̄) Σ α_i/√t_i`.
pub fn plan_pseudosparse(h: &Graph, n: f64, mbar: f64) -> Result<CostBreakdown, WalkError> {
    check_n(n)?;
    if !(mbar >= n && mbar.is_finite()) {
        return Err(WalkError::InvalidParameter("edge budget must be at least n"));
    }
    let vc = dangling_target(h)?;
    zero_check_plan(vc, n, None, mbar, Accounting::Pseudosparse)
}

/// Any bipartite pattern on `d` vertices (`d` even): reject above the
/// `K_{d/2,d/2}` edge threshold `c n^{2-2/d}`, then walk with `d/2` buckets
/// under that budget.
pub fn plan_bipartite(d: usize, n: f64, c: f64) -> Result<CostBreakdown, WalkError> {
    check_n(n)?;
    check_c(c)?;
    if d < 2 || !d.is_multiple_of(2) {
        return Err(WalkError::InvalidParameter("bipartite plan needs an even vertex count"));
    }
    let s = (d / 2) as u32;
    let mbar = super::edge_threshold(super::Threshold::Kst { s, t: s }, n, c)?.max(n);
    zero_check_plan(d / 2, n, None, mbar, Accounting::Pseudosparse)
}

/// Number of stored vertices of the path plan with checking, or `None` when
/// the plan is the plain dangling-leaf one.
pub fn paths_bucket_count(k: usize) -> Option<usize> {
    match k {
        7 => Some(2),
        9 | 10 => Some(3),
        k if k > 10 => Some(k.div_ceil(2) - 2),
        _ => None,
    }
}

/// Plan for the `k`-path (k edges). Paths with 7 or at least 9 edges store
/// fewer vertices than a cover and pay for 3-path checks between them.
pub fn plan_paths(k: usize, n: f64, t: Option<&[f64]>, c: f64) -> Result<CostBreakdown, WalkError> {
    if k == 0 {
        return Err(WalkError::InvalidParameter("path must have at least one edge"));
    }
    check_n(n)?;
    check_c(c)?;
    let Some(l) = paths_bucket_count(k) else {
        return plan_vcdangling(&Graph::path(k), n, t, c);
    };
    let mbar = c * n;
    let buckets = choose_buckets(l, n, t, mbar)?;
    let (s, u) = setup_update(&buckets, n, mbar, Accounting::Dangling);
    let kq = |b: &DegreeBucket| libm::sqrt(b.k * b.q);
    let (cost, checking) = if l == 2 {
        (kq(&buckets[0]) * kq(&buckets[1]), Checking::TwoBucket)
    } else {
        (kq(&buckets[1]) * (kq(&buckets[0]) + kq(&buckets[2])), Checking::ThreeBucket)
    };
    let delta = product_gap(&buckets)?;
    let eps = epsilon(&buckets);
    let lower = cost / libm::sqrt(eps);
    let plan = WalkPlan { buckets, vc_target: l, checking, sparsity_bound: mbar };
    CostBreakdown::new(plan, s, u, cost, delta, eps, lower)
}

/// `C_4` search with edge budget `n^{3/2}`.
pub fn plan_fourcycle(n: f64) -> Result<CostBreakdown, WalkError> {
    plan_fourcycle_with_budget(n, libm::pow(n, 1.5))
}

/// Grover search for a vertex of degree near `q` lying on a `C_4`: `S = 0`,
/// `U = n/√t`, `C = √(nq)`, `δ = 1`, `ε = 1/t`, so the cost is
/// `n + √(nqt)`. Worst case over a doubling grid of `t` with `q t = m̄`.
pub fn plan_fourcycle_with_budget(n: f64, mbar: f64) -> Result<CostBreakdown, WalkError> {
    check_n(n)?;
    if !(mbar >= 1.0 && mbar.is_finite()) {
        return Err(WalkError::InvalidParameter("edge budget must be at least 1"));
    }
    let mut t = (mbar / n).max(1.0);
    let mut best: Option<CostBreakdown> = None;
    while t <= n {
        let q = mbar / t;
        let u = n / libm::sqrt(t);
        let c = libm::sqrt(n * q);
        let bucket = DegreeBucket { q, t, k: 1.0, alpha: 1.0 };
        let plan = WalkPlan { buckets: vec![bucket], vc_target: 1, checking: Checking::AdjacentToTwo, sparsity_bound: mbar };
        let cand = CostBreakdown::new(plan, 0.0, u, c, 1.0, 1.0 / t, u * libm::sqrt(t))?;
        if best.as_ref().is_none_or(|b| cand.total > b.total) {
            best = Some(cand);
        }
        t *= 2.0;
    }
    best.ok_or(WalkError::InvalidParameter("edge budget exceeds n^2"))
}
