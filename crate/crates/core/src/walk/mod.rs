//! Quantum walk search cost model: spectral gaps, the MNRS cost formula,
//! cost plans for the subgraph-detection algorithms, and exponent fitting.
//!
//! All costs are query counts up to constant and polylogarithmic factors,
//! evaluated in double precision.

mod plans;
mod spectral;
mod table;
mod thresholds;

use alloc::vec::Vec;
use thiserror::Error;

use crate::error::GraphError;
use crate::fit::{loglog_fit, Fit};

pub use plans::{
    plan_bipartite, plan_fourcycle, plan_fourcycle_with_budget, plan_paths, plan_pseudosparse, plan_vcbasic, plan_vcdangling, paths_bucket_count,
};
pub use spectral::{
    hamming_gap, hamming_gap_numeric, johnson_gap, johnson_gap_numeric, HAMMING_NUMERIC_MAX_STATES, JOHNSON_NUMERIC_MAX_STATES,
};
pub use table::{exponent_table, fit_sizes, path_exponent, ExponentRow};
pub use thresholds::{edge_threshold, search_all_cost, sparse_detect_cost, sparse_pipeline_cost, Threshold};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("chain has {states} states; the numeric check allows at most {cap}")]
    TooManyStates { states: u64, cap: u64 },
    #[error("pattern has no edges; there is nothing to search for")]
    TrivialPlan,
    #[error("need at least {needed} sizes spanning three decades, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One degree class of stored vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeBucket {
    /// Degree scale; members have degree in `[q/2, 2q]`.
    pub q: f64,
    /// Number of vertices with degree near `q`.
    pub t: f64,
    /// Stored tuple length.
    pub k: f64,
    /// Walk steps per move on this coordinate.
    pub alpha: f64,
}

/// Which checking term a plan carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Checking {
    None,
    /// An edge between the neighborhoods of two stored vertices.
    TwoBucket,
    /// Two such edge searches through the middle bucket.
    ThreeBucket,
    /// A vertex adjacent to two neighbors of the stored vertex.
    AdjacentToTwo,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkPlan {
    /// Ordered so that `t` is non-decreasing.
    pub buckets: Vec<DegreeBucket>,
    pub vc_target: usize,
    pub checking: Checking,
    /// Edge budget `m̄`.
    pub sparsity_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostBreakdown {
    pub plan: WalkPlan,
    pub s: f64,
    pub u: f64,
    pub c: f64,
    pub delta: f64,
    pub epsilon: f64,
    /// `S + (U/√δ + C)/√ε`.
    pub total: f64,
    /// The part of `total` contributed by terms the analysis shows to be of
    /// strictly lower order (for example `C/√ε` in the path plans).
    pub lower_order: f64,
}

impl CostBreakdown {
    fn new(plan: WalkPlan, s: f64, u: f64, c: f64, delta: f64, epsilon: f64, lower_order: f64) -> Result<Self, WalkError> {
        let total = mnrs_cost(s, u, c, delta, epsilon)?;
        Ok(CostBreakdown { plan, s, u, c, delta, epsilon, total, lower_order })
    }

    /// `total` without the lower-order part.
    pub fn leading(&self) -> f64 {
        self.total - self.lower_order
    }

    /// The checking contribution `C/√ε`.
    pub fn checking_overhead(&self) -> f64 {
        self.c / libm::sqrt(self.epsilon)
    }
}

/// `S + (1/√ε)(U/√δ + C)`.
pub fn mnrs_cost(s: f64, u: f64, c: f64, delta: f64, epsilon: f64) -> Result<f64, WalkError> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(WalkError::InvalidParameter("spectral gap must lie in (0, 1]"));
    }
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(WalkError::InvalidParameter("marked fraction must lie in (0, 1]"));
    }
    Ok(s + (u / libm::sqrt(delta) + c) / libm::sqrt(epsilon))
}

/// `1 - max_i (1 - 1/k_i)^{α_i}`, computed without cancellation.
pub fn product_gap(buckets: &[DegreeBucket]) -> Result<f64, WalkError> {
    if buckets.is_empty() {
        return Err(WalkError::InvalidParameter("at least one bucket"));
    }
    let mut gap = f64::INFINITY;
    for b in buckets {
        if b.k < 2.0 || b.alpha < 1.0 {
            return Err(WalkError::InvalidParameter("product gap needs k >= 2 and alpha >= 1"));
        }
        // 1 - (1 - 1/k)^α = -expm1(α ln(1 - 1/k))
        let g = -libm::expm1(b.alpha * libm::log1p(-1.0 / b.k));
        gap = gap.min(g);
    }
    Ok(gap)
}

/// Least-squares slope of `ln cost` against `ln n`. Needs at least five sizes
/// with `max/min >= 1000`.
pub fn fit_exponent(cost: impl Fn(f64) -> Result<f64, WalkError>, n_values: &[f64]) -> Result<Fit, WalkError> {
    let lo = n_values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = n_values.iter().copied().fold(0.0, f64::max);
    if n_values.len() < 5 || !(lo > 0.0) || hi / lo < 1000.0 {
        return Err(WalkError::InsufficientPoints { needed: 5, got: n_values.len() });
    }
    let mut pts = Vec::with_capacity(n_values.len());
    for &n in n_values {
        pts.push((n, cost(n)?));
    }
    loglog_fit(&pts).ok_or(WalkError::InvalidParameter("costs must be positive and finite"))
}

/// Slope of `ln cost` between `n/2` and `n`.
pub fn local_slope(cost: impl Fn(f64) -> Result<f64, WalkError>, n: f64) -> Result<f64, WalkError> {
    let (a, b) = (cost(n / 2.0)?, cost(n)?);
    Ok(libm::log(b / a) / core::f64::consts::LN_2)
}
