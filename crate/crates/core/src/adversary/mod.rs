//! Adversary lower bounds: exact counts of `m`, `m'`, `l_{x,i}`, `l'_{y,i}`,
//! `l_max` and `v` for relations between yes- and no-instances, computed by
//! symmetry reduction over isomorphism-class representatives and, for small
//! `n`, by brute-force labeled enumeration.

mod explicit;
mod families;
mod symmetric;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use num_rational::Ratio;
use thiserror::Error;

use crate::error::GraphError;
use crate::fit::{loglog_fit, Fit};
use crate::graph::Graph;

pub use explicit::{quantities_explicit, quantities_explicit_family, swap_outcome_masks, EXPLICIT_MAX_N};
pub use families::{family_forest, family_mainlb, family_subgraphlb, swap_outcomes, Forest, MainLb, SubgraphLb};
pub use symmetric::{quantities_symmetric, SymmetricReport, WitnessedTriple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdversaryError {
    #[error("degenerate instance: {0}")]
    Degenerate(&'static str),
    #[error("size n = {n} not supported: {reason}")]
    UnsupportedSize { n: usize, reason: &'static str },
    #[error("need at least {needed} sizes for a scaling fit, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("per-index count exceeds the engine's storage width")]
    CountOverflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How related pairs are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// Every `x` is related to every `y`.
    Total,
    /// `(x, y)` related iff four vertices `a, b, c, d` induce exactly the
    /// edges `ab, cd` in `x` and exactly `ac, bd` in `y`, and the graphs agree
    /// elsewhere.
    EdgeSwap,
}

/// An adversary instance: the sets `X`, `Y` (closed under relabeling, given by
/// representatives) and a relabeling-covariant relation `R`.
///
/// Bit positions follow [`crate::graph::pair_index`].
pub trait RelationFamily {
    fn name(&self) -> String;
    fn n(&self) -> usize;
    fn x_representatives(&self) -> &[Graph];
    fn y_representatives(&self) -> &[Graph];
    fn relation(&self) -> RelationKind;
    fn is_x(&self, g: &Graph) -> bool;
    fn is_y(&self, g: &Graph) -> bool;
    /// All labeled `y` with `(x, y)` in `R`.
    fn related_y(&self, x: &Graph) -> Vec<Graph>;
    /// All labeled `x` with `(x, y)` in `R`.
    fn related_x(&self, y: &Graph) -> Vec<Graph>;
    /// Index `r` of the representative isomorphic to `g` and a map `perm` with
    /// `g = rep_r` relabeled by `perm` (vertex `v` of the rep is `perm[v]` in `g`).
    fn locate_x(&self, g: &Graph) -> Option<(usize, Vec<usize>)>;
    fn locate_y(&self, g: &Graph) -> Option<(usize, Vec<usize>)>;
}

/// Counted adversary quantities and the two bounds derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct AdversaryQuantities {
    pub m: u64,
    pub m_prime: u64,
    pub l_max: u64,
    /// Maximum over related `(x, y)` and differing `i` of
    /// `min(l_{x,i}/m, l'_{y,i}/m')`.
    pub v: Ratio<u64>,
    /// `sqrt(m m' / l_max)`.
    pub quantum_bound: f64,
    /// `1 / v`.
    pub classical_bound: f64,
}

impl AdversaryQuantities {
    /// Builds the record from exact counts and the set of observed
    /// `(l_{x,i}, l'_{y,i})` pairs.
    pub(crate) fn from_counts(m: u64, m_prime: u64, pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, AdversaryError> {
        if m == 0 || m_prime == 0 {
            return Err(AdversaryError::Degenerate("some input has no related partner"));
        }
        let mut l_max = 0u64;
        let mut v = Ratio::new(0u64, 1);
        for (lx, ly) in pairs {
            l_max = l_max.max(lx * ly);
            let cand = Ratio::new(lx, m).min(Ratio::new(ly, m_prime));
            if cand > v {
                v = cand;
            }
        }
        if l_max == 0 {
            return Err(AdversaryError::Degenerate("relation is empty"));
        }
        let quantum_bound = libm::sqrt(m as f64 * m_prime as f64 / l_max as f64);
        let classical_bound = *v.denom() as f64 / *v.numer() as f64;
        Ok(AdversaryQuantities { m, m_prime, l_max, v, quantum_bound, classical_bound })
    }

    /// `quantum_bound^2` as the exact fraction `m m' / l_max`.
    pub fn quantum_bound_squared(&self) -> Ratio<u128> {
        Ratio::new(self.m as u128 * self.m_prime as u128, self.l_max as u128)
    }

    /// Same `m`, `m'`, `l_max` and `v`.
    pub fn same_counts(&self, other: &AdversaryQuantities) -> bool {
        self.m == other.m && self.m_prime == other.m_prime && self.l_max == other.l_max && self.v == other.v
    }
}

/// Slope of `ln(quantum_bound)` against `ln n` over the given sizes, using
/// [`quantities_symmetric`] on the family built for each size.
pub fn scaling_fit<F>(build: F, n_values: &[usize]) -> Result<Fit, AdversaryError>
where
    F: Fn(usize) -> Result<Box<dyn RelationFamily>, AdversaryError>,
{
    if n_values.len() < 4 {
        return Err(AdversaryError::TooFewPoints { needed: 4, got: n_values.len() });
    }
    let mut points = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let family = build(n)?;
        let q = quantities_symmetric(family.as_ref())?.quantities;
        points.push((n as f64, q.quantum_bound));
    }
    loglog_fit(&points).ok_or(AdversaryError::Degenerate("sizes must be distinct"))
}
