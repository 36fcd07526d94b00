use super::WalkError;

/// Extremal edge counts that force a subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threshold {
    /// `K_{s,t}` with `s <= t`: `c n^{2-1/s}`, constant supplied by the caller.
    Kst { s: u32, t: u32 },
    /// `C_{2l}`: `100 l n^{1+1/l}`.
    BondySimonovits { l: u32 },
}

pub fn edge_threshold(kind: Threshold, n: f64, c_param: f64) -> Result<f64, WalkError> {
    if !(n >= 1.0) {
        return Err(WalkError::InvalidParameter("n must be positive"));
    }
    match kind {
        Threshold::Kst { s, t } => {
            if s < 1 || s > t {
                return Err(WalkError::InvalidParameter("need 1 <= s <= t"));
            }
            if !(c_param > 0.0) {
                return Err(WalkError::InvalidParameter("constant must be positive"));
            }
            Ok(c_param * libm::pow(n, 2.0 - 1.0 / s as f64))
        }
        Threshold::BondySimonovits { l } => {
            if l < 1 {
                return Err(WalkError::InvalidParameter("need l >= 1"));
            }
            Ok(100.0 * l as f64 * libm::pow(n, 1.0 + 1.0 / l as f64))
        }
    }
}

/// Finding all `K` marked items among `N`: `√(NK)`, or `√N` to confirm there
/// are none.
pub fn search_all_cost(n_items: f64, k_marked: f64) -> f64 {
    if k_marked <= 0.0 {
        libm::sqrt(n_items)
    } else {
        libm::sqrt(n_items * k_marked)
    }
}

/// Counting whether more than `c n` of the `n^2` pairs are edges: `√(n/c)`.
pub fn sparse_detect_cost(n: f64, c: f64) -> f64 {
    libm::sqrt(n * n / (c * n))
}

/// Reject dense inputs, then learn every edge of a graph with at most
/// `2 c n` edges: `(detect, extract)` with extract `√(C(n,2) 2cn)`.
pub fn sparse_pipeline_cost(n: f64, c: f64) -> Result<(f64, f64), WalkError> {
    if !(c > 0.0) || !(n >= 2.0) {
        return Err(WalkError::InvalidParameter("need n >= 2 and c > 0"));
    }
    let pairs = n * (n - 1.0) / 2.0;
    Ok((sparse_detect_cost(n, c), search_all_cost(pairs, 2.0 * c * n)))
}
