//! Ordinary least squares on log-log data.

use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual of `ln y` against the fitted line.
    pub residual: f64,
}

/// Fits `ln y = slope * ln x + intercept`. Needs at least two points with
/// distinct `x` and positive values.
pub fn loglog_fit(points: &[(f64, f64)]) -> Option<Fit> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0 || !x.is_finite() || !y.is_finite()) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (libm::log(x), libm::log(y))).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = logs
        .iter()
        .map(|p| {
            let r = p.1 - (slope * p.0 + intercept);
            r * r
        })
        .sum();
    Some(Fit { slope, intercept, residual: libm::sqrt(ss / k) })
}

/// `ln C(n, k)` via `lgamma`, usable far beyond integer range.
pub fn ln_binomial(n: f64, k: f64) -> f64 {
    libm::lgamma(n + 1.0) - libm::lgamma(k + 1.0) - libm::lgamma(n - k + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law() {
        let pts: Vec<(f64, f64)> = (1..8).map(|i| (i as f64, 3.0 * libm::pow(i as f64, 1.5))).collect();
        let f = loglog_fit(&pts).unwrap();
        assert!((f.slope - 1.5).abs() < 1e-12);
        assert!(f.residual < 1e-12);
    }
}
