use alloc::vec::Vec;
use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::Ratio;

use super::WalkError;

pub const HAMMING_NUMERIC_MAX_STATES: u64 = 200;
pub const JOHNSON_NUMERIC_MAX_STATES: u64 = 200;

/// Gap of the walk on `K`-tuples over `N` symbols that resamples one uniformly
/// chosen coordinate: exactly `1/K`.
pub fn hamming_gap(n: u64, k: u64) -> Result<Ratio<u64>, WalkError> {
    if n < 2 || k < 1 {
        return Err(WalkError::InvalidParameter("hamming chain needs N >= 2 and K >= 1"));
    }
    Ok(Ratio::new(1, k))
}

/// Johnson graph `J(N, K)` simple random walk gap, from the `i = 1` eigenvalue
/// `1 - i(N+1-i)/(K(N-K))`.
pub fn johnson_gap(n: u64, k: u64) -> Result<Ratio<u64>, WalkError> {
    if k < 1 || k >= n {
        return Err(WalkError::InvalidParameter("johnson chain needs 1 <= K < N"));
    }
    Ok(Ratio::new(n, k * (n - k)))
}

fn gap_of(p: DMatrix<f64>) -> f64 {
    let mut ev: Vec<f64> = SymmetricEigen::new(p).eigenvalues.iter().copied().collect();
    ev.sort_unstable_by(|a, b| b.total_cmp(a));
    1.0 - ev[1]
}

/// Builds the `N^K`-state transition matrix and returns one minus its
/// second-largest eigenvalue.
pub fn hamming_gap_numeric(n: u64, k: u64) -> Result<f64, WalkError> {
    hamming_gap(n, k)?;
    let states = n
        .checked_pow(k as u32)
        .filter(|&s| s <= HAMMING_NUMERIC_MAX_STATES)
        .ok_or(WalkError::TooManyStates { states: n.saturating_pow(k.min(64) as u32), cap: HAMMING_NUMERIC_MAX_STATES })?;
    let s = states as usize;
    let digits = |mut x: usize| {
        let mut d = Vec::with_capacity(k as usize);
        for _ in 0..k {
            d.push(x % n as usize);
            x /= n as usize;
        }
        d
    };
    let all: Vec<Vec<usize>> = (0..s).map(digits).collect();
    let (nf, kf) = (n as f64, k as f64);
    let p = DMatrix::from_fn(s, s, |a, b| {
        let diff = all[a].iter().zip(&all[b]).filter(|(x, y)| x != y).count();
        match diff {
            0 => 1.0 / nf,
            1 => 1.0 / (kf * nf),
            _ => 0.0,
        }
    });
    Ok(gap_of(p))
}

/// Simple random walk on the `K`-subsets of `N` (swap one element in, one
/// out), solved numerically.
pub fn johnson_gap_numeric(n: u64, k: u64) -> Result<f64, WalkError> {
    johnson_gap(n, k)?;
    let mut count: u64 = 1;
    for i in 0..k.min(n - k) {
        count = count.saturating_mul(n - i) / (i + 1);
        if count > JOHNSON_NUMERIC_MAX_STATES * (k + 1) {
            break;
        }
    }
    if count > JOHNSON_NUMERIC_MAX_STATES {
        return Err(WalkError::TooManyStates { states: count, cap: JOHNSON_NUMERIC_MAX_STATES });
    }
    let mut sets: Vec<Vec<u64>> = Vec::new();
    let mut cur: Vec<u64> = (0..k).collect();
    loop {
        sets.push(cur.clone());
        // next combination in lexicographic order
        let Some(i) = (0..k as usize).rev().find(|&i| cur[i] < n - k + i as u64) else { break };
        cur[i] += 1;
        for j in i + 1..k as usize {
            cur[j] = cur[j - 1] + 1;
        }
    }
    let deg = (k * (n - k)) as f64;
    let p = DMatrix::from_fn(sets.len(), sets.len(), |a, b| {
        let common = sets[a].iter().filter(|x| sets[b].contains(x)).count() as u64;
        if common + 1 == k {
            1.0 / deg
        } else {
            0.0
        }
    });
    Ok(gap_of(p))
}
