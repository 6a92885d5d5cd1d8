//! Slow reference paths: exhaustive closed testing, quadratic column minima
//! and a quadratic adjustment. These are the ground truth the fast paths are
//! tested against.

use crate::adjust::{AdjustmentResult, Method, RejectionSet};
use crate::error::{Error, Result};
use crate::local_test::rejects_sorted;
use crate::schedule::CriticalSchedule;
use crate::study::PValueStudy;
use crate::weights::StepWeights;

/// Largest family the exhaustive oracle will enumerate.
pub const ORACLE_LIMIT: usize = 20;
/// Default guard for the quadratic paths.
pub const QUADRATIC_LIMIT: usize = 100_000;

/// Closed testing by brute force: `H_i` is rejected iff the local test
/// rejects every intersection containing `i`.
pub fn closed_testing_oracle(
    study: &PValueStudy,
    weights: &StepWeights,
    alpha: f64,
) -> Result<RejectionSet> {
    crate::check_alpha(alpha)?;
    let m = study.m();
    if m > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what: "exhaustive closed testing",
            m,
            limit: ORACLE_LIMIT,
        });
    }
    weights.check_size(m)?;

    // subsets are bitmasks over sorted ranks, so bit order is value order
    let sorted = study.sorted();
    let full: u32 = (1 << m) - 1;
    let mut survivors: u32 = 0;
    for mask in 1..=full {
        let size = mask.count_ones() as usize;
        let members = (0..m).filter(|&k| mask & (1 << k) != 0).map(|k| sorted[k]);
        if !rejects_sorted(members, weights.get(size), alpha) {
            survivors |= mask;
        }
    }

    let indices = (0..m)
        .filter(|&k| survivors & (1 << k) == 0)
        .map(|k| study.perm()[k])
        .collect();
    Ok(RejectionSet::new(indices, alpha))
}

pub fn naive_column_minima(study: &PValueStudy, weights: &StepWeights) -> Result<CriticalSchedule> {
    naive_column_minima_with_limit(study, weights, QUADRATIC_LIMIT)
}

/// Evaluates every cell `p_r / (r - c + 1)` of the lower-triangular matrix
/// and keeps the first minimum in each column.
pub fn naive_column_minima_with_limit(
    study: &PValueStudy,
    weights: &StepWeights,
    limit: usize,
) -> Result<CriticalSchedule> {
    let m = study.m();
    check_limit("quadratic column minima", m, limit)?;
    weights.check_size(m)?;
    let p = study.sorted();

    let mut alpha_star = vec![0.0; m];
    let mut rows = vec![0; m];
    for col in 0..m {
        let mut best_row = col;
        let mut best = p[col];
        for (row, &pr) in p.iter().enumerate().skip(col + 1) {
            let cell = pr / (row - col + 1) as f64;
            if cell < best {
                best = cell;
                best_row = row;
            }
        }
        let size = m - col;
        alpha_star[size - 1] = (weights.get(size) * best).min(1.0);
        rows[size - 1] = best_row;
    }
    Ok(CriticalSchedule::new(alpha_star, rows, weights.kind()))
}

pub fn quadratic_hommel_adjust(
    study: &PValueStudy,
    weights: &StepWeights,
) -> Result<AdjustmentResult> {
    quadratic_hommel_adjust_with_limit(study, weights, QUADRATIC_LIMIT)
}

/// Adjusted p-values as the smallest level at which `s_{h(a)} p_i <= a`.
///
/// On the stretch where `h = k`, namely `[alpha_{k+1}, alpha_k)`, the rule
/// reads `a >= s_k p_i`, so the smallest rejecting level there is
/// `max(alpha_{k+1}, s_k p_i)` when that lies below `alpha_k`. Taking the
/// minimum over all `m + 1` stretches costs `O(m)` per hypothesis.
pub fn quadratic_hommel_adjust_with_limit(
    study: &PValueStudy,
    weights: &StepWeights,
    limit: usize,
) -> Result<AdjustmentResult> {
    let m = study.m();
    check_limit("quadratic adjustment", m, limit)?;
    let schedule = naive_column_minima_with_limit(study, weights, limit)?;
    let alpha = schedule.alpha();
    let s = weights.values();

    let adjusted = study
        .raw()
        .iter()
        .map(|&p| {
            // h = 0 on [alpha_1, 1]
            let mut best = alpha[0];
            for k in 1..=m {
                let level = alpha[k].max(s[k] * p);
                if level < alpha[k - 1] && level < best {
                    best = level;
                }
            }
            best.min(1.0)
        })
        .collect();
    Ok(AdjustmentResult::new(
        adjusted,
        Method::hommel(weights.kind()),
    ))
}

fn check_limit(what: &'static str, m: usize, limit: usize) -> Result<()> {
    if m > limit {
        Err(Error::TooLarge { what, m, limit })
    } else {
        Ok(())
    }
}
