//! Adjusted p-values and rejection sets.
//!
//! For Hommel's procedure, `H_i` is rejected at level `alpha` iff
//! `s_{h(alpha)} * p_i <= alpha`. Given the jump schedule, the adjusted
//! p-value is `min(s_t * p_i, alpha_t)` where `t` is the largest
//! `j in 1..=m+1` with `s_{j-1} * p_i <= alpha_j`. Because `t` can only
//! fall as `p_i` grows, one two-pointer sweep over the sorted p-values finds
//! every `t`.

use std::fmt;

use crate::error::Result;
use crate::jumps::find_jumps;
use crate::schedule::{h_at, CriticalSchedule};
use crate::study::PValueStudy;
use crate::weights::{StepWeights, WeightKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    HommelSimes,
    HommelRobust,
    Hochberg,
}

impl Method {
    pub fn hommel(kind: WeightKind) -> Self {
        match kind {
            WeightKind::Simes => Method::HommelSimes,
            WeightKind::Robust => Method::HommelRobust,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::HommelSimes => "hommel-simes",
            Method::HommelRobust => "hommel-robust",
            Method::Hochberg => "hochberg",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Adjusted p-values in original input order.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjustmentResult {
    adjusted: Vec<f64>,
    method: Method,
}

impl AdjustmentResult {
    pub(crate) fn new(adjusted: Vec<f64>, method: Method) -> Self {
        Self { adjusted, method }
    }

    pub fn adjusted(&self) -> &[f64] {
        &self.adjusted
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn into_adjusted(self) -> Vec<f64> {
        self.adjusted
    }

    /// `{ i : adjusted_i <= alpha }`.
    pub fn rejections_at(&self, alpha: f64) -> Result<RejectionSet> {
        crate::check_alpha(alpha)?;
        let indices = self
            .adjusted
            .iter()
            .enumerate()
            .filter(|(_, &a)| a <= alpha)
            .map(|(i, _)| i)
            .collect();
        Ok(RejectionSet { indices, alpha })
    }
}

/// Original-order (0-based) indices of the hypotheses rejected at `alpha`,
/// ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct RejectionSet {
    indices: Vec<usize>,
    alpha: f64,
}

impl RejectionSet {
    pub(crate) fn new(mut indices: Vec<usize>, alpha: f64) -> Self {
        indices.sort_unstable();
        Self { indices, alpha }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    pub fn is_subset(&self, other: &RejectionSet) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }
}

/// Pointer moves made by the adjustment sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub steps: u64,
}

pub fn adjust_hommel(
    study: &PValueStudy,
    schedule: &CriticalSchedule,
    weights: &StepWeights,
) -> Result<AdjustmentResult> {
    adjust_hommel_with_stats(study, schedule, weights).map(|(result, _)| result)
}

pub fn adjust_hommel_with_stats(
    study: &PValueStudy,
    schedule: &CriticalSchedule,
    weights: &StepWeights,
) -> Result<(AdjustmentResult, SweepStats)> {
    let m = study.m();
    weights.check_size(m)?;
    weights.check_size(schedule.m())?;
    let p = study.sorted();
    let s = weights.values();
    // alpha[j - 1] holds alpha_j for j in 1..=m+1
    let alpha = schedule.alpha();

    let mut by_rank = vec![0.0; m];
    let mut stats = SweepStats::default();
    let mut i = 0;
    let mut j = m + 1;
    while i < m {
        stats.steps += 1;
        if s[j - 1] * p[i] <= alpha[j - 1] {
            // t_i = j
            by_rank[i] = (s[j] * p[i]).min(alpha[j - 1]).min(1.0);
            i += 1;
        } else {
            // s_0 = 0 makes j = 1 always succeed
            j -= 1;
        }
    }

    let result = AdjustmentResult::new(study.unsort(&by_rank), Method::hommel(weights.kind()));
    Ok((result, stats))
}

/// Hommel rejections at `alpha` directly from `h(alpha)`.
pub fn reject_hommel_at(
    study: &PValueStudy,
    schedule: &CriticalSchedule,
    weights: &StepWeights,
    alpha: f64,
) -> Result<RejectionSet> {
    crate::check_alpha(alpha)?;
    weights.check_size(study.m())?;
    weights.check_size(schedule.m())?;
    let scale = weights.get(h_at(schedule, alpha));
    let indices = study
        .raw()
        .iter()
        .enumerate()
        .filter(|(_, &p)| scale * p <= alpha)
        .map(|(i, _)| i)
        .collect();
    Ok(RejectionSet::new(indices, alpha))
}

/// Hochberg's step-up adjustment, `min(1, min_{j >= i} (m - j + 1) p_(j))`.
pub fn adjust_hochberg(study: &PValueStudy) -> AdjustmentResult {
    let m = study.m();
    let p = study.sorted();
    let mut by_rank = vec![0.0; m];
    let mut running = 1.0_f64;
    for rank in (0..m).rev() {
        running = running.min((m - rank) as f64 * p[rank]);
        by_rank[rank] = running;
    }
    AdjustmentResult::new(study.unsort(&by_rank), Method::Hochberg)
}

/// Hochberg rejections at `alpha`: sorted rank `i` is rejected iff some
/// `j >= i` has `(m - j + 1) p_(j) <= alpha`.
pub fn reject_hochberg_at(study: &PValueStudy, alpha: f64) -> Result<RejectionSet> {
    crate::check_alpha(alpha)?;
    let m = study.m();
    let p = study.sorted();
    // the largest qualifying rank decides everything below it
    let cutoff = (0..m)
        .rev()
        .find(|&rank| (m - rank) as f64 * p[rank] <= alpha);
    let indices = match cutoff {
        Some(last) => study.perm()[..=last].to_vec(),
        None => Vec::new(),
    };
    Ok(RejectionSet::new(indices, alpha))
}

/// One-call adjustment of raw p-values.
pub fn adjust(raw: &[f64], method: Method) -> Result<AdjustmentResult> {
    let study = PValueStudy::new(raw)?;
    let kind = match method {
        Method::Hochberg => return Ok(adjust_hochberg(&study)),
        Method::HommelSimes => WeightKind::Simes,
        Method::HommelRobust => WeightKind::Robust,
    };
    let weights = StepWeights::new(kind, study.m())?;
    let schedule = find_jumps(&study, &weights)?;
    adjust_hommel(&study, &schedule, &weights)
}
