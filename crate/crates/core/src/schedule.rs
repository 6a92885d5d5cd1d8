//! Jump levels of `h(alpha)`.
//!
//! `h(alpha)` is the largest size of an intersection hypothesis the local test
//! does not reject at level `alpha`. It is a right-continuous, weakly
//! decreasing step function, fully described by the levels
//! `alpha_i = min { alpha : h(alpha) < i }`.

use crate::weights::WeightKind;

/// Per-size critical levels and the jump levels of `h`.
///
/// Index conventions (0-based storage, 1-based sizes):
/// - `alpha_star()[i - 1]` is the lowest level rejecting the worst-case
///   intersection of size `i` (the `i` largest p-values), clamped to 1;
/// - `alpha()[i - 1]` is `alpha_i`, the running maximum of `alpha_star` over
///   sizes `>= i`, and `alpha()[m]` is the sentinel `alpha_{m+1} = 0`;
/// - `minimizer_rows()[i - 1]` is the sorted rank that attains the minimum
///   behind `alpha_star`, smallest rank on ties.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalSchedule {
    alpha_star: Vec<f64>,
    alpha: Vec<f64>,
    minimizer_rows: Vec<usize>,
    kind: WeightKind,
}

impl CriticalSchedule {
    pub(crate) fn new(alpha_star: Vec<f64>, minimizer_rows: Vec<usize>, kind: WeightKind) -> Self {
        debug_assert_eq!(alpha_star.len(), minimizer_rows.len());
        let alpha = cummax_alpha(&alpha_star);
        Self {
            alpha_star,
            alpha,
            minimizer_rows,
            kind,
        }
    }

    pub fn m(&self) -> usize {
        self.alpha_star.len()
    }

    pub fn alpha_star(&self) -> &[f64] {
        &self.alpha_star
    }

    /// `alpha_1, ..., alpha_m, 0`.
    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn minimizer_rows(&self) -> &[usize] {
        &self.minimizer_rows
    }

    pub fn weights_kind(&self) -> WeightKind {
        self.kind
    }

    /// `h(alpha)`; see [`h_at`].
    pub fn h(&self, alpha: f64) -> usize {
        h_at(self, alpha)
    }
}

/// Running maximum from the right, `alpha_i = max_{j >= i} alpha_star_j`,
/// with the sentinel `0` appended.
pub fn cummax_alpha(alpha_star: &[f64]) -> Vec<f64> {
    let mut alpha = vec![0.0; alpha_star.len() + 1];
    let mut running = 0.0_f64;
    for (slot, &a) in alpha.iter_mut().zip(alpha_star).rev() {
        running = running.max(a);
        *slot = running;
    }
    alpha
}

/// `h(alpha) = max { i : alpha < alpha_i }`, or 0 when no such `i` exists.
///
/// Binary search over the weakly decreasing jump levels.
pub fn h_at(schedule: &CriticalSchedule, alpha: f64) -> usize {
    let m = schedule.m();
    schedule.alpha[..m].partition_point(|&level| alpha < level)
}
