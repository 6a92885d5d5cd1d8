//! Closed testing with (robust) Simes local tests in linearithmic time.
//!
//! Hommel's procedure controls the familywise error rate by closed testing
//! every intersection hypothesis with a Simes-type local test. This crate
//! computes its rejections and adjusted p-values without enumerating the
//! `2^m` intersections:
//!
//! 1. [`find_jumps`] locates the jump levels of `h(alpha)`, the largest size
//!    of an intersection that survives the local test, by a divide-and-conquer
//!    search for the column minima of a monotone lower-triangular matrix
//!    (`O(m log m)`).
//! 2. [`adjust_hommel`] turns that schedule into adjusted p-values with a
//!    single two-pointer sweep (`O(m)`).
//!
//! The [`reference`] module holds the slow paths (exhaustive closed testing,
//! quadratic column minima, quadratic adjustment) used to check the fast ones.
//!
//! ```
//! use hommel::{adjust_hommel, adjust_hochberg, find_jumps, PValueStudy, StepWeights, WeightKind};
//!
//! let study = PValueStudy::new(&[0.02, 0.02, 0.03, 0.90]).unwrap();
//! let weights = StepWeights::new(WeightKind::Simes, study.m()).unwrap();
//! let schedule = find_jumps(&study, &weights).unwrap();
//! let hommel = adjust_hommel(&study, &schedule, &weights).unwrap();
//! let hochberg = adjust_hochberg(&study);
//!
//! assert_eq!(hommel.rejections_at(0.05).unwrap().indices(), &[0, 1]);
//! assert!(hochberg.rejections_at(0.05).unwrap().is_empty());
//! ```
//!
//! Hypothesis indices are 0-based throughout the library API; the CLI prints
//! them 1-based.

pub mod adjust;
pub mod bench;
pub mod cli;
mod error;
pub mod jumps;
pub mod reference;
pub mod schedule;
pub mod study;
pub mod weights;

pub use adjust::{
    adjust, adjust_hochberg, adjust_hommel, adjust_hommel_with_stats, reject_hochberg_at,
    reject_hommel_at, AdjustmentResult, Method, RejectionSet, SweepStats,
};
pub use error::{Error, Result};
pub use jumps::{find_jumps, find_jumps_with_stats, JumpStats};
pub use local_test::local_test_rejects;
pub use schedule::{cummax_alpha, h_at, CriticalSchedule};
pub use study::PValueStudy;
pub use weights::{StepWeights, WeightKind};

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}
