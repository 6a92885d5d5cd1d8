//! Jump levels of `h(alpha)` in `O(m log m)`.
//!
//! With p-values sorted ascending, the worst-case intersection of size `i` is
//! rejected from level `s_i * min_k p_{m-i+k} / k` onwards. Those minima are
//! the column minima of the lower-triangular matrix
//!
//! ```text
//! M[r][c] = p_r / (r - c + 1),   r >= c
//! ```
//!
//! whose column-minimum rows are weakly increasing in the column index. The
//! search therefore takes the middle column of a block, scans its rows for
//! the minimum at row `r*`, and splits into the block of columns to the left
//! (rows up to `r*`) and the block to the right (rows from `r*`). Each level
//! of the split touches at most `2m` cells.

use std::collections::VecDeque;

use crate::error::Result;
use crate::schedule::CriticalSchedule;
use crate::study::PValueStudy;
use crate::weights::StepWeights;

/// Work counters from [`find_jumps_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct JumpStats {
    /// Matrix cells evaluated.
    pub cells: u64,
    /// Blocks processed, one per column.
    pub blocks: u64,
}

pub fn find_jumps(study: &PValueStudy, weights: &StepWeights) -> Result<CriticalSchedule> {
    find_jumps_with_stats(study, weights).map(|(schedule, _)| schedule)
}

#[derive(Debug, Clone, Copy)]
struct Block {
    row_lo: usize,
    row_hi: usize,
    col_lo: usize,
    col_hi: usize,
}

pub fn find_jumps_with_stats(
    study: &PValueStudy,
    weights: &StepWeights,
) -> Result<(CriticalSchedule, JumpStats)> {
    let m = study.m();
    weights.check_size(m)?;
    let p = study.sorted();

    let mut alpha_star = vec![0.0; m];
    let mut rows = vec![0; m];
    let mut stats = JumpStats::default();

    // FIFO order visits the blocks level by level.
    let mut queue = VecDeque::new();
    queue.push_back(Block {
        row_lo: 0,
        row_hi: m - 1,
        col_lo: 0,
        col_hi: m - 1,
    });

    while let Some(block) = queue.pop_front() {
        stats.blocks += 1;
        let col = (block.col_lo + block.col_hi) / 2;
        let first = block.row_lo.max(col);

        let mut best_row = first;
        let mut best = p[first] / (first - col + 1) as f64;
        for (row, &pr) in p.iter().enumerate().take(block.row_hi + 1).skip(first + 1) {
            let cell = pr / (row - col + 1) as f64;
            if cell < best {
                best = cell;
                best_row = row;
            }
        }
        stats.cells += (block.row_hi + 1 - first) as u64;

        let size = m - col;
        alpha_star[size - 1] = (weights.get(size) * best).min(1.0);
        rows[size - 1] = best_row;

        if col > block.col_lo {
            queue.push_back(Block {
                row_lo: block.row_lo,
                row_hi: best_row,
                col_lo: block.col_lo,
                col_hi: col - 1,
            });
        }
        if col < block.col_hi {
            queue.push_back(Block {
                row_lo: best_row,
                row_hi: block.row_hi,
                col_lo: col + 1,
                col_hi: block.col_hi,
            });
        }
    }

    let schedule = CriticalSchedule::new(alpha_star, rows, weights.kind());
    Ok((schedule, stats))
}
