//! Timing harness over squared-uniform p-values.

use std::fmt;
use std::hint::black_box;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjust::{adjust_hochberg, adjust_hommel, AdjustmentResult};
use crate::error::{Error, Result};
use crate::jumps::find_jumps;
use crate::reference::{quadratic_hommel_adjust_with_limit, QUADRATIC_LIMIT};
use crate::study::PValueStudy;
use crate::weights::{StepWeights, WeightKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchMethod {
    HommelFast,
    HommelQuadratic,
    Hochberg,
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 3] = [
        BenchMethod::HommelFast,
        BenchMethod::HommelQuadratic,
        BenchMethod::Hochberg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::HommelFast => "hommel-fast",
            BenchMethod::HommelQuadratic => "hommel-quadratic",
            BenchMethod::Hochberg => "hochberg",
        }
    }
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BenchMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown benchmark method '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub m: usize,
    pub method: BenchMethod,
    /// Mean wall-clock seconds of the adjustment alone.
    pub seconds: f64,
    pub repetitions: usize,
    pub seed: u64,
    /// Mean seconds spent generating inputs, reported apart from `seconds`.
    pub generation_seconds: f64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub methods: Vec<BenchMethod>,
    pub seed: u64,
    pub repetitions: usize,
    pub quadratic_cap: usize,
    /// Lets `hommel-quadratic` run above `quadratic_cap`.
    pub allow_over_cap: bool,
    /// Check fast against quadratic adjusted values before timing, for sizes
    /// within the quadratic guard.
    pub verify: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![1_000, 10_000, 100_000, 1_000_000, 10_000_000],
            methods: BenchMethod::ALL.to_vec(),
            seed: 1,
            repetitions: 3,
            quadratic_cap: QUADRATIC_LIMIT,
            allow_over_cap: false,
            verify: true,
        }
    }
}

/// `m` draws of `U^2` with `U` uniform on `[0, 1)`, deterministic in `seed`.
pub fn gen_squared_uniform(m: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m)
        .map(|_| {
            let u: f64 = rng.random();
            u * u
        })
        .collect()
}

fn run_method(
    method: BenchMethod,
    raw: &[f64],
    quadratic_limit: usize,
) -> Result<AdjustmentResult> {
    let study = PValueStudy::new(raw)?;
    match method {
        BenchMethod::HommelFast => {
            let weights = StepWeights::new(WeightKind::Simes, study.m())?;
            let schedule = find_jumps(&study, &weights)?;
            adjust_hommel(&study, &schedule, &weights)
        }
        BenchMethod::HommelQuadratic => {
            let weights = StepWeights::new(WeightKind::Simes, study.m())?;
            quadratic_hommel_adjust_with_limit(&study, &weights, quadratic_limit)
        }
        BenchMethod::Hochberg => Ok(adjust_hochberg(&study)),
    }
}

/// Runs every `(size, method)` pair sequentially, sizes outermost.
///
/// Repetition `r` of size `m` uses `gen_squared_uniform(m, seed + r)`, so all
/// methods see identical inputs. Timing covers sorting and adjustment only.
pub fn run_benchmark(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if config.sizes.is_empty() || config.methods.is_empty() {
        return Err(Error::EmptyInput);
    }
    let repetitions = config.repetitions.max(1);
    let quadratic_limit = if config.allow_over_cap {
        usize::MAX
    } else {
        config.quadratic_cap
    };
    let wants_quadratic = config.methods.contains(&BenchMethod::HommelQuadratic);
    if wants_quadratic {
        if let Some(&m) = config.sizes.iter().find(|&&m| m > quadratic_limit) {
            return Err(Error::CapExceeded {
                m,
                cap: config.quadratic_cap,
            });
        }
    }

    let mut records = Vec::with_capacity(config.sizes.len() * config.methods.len());
    for &m in &config.sizes {
        if config.verify && wants_quadratic && m <= QUADRATIC_LIMIT {
            let raw = gen_squared_uniform(m, config.seed);
            let fast = run_method(BenchMethod::HommelFast, &raw, quadratic_limit)?;
            let slow = run_method(BenchMethod::HommelQuadratic, &raw, quadratic_limit)?;
            if fast.adjusted() != slow.adjusted() {
                return Err(Error::Mismatch { m });
            }
        }
        for &method in &config.methods {
            let mut timed = Duration::ZERO;
            let mut generation = Duration::ZERO;
            for rep in 0..repetitions {
                let start = Instant::now();
                let raw = gen_squared_uniform(m, config.seed.wrapping_add(rep as u64));
                generation += start.elapsed();

                let start = Instant::now();
                let result = run_method(method, black_box(&raw), quadratic_limit)?;
                timed += start.elapsed();
                black_box(result);
            }
            records.push(BenchRecord {
                m,
                method,
                seconds: timed.as_secs_f64() / repetitions as f64,
                repetitions,
                seed: config.seed,
                generation_seconds: generation.as_secs_f64() / repetitions as f64,
            });
        }
    }
    Ok(records)
}

pub const CSV_HEADER: &str = "m,method,seconds,repetitions,seed";

pub fn write_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.m, r.method, r.seconds, r.repetitions, r.seed
        )?;
    }
    Ok(())
}
