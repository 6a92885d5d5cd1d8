#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Uniform,
    SquaredUniform,
    /// Few decimal values, including exact 0 and 1.
    DecimalTies,
    /// Few dyadic values, including exact 0 and 1.
    DyadicTies,
}

pub const LAWS: [Law; 4] = [
    Law::Uniform,
    Law::SquaredUniform,
    Law::DecimalTies,
    Law::DyadicTies,
];

const DECIMAL: [f64; 11] = [0.0, 0.001, 0.01, 0.02, 0.03, 0.04, 0.05, 0.1, 0.2, 0.5, 1.0];
const DYADIC: [f64; 11] = [
    0.0,
    1.0 / 256.0,
    1.0 / 128.0,
    3.0 / 256.0,
    1.0 / 64.0,
    1.0 / 32.0,
    1.0 / 16.0,
    1.0 / 8.0,
    1.0 / 4.0,
    1.0 / 2.0,
    1.0,
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn draw(rng: &mut ChaCha8Rng, m: usize, law: Law) -> Vec<f64> {
    (0..m)
        .map(|_| match law {
            Law::Uniform => rng.random::<f64>(),
            Law::SquaredUniform => {
                let u: f64 = rng.random();
                u * u
            }
            Law::DecimalTies => *DECIMAL.choose(rng).unwrap(),
            Law::DyadicTies => *DYADIC.choose(rng).unwrap(),
        })
        .collect()
}

/// `{0, 1/n, ..., 1}`.
pub fn grid(n: usize) -> Vec<f64> {
    (0..=n).map(|k| k as f64 / n as f64).collect()
}
