use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// `s_k = k`, the Simes local test.
    Simes,
    /// `s_k = k * H_k` with `H_k` the k-th harmonic number; valid under
    /// arbitrary dependence.
    Robust,
}

/// Critical constants `s_0, ..., s_m` of a Simes-type local test, which
/// rejects `H_I` when `s_|I| * p_(i:I) <= i * alpha` for some `i`.
///
/// An extra entry `s_{m+1} = s_m` is kept so that the adjustment sweep can
/// index one past the end.
#[derive(Debug, Clone, PartialEq)]
pub struct StepWeights {
    s: Vec<f64>,
    kind: WeightKind,
}

impl StepWeights {
    pub fn new(kind: WeightKind, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroSize);
        }
        let mut s = Vec::with_capacity(m + 2);
        s.push(0.0);
        match kind {
            WeightKind::Simes => s.extend((1..=m).map(|k| k as f64)),
            WeightKind::Robust => {
                let mut harmonic = 0.0;
                for k in 1..=m {
                    harmonic += 1.0 / k as f64;
                    s.push(k as f64 * harmonic);
                }
            }
        }
        s.push(s[m]);
        Ok(Self { s, kind })
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    /// Number of hypotheses these weights were built for.
    pub fn m(&self) -> usize {
        self.s.len() - 2
    }

    /// All constants, indexed `0..=m+1`.
    pub fn values(&self) -> &[f64] {
        &self.s
    }

    #[inline]
    pub fn get(&self, k: usize) -> f64 {
        self.s[k]
    }

    pub(crate) fn check_size(&self, m: usize) -> Result<()> {
        if self.m() == m {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: m,
                found: self.m(),
            })
        }
    }
}
