use crate::error::{Error, Result};

/// A family of p-values together with its sorted view.
///
/// `perm[k]` is the original position of the `k`-th smallest value. Ties keep
/// their input order, so the layout is fully determined by the input.
#[derive(Debug, Clone, PartialEq)]
pub struct PValueStudy {
    raw: Vec<f64>,
    sorted: Vec<f64>,
    perm: Vec<usize>,
}

impl PValueStudy {
    pub fn new(raw: &[f64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some((index, &value)) = raw
            .iter()
            .enumerate()
            .find(|(_, p)| !(p.is_finite() && (0.0..=1.0).contains(*p)))
        {
            return Err(Error::InvalidPValue { index, value });
        }

        // For non-negative floats the bit pattern orders like the value once
        // -0.0 is folded onto 0.0. Sorting (bits, position) is then a stable
        // sort by value on plain integers.
        let mut keys: Vec<(u64, usize)> = raw
            .iter()
            .map(|&p| if p == 0.0 { 0 } else { p.to_bits() })
            .zip(0..)
            .collect();
        keys.sort_unstable();
        let (sorted, perm) = keys
            .into_iter()
            .map(|(bits, pos)| {
                let p = if bits == 0 {
                    raw[pos]
                } else {
                    f64::from_bits(bits)
                };
                (p, pos)
            })
            .unzip();

        Ok(Self {
            raw: raw.to_vec(),
            sorted,
            perm,
        })
    }

    pub fn m(&self) -> usize {
        self.raw.len()
    }

    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Maps values given per sorted rank back to original input order.
    pub fn unsort<T: Copy + Default>(&self, by_rank: &[T]) -> Vec<T> {
        debug_assert_eq!(by_rank.len(), self.m());
        let mut out = vec![T::default(); self.m()];
        for (&pos, &v) in self.perm.iter().zip(by_rank) {
            out[pos] = v;
        }
        out
    }
}
