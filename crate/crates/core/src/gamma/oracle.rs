use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Memo table for [`oracle_value`], keyed by step count and the exponent
/// vector sorted non-increasingly (the iterates are symmetric functions, so
/// one representative per orbit suffices).
#[derive(Debug, Default, Clone)]
pub struct GammaCache {
    memo: HashMap<(usize, Vec<u64>), BigUint>,
}

impl GammaCache {
    pub fn new() -> Self {
        GammaCache::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn get(&self, k: usize, x: &[u64]) -> Option<&BigUint> {
        self.memo.get(&(k, canonical(x)))
    }

    fn value(&mut self, k: usize, key: Vec<u64>) -> BigUint {
        if k == 0 {
            return BigUint::one();
        }
        if let Some(v) = self.memo.get(&(k, key.clone())) {
            return v.clone();
        }
        let mut total = self.value(k - 1, key.clone());
        // Slots holding equal values contribute equally.
        let mut start = 0;
        while start < key.len() {
            let v = key[start];
            let run = key[start..].iter().take_while(|&&w| w == v).count();
            for j in 0..v {
                let mut next = key.clone();
                next[start] = j;
                next.sort_unstable_by(|a, b| b.cmp(a));
                total += self.value(k - 1, next) * BigUint::from(run);
            }
            start += run;
        }
        self.memo.insert((k, key), total.clone());
        total
    }
}

fn canonical(x: &[u64]) -> Vec<u64> {
    let mut key = x.to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));
    key
}

/// `G_k(x)` from the value recursion `G_0 = 1`,
/// `G_k(x) = G_{k-1}(x) + Σ_i Σ_{j < x_i} G_{k-1}(x with x_i = j)`.
///
/// Equals `γ_{k+3}(x)` when `x` has `k + 3` entries. At least `k + 1` entries
/// are required: every intermediate `T^j(1)` then sits in its stable range.
pub fn oracle_value(k: usize, x: &[u64], cache: &mut GammaCache) -> Result<BigUint> {
    if x.len() < k + 1 {
        return Err(Error::OutsideStableRange {
            required: k + 1,
            m: x.len(),
        });
    }
    Ok(cache.value(k, canonical(x)))
}
