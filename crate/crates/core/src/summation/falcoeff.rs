use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Coefficients expressing `j^k` in the binomial basis:
/// `j^k = Σ_i F(k, i) C(j, i)` with `F(k, i) = i! S(k, i)`, `S` the Stirling
/// numbers of the second kind.
///
/// Rows follow `F(k, i) = i (F(k-1, i) + F(k-1, i-1))`, which is the Stirling
/// recurrence `S(k, i) = i S(k-1, i) + S(k-1, i-1)` scaled by `i!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FalcoeffTable {
    rows: Vec<Vec<BigUint>>,
}

impl Default for FalcoeffTable {
    fn default() -> Self {
        FalcoeffTable::new()
    }
}

impl FalcoeffTable {
    /// A table holding row 0 only.
    pub fn new() -> Self {
        FalcoeffTable {
            rows: vec![vec![BigUint::one()]],
        }
    }

    /// No rows at all; usable in statics.
    pub(super) const fn empty() -> Self {
        FalcoeffTable { rows: Vec::new() }
    }

    /// A table holding rows `0..=k`.
    pub fn with_rows(k: usize) -> Self {
        let mut t = FalcoeffTable::new();
        t.extend_to(k);
        t
    }

    /// Appends rows until row `k` exists. Rows are a pure function of `k`,
    /// so repeated or racing extensions produce the same table.
    pub fn extend_to(&mut self, k: usize) {
        while self.rows.len() <= k {
            let prev = self.rows.last().expect("row 0 always present");
            let n = prev.len();
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::zero());
            for i in 1..=n {
                let keep = prev.get(i).cloned().unwrap_or_else(BigUint::zero);
                row.push((keep + &prev[i - 1]) * BigUint::from(i));
            }
            self.rows.push(row);
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, k: usize) -> Option<&[BigUint]> {
        self.rows.get(k).map(Vec::as_slice)
    }

    /// `S(k, i)`, recovered as `F(k, i) / i!`.
    pub fn stirling2(&self, k: usize, i: usize) -> Option<BigUint> {
        let f = self.rows.get(k)?.get(i)?;
        let fact: BigUint = (1..=i).map(BigUint::from).product();
        Some(f / fact)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(row: &[BigUint]) -> Vec<u64> {
        row.iter().map(|v| v.try_into().unwrap()).collect()
    }

    #[test]
    fn leading_rows() {
        let t = FalcoeffTable::with_rows(4);
        assert_eq!(small(t.row(0).unwrap()), [1]);
        assert_eq!(small(t.row(1).unwrap()), [0, 1]);
        assert_eq!(small(t.row(2).unwrap()), [0, 1, 2]);
        assert_eq!(small(t.row(3).unwrap()), [0, 1, 6, 6]);
        assert_eq!(small(t.row(4).unwrap()), [0, 1, 14, 36, 24]);
    }

    #[test]
    fn row_shape_and_diagonal() {
        let t = FalcoeffTable::with_rows(12);
        let mut fact = BigUint::one();
        for k in 0..=12usize {
            if k > 0 {
                fact *= BigUint::from(k);
            }
            let row = t.row(k).unwrap();
            assert_eq!(row.len(), k + 1);
            assert_eq!(row[k], fact);
        }
    }

    #[test]
    fn stirling_recurrence_holds() {
        let t = FalcoeffTable::with_rows(12);
        for k in 1..=12 {
            for i in 1..=k {
                let lhs = t.stirling2(k, i).unwrap();
                let prev = t.stirling2(k - 1, i).unwrap_or_else(BigUint::zero);
                let rhs = BigUint::from(i) * prev + t.stirling2(k - 1, i - 1).unwrap();
                assert_eq!(lhs, rhs, "S({k}, {i})");
            }
        }
    }

    #[test]
    fn rows_expand_powers() {
        // j^k = Σ F(k, i) C(j, i) checked numerically.
        let t = FalcoeffTable::with_rows(8);
        for k in 0..=8usize {
            for j in 0..10u64 {
                let mut total = BigUint::zero();
                for (i, f) in t.row(k).unwrap().iter().enumerate() {
                    total += f * num_integer::binomial(BigUint::from(j), BigUint::from(i));
                }
                assert_eq!(total, BigUint::from(j).pow(k as u32));
            }
        }
    }

    #[test]
    fn extension_is_idempotent() {
        let mut a = FalcoeffTable::with_rows(3);
        a.extend_to(7);
        a.extend_to(5);
        assert_eq!(a, FalcoeffTable::with_rows(7));
    }
}
