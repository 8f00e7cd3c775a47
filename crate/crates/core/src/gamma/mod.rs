//! `γ_n = T^{n-3}(1)` and its values `h^0(M_{0,n}, ⊗ L_i^{x_i})`.
//!
//! Higher cohomology of these line bundles vanishes for non-negative
//! exponents, so `h^0` agrees with the Euler characteristic and is a
//! polynomial in the exponents. That polynomial is symmetric of degree at
//! most `n - 3`, and is produced here as an element of the σ ring.

mod fixture;
mod oracle;
mod verify;

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::summation::apply_t;
use crate::symcore::{Rational, SigmaPoly};

pub use fixture::{parse_table, reference_table, reference_table_source, render_table};
pub use oracle::{oracle_value, GammaCache};
pub use verify::{
    oracle_cross_check, verify_paper_tables, verify_tables_against, Check, VerificationReport,
};

/// `ITERATES[k] = T^k(1)`.
static ITERATES: Mutex<Vec<SigmaPoly>> = Mutex::new(Vec::new());

/// The symmetric polynomial `γ_n` in the σ basis, `n >= 3`.
pub fn gamma(n: usize) -> Result<SigmaPoly> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    let k = n - 3;
    let mut iterates = ITERATES.lock().unwrap_or_else(|e| e.into_inner());
    if iterates.is_empty() {
        iterates.push(SigmaPoly::one());
    }
    while iterates.len() <= k {
        let next = apply_t(iterates.last().unwrap());
        iterates.push(next);
    }
    Ok(iterates[k].clone())
}

/// `h^0(M_{0,n}, L_1^{x_1} ⊗ ... ⊗ L_n^{x_n})` for non-negative exponents.
pub fn h0(n: usize, x: &[i64]) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    if x.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: x.len(),
        });
    }
    if let Some((index, &value)) = x.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NegativeExponent { index, value });
    }
    to_natural(gamma(n)?.evaluate(x))
}

/// `h^0(M_{0,n}, L_1^x) = C(n - 3 + x, x)`.
pub fn h0_single(n: usize, x: u64) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    let top = BigUint::from(n as u64 - 3 + x);
    Ok(num_integer::binomial(top, BigUint::from(x)))
}

fn to_natural(v: Rational) -> Result<BigUint> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::NotANaturalNumber(v.to_string()));
    }
    Ok(BigInt::to_biguint(v.numer()).expect("non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{Degree, SigmaMonomial};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_gammas() {
        assert_eq!(gamma(3).unwrap(), SigmaPoly::one());
        assert_eq!(gamma(4).unwrap(), SigmaPoly::one() + SigmaPoly::sigma(1));
        let q = |s: &str| s.parse::<Rational>().unwrap();
        let g6 = SigmaPoly::from_terms([
            (SigmaMonomial::one(), q("1")),
            (SigmaMonomial::sigma(1), q("11/6")),
            (SigmaMonomial::from_powers([(1, 2)]), q("1")),
            (SigmaMonomial::sigma(2), q("1")),
            (SigmaMonomial::from_powers([(1, 3)]), q("1/6")),
            (SigmaMonomial::from_powers([(1, 1), (2, 1)]), q("1")),
            (SigmaMonomial::sigma(3), q("2")),
        ]);
        assert_eq!(gamma(6).unwrap(), g6);
        assert_eq!(gamma(2), Err(Error::InvalidN(2)));
    }

    #[test]
    fn degree_and_constant_term() {
        for n in 3..=9 {
            let g = gamma(n).unwrap();
            assert_eq!(g.degree(), Degree::Finite(n as u32 - 3));
            assert!(g.constant_term().is_one());
        }
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0(4, &[1, 2, 3, 4]).unwrap(), big(11));
        assert_eq!(h0(5, &[1, 1, 1, 1, 1]).unwrap(), big(31));
        for n in 3..=8 {
            assert_eq!(h0(n, &vec![0; n]).unwrap(), big(1));
        }
    }

    #[test]
    fn h0_validation() {
        assert_eq!(
            h0(4, &[1, 2, 3]),
            Err(Error::ArityMismatch {
                expected: 4,
                got: 3
            })
        );
        assert_eq!(
            h0(4, &[1, -2, 3, 0]),
            Err(Error::NegativeExponent {
                index: 1,
                value: -2
            })
        );
        assert_eq!(h0(1, &[0]), Err(Error::InvalidN(1)));
    }

    #[test]
    fn single_variable_closed_form() {
        assert_eq!(h0_single(4, 2).unwrap(), big(3));
        assert_eq!(h0_single(3, 5).unwrap(), big(1));
        assert_eq!(h0_single(6, 2).unwrap(), big(10));
        assert_eq!(h0(6, &[2, 0, 0, 0, 0, 0]).unwrap(), big(10));
        assert_eq!(h0(4, &[2, 0, 0, 0]).unwrap(), big(3));
    }
}
