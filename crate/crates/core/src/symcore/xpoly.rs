use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Degree, Rational};
use crate::error::{Error, Result};

/// Exponent vector of a monomial in `x_1..x_m`; position `i` holds the
/// exponent of `x_{i+1}`. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XMonomial(Vec<u32>);

impl XMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        XMonomial(exponents)
    }

    pub fn one(m: usize) -> Self {
        XMonomial(vec![0; m])
    }

    /// The monomial `x_{index+1}`.
    pub fn var(m: usize, index: usize) -> Result<Self> {
        if index >= m {
            return Err(Error::IndexOutOfRange { index, m });
        }
        let mut exps = vec![0; m];
        exps[index] = 1;
        Ok(XMonomial(exps))
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Non-increasing exponents: the canonical representative of the
    /// monomial's orbit under permutation of the variables.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub(crate) fn mul(&self, other: &XMonomial) -> XMonomial {
        debug_assert_eq!(self.m(), other.m());
        XMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn with_exponent(&self, index: usize, exp: u32) -> XMonomial {
        let mut exps = self.0.clone();
        exps[index] = exp;
        XMonomial(exps)
    }

    fn swapped(&self, i: usize, j: usize) -> XMonomial {
        let mut exps = self.0.clone();
        exps.swap(i, j);
        XMonomial(exps)
    }
}

impl fmt::Debug for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0)
    }
}

/// Sparse polynomial in `m` variables with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPoly {
    m: usize,
    terms: BTreeMap<XMonomial, Rational>,
}

impl XPoly {
    pub fn zero(m: usize) -> Self {
        XPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        let mut p = XPoly::zero(m);
        p.add_term(XMonomial::one(m), c);
        p
    }

    pub fn one(m: usize) -> Self {
        XPoly::constant(m, Rational::one())
    }

    pub fn var(m: usize, index: usize) -> Result<Self> {
        let mut p = XPoly::zero(m);
        p.add_term(XMonomial::var(m, index)?, Rational::one());
        Ok(p)
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(
        m: usize,
        terms: impl IntoIterator<Item = (XMonomial, Rational)>,
    ) -> Result<Self> {
        let mut p = XPoly::zero(m);
        for (mono, c) in terms {
            if mono.m() != m {
                return Err(Error::ExponentLength {
                    expected: m,
                    got: mono.m(),
                });
            }
            p.add_term(mono, c);
        }
        Ok(p)
    }

    pub(crate) fn from_map_unchecked(m: usize, terms: BTreeMap<XMonomial, Rational>) -> Self {
        debug_assert!(terms.iter().all(|(k, c)| k.m() == m && !c.is_zero()));
        XPoly { m, terms }
    }

    pub(crate) fn add_term(&mut self, mono: XMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &XMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|k| k.total_degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    fn check_m(&self, other: &XPoly) -> Result<()> {
        if self.m != other.m {
            return Err(Error::VariableCountMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &XPoly) -> Result<XPoly> {
        self.check_m(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &XPoly) -> Result<XPoly> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &XPoly) -> Result<XPoly> {
        self.check_m(other)?;
        let mut out = XPoly::zero(self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> XPoly {
        XPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> XPoly {
        if c.is_zero() {
            return XPoly::zero(self.m);
        }
        XPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Exchanges the roles of two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<XPoly> {
        for index in [i, j] {
            if index >= self.m {
                return Err(Error::IndexOutOfRange { index, m: self.m });
            }
        }
        Ok(XPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.swapped(i, j), c.clone()))
                .collect(),
        })
    }

    /// Invariance under every adjacent transposition, which generate the
    /// full symmetric group.
    pub fn is_symmetric(&self) -> bool {
        (0..self.m.saturating_sub(1)).all(|i| {
            self.terms
                .iter()
                .all(|(k, c)| self.terms.get(&k.swapped(i, i + 1)) == Some(c))
        })
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<Rational> {
        if point.len() != self.m {
            return Err(Error::ArityMismatch {
                expected: self.m,
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (k, c) in &self.terms {
            let mut v = BigInt::one();
            for (x, &e) in point.iter().zip(k.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            if !v.is_zero() {
                total += c * &Rational::from_integer(v);
            }
        }
        Ok(total)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (m={})", self.m);
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in k.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(m: usize, i: usize) -> XPoly {
        XPoly::var(m, i).unwrap()
    }

    fn int(m: usize, c: i64) -> XPoly {
        XPoly::constant(m, Rational::from(c))
    }

    #[test]
    fn cancellation_prunes_terms() {
        let p = x(2, 0).checked_add(&x(2, 1)).unwrap();
        let r = p.checked_add(&x(2, 1).neg()).unwrap();
        assert_eq!(r, x(2, 0));
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn product_of_variables() {
        let p = x(2, 0).checked_mul(&x(2, 1)).unwrap();
        let expected =
            XPoly::from_terms(2, [(XMonomial::new(vec![1, 1]), Rational::one())]).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn difference_of_squares() {
        let a = x(1, 0).checked_add(&int(1, 1)).unwrap();
        let b = x(1, 0).checked_sub(&int(1, 1)).unwrap();
        let p = a.checked_mul(&b).unwrap();
        let expected = x(1, 0)
            .checked_mul(&x(1, 0))
            .unwrap()
            .checked_sub(&int(1, 1))
            .unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.degree(), Degree::Finite(2));
    }

    #[test]
    fn mismatched_variable_counts() {
        assert_eq!(
            x(2, 0).checked_add(&x(3, 0)),
            Err(Error::VariableCountMismatch { left: 2, right: 3 })
        );
        assert!(x(2, 0).checked_mul(&x(1, 0)).is_err());
        assert!(XPoly::from_terms(2, [(XMonomial::one(3), Rational::one())]).is_err());
    }

    #[test]
    fn zero_degree_and_products() {
        let zero = XPoly::zero(2);
        assert_eq!(zero.degree(), Degree::NegInfinity);
        assert_eq!(
            zero.checked_mul(&x(2, 0)).unwrap().degree(),
            Degree::NegInfinity
        );
        assert!(
            XPoly::from_terms(1, [(XMonomial::one(1), Rational::zero())])
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn symmetry_examples() {
        assert!(x(2, 0).checked_add(&x(2, 1)).unwrap().is_symmetric());
        assert!(!x(2, 0).is_symmetric());
        let sym = XPoly::from_terms(
            2,
            [
                (XMonomial::new(vec![2, 1]), Rational::one()),
                (XMonomial::new(vec![1, 2]), Rational::one()),
            ],
        )
        .unwrap();
        assert!(sym.is_symmetric());
        // Invariant under (1 2) but not under (2 3).
        let partial = x(3, 0).checked_add(&x(3, 1)).unwrap();
        assert!(!partial.is_symmetric());
        assert!(XPoly::zero(4).is_symmetric());
    }

    #[test]
    fn evaluation() {
        let p = x(2, 0)
            .checked_mul(&x(2, 1))
            .unwrap()
            .checked_add(&int(2, 3))
            .unwrap();
        let v = p.evaluate(&[BigInt::from(4), BigInt::from(-2)]).unwrap();
        assert_eq!(v, Rational::from(-5));
        assert!(p.evaluate(&[BigInt::from(1)]).is_err());
    }
}
